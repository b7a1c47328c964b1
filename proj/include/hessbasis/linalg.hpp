#pragma once

#include <string>
#include <vector>

#include "hessbasis/cyclo.hpp"

namespace hessbasis {

// Dense matrix over CycloScalar.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, CycloScalar(0)) {}
    static Matrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    CycloScalar& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const CycloScalar& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    Matrix transposed() const;
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    Matrix scaled(const CycloScalar& s) const;
    std::vector<CycloScalar> apply(const std::vector<CycloScalar>& v) const;

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    bool is_identity() const;

    CycloScalar trace() const;
    // Exact determinant, fraction-free (Bareiss) elimination.
    CycloScalar determinant() const;
    // Exact inverse; throws when singular.
    Matrix inverse() const;
    // Monic characteristic polynomial det(x Id - A), Faddeev-LeVerrier.
    class UniPolyRef;

    std::string key() const;
    std::string str() const;

private:
    size_t rows_, cols_;
    std::vector<CycloScalar> a_;
};

class UniPoly;
UniPoly charpoly(const Matrix& a);

enum class SolveStatus { Unique, Inconsistent, Underdetermined };

struct SolveResult {
    SolveStatus status;
    std::vector<CycloScalar> solution;  // valid when status == Unique
};

// Solves A x = b exactly (A may be rectangular; rows >= unknowns allowed).
SolveResult solve_exact(const Matrix& a, const std::vector<CycloScalar>& b);

} // namespace hessbasis
