#pragma once

#include <map>
#include <string>
#include <vector>

#include "hessbasis/cyclo.hpp"
#include "hessbasis/linalg.hpp"

namespace hessbasis {

using Exponents = std::vector<unsigned>;

// Graded lexicographic: lower total degree first, lex within a degree.
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse multivariate polynomial over CycloScalar in a fixed number of
// variables. No zero coefficients are stored; term order is graded lex,
// which doubles as the canonical serialization order.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, CycloScalar, GradedLexLess>;

    explicit MultiPoly(unsigned nvars = 0) : n_(nvars) {}
    static MultiPoly constant(unsigned nvars, CycloScalar v);
    static MultiPoly variable(unsigned nvars, unsigned index);
    // Linear polynomial sum_j w_j x_j.
    static MultiPoly linear(const std::vector<CycloScalar>& w);

    unsigned nvars() const { return n_; }
    const TermMap& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    // Max total exponent; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;

    void add_term(const Exponents& exp, const CycloScalar& c);

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly scaled(const CycloScalar& s) const;
    MultiPoly pow(unsigned e) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.n_ == b.n_ && a.t_ == b.t_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) {
        return !(a == b);
    }

    MultiPoly derivative(unsigned var) const;
    CycloScalar evaluate(const std::vector<CycloScalar>& point) const;
    // p(M x): substitute x_i <- sum_j M(i,j) x_j.
    MultiPoly substitute_linear(const Matrix& m) const;
    // Split into homogeneous components, keyed by total degree.
    std::map<unsigned, MultiPoly> homogeneous_components() const;

    std::string key() const;
    std::string str(const std::string& stem = "x") const;

private:
    unsigned n_;
    TermMap t_;
};

// Symmetric matrix of polynomials: upper-triangular entries (a, b), a <= b,
// stored row-major. A polynomial symmetric 2-tensor field.
class SymTensorPoly {
public:
    explicit SymTensorPoly(unsigned nvars = 0)
        : n_(nvars), e_(nvars * (nvars + 1) / 2, MultiPoly(nvars)) {}

    unsigned nvars() const { return n_; }
    size_t entry_count() const { return e_.size(); }
    static size_t index(unsigned n, unsigned a, unsigned b);

    const MultiPoly& at(unsigned a, unsigned b) const;
    void set(unsigned a, unsigned b, MultiPoly p);
    const std::vector<MultiPoly>& entries() const { return e_; }

    friend SymTensorPoly operator+(const SymTensorPoly& a, const SymTensorPoly& b);
    friend SymTensorPoly operator-(const SymTensorPoly& a, const SymTensorPoly& b);
    SymTensorPoly scaled_poly(const MultiPoly& f) const;
    SymTensorPoly scaled(const CycloScalar& s) const;

    friend bool operator==(const SymTensorPoly& a, const SymTensorPoly& b) {
        return a.n_ == b.n_ && a.e_ == b.e_;
    }

    bool is_zero() const;
    // True when every entry is homogeneous of total degree d (or zero).
    bool homogeneous_of_degree(unsigned d) const;
    std::map<unsigned, SymTensorPoly> homogeneous_components() const;

    // g^T sigma(g x) g: the pullback of the tensor field by the linear map g.
    SymTensorPoly pullback(const Matrix& g) const;

private:
    unsigned n_;
    std::vector<MultiPoly> e_;
};

using LinearForm = std::vector<CycloScalar>;

// Symbolic Hessian d^2 p / dx_a dx_b as a symmetric tensor.
SymTensorPoly hessian_sym(const MultiPoly& p);

// Entrywise evaluation of a tensor at a point; returns the full symmetric
// matrix.
Matrix tensor_eval(const SymTensorPoly& sigma, const std::vector<CycloScalar>& v);

std::vector<CycloScalar> gradient_at(const MultiPoly& p,
                                     const std::vector<CycloScalar>& v);

} // namespace hessbasis
