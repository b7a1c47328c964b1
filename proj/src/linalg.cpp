#include "hessbasis/linalg.hpp"

#include <sstream>

#include "hessbasis/error.hpp"
#include "hessbasis/unipoly.hpp"

namespace hessbasis {

Matrix Matrix::identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = CycloScalar(1);
    return m;
}

Matrix Matrix::transposed() const {
    Matrix out(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error("matrix product dimension mismatch");
    Matrix out(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
        for (size_t k = 0; k < a.cols_; ++k) {
            const CycloScalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (size_t j = 0; j < b.cols_; ++j) {
                const CycloScalar& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                out.at(i, j) += aik * bkj;
            }
        }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw Error("matrix sum dimension mismatch");
    Matrix out = a;
    for (size_t i = 0; i < out.a_.size(); ++i) out.a_[i] += b.a_[i];
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw Error("matrix difference dimension mismatch");
    Matrix out = a;
    for (size_t i = 0; i < out.a_.size(); ++i) out.a_[i] -= b.a_[i];
    return out;
}

Matrix Matrix::scaled(const CycloScalar& s) const {
    Matrix out = *this;
    for (auto& v : out.a_) v *= s;
    return out;
}

std::vector<CycloScalar> Matrix::apply(const std::vector<CycloScalar>& v) const {
    if (v.size() != cols_) throw Error("matrix apply dimension mismatch");
    std::vector<CycloScalar> out(rows_, CycloScalar(0));
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero() || v[j].is_zero()) continue;
            out[i] += at(i, j) * v[j];
        }
    return out;
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) {
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
        }
    return true;
}

CycloScalar Matrix::trace() const {
    if (rows_ != cols_) throw Error("trace of non-square matrix");
    CycloScalar t(0);
    for (size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

CycloScalar Matrix::determinant() const {
    if (rows_ != cols_) throw Error("determinant of non-square matrix");
    const size_t n = rows_;
    if (n == 0) return CycloScalar(1);
    Matrix m = *this;
    CycloScalar prev(1);
    bool negate = false;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m.at(k, k).is_zero()) {
            size_t pivot = k + 1;
            while (pivot < n && m.at(pivot, k).is_zero()) ++pivot;
            if (pivot == n) return CycloScalar(0);
            for (size_t j = 0; j < n; ++j)
                std::swap(m.at(k, j), m.at(pivot, j));
            negate = !negate;
        }
        const CycloScalar prev_inv = prev.inverse();
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                // Bareiss step: all divisions exact.
                m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) * prev_inv;
            }
            m.at(i, k) = CycloScalar(0);
        }
        prev = m.at(k, k);
    }
    CycloScalar det = m.at(n - 1, n - 1);
    return negate ? -det : det;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw Error("inverse of non-square matrix");
    const size_t n = rows_;
    // Gauss-Jordan on [A | I]; exact field division.
    Matrix m = *this;
    Matrix inv = Matrix::identity(n);
    for (size_t k = 0; k < n; ++k) {
        size_t pivot = k;
        while (pivot < n && m.at(pivot, k).is_zero()) ++pivot;
        if (pivot == n) throw Error("matrix is singular");
        if (pivot != k)
            for (size_t j = 0; j < n; ++j) {
                std::swap(m.at(k, j), m.at(pivot, j));
                std::swap(inv.at(k, j), inv.at(pivot, j));
            }
        const CycloScalar piv_inv = m.at(k, k).inverse();
        for (size_t j = 0; j < n; ++j) {
            m.at(k, j) *= piv_inv;
            inv.at(k, j) *= piv_inv;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == k || m.at(i, k).is_zero()) continue;
            const CycloScalar f = m.at(i, k);
            for (size_t j = 0; j < n; ++j) {
                m.at(i, j) -= f * m.at(k, j);
                inv.at(i, j) -= f * inv.at(k, j);
            }
        }
    }
    return inv;
}

UniPoly charpoly(const Matrix& a) {
    if (a.rows() != a.cols()) throw Error("charpoly of non-square matrix");
    const size_t n = a.rows();
    // Faddeev-LeVerrier: c[n] = 1; M_1 = A; c[n-k] = -tr(A M_k)/k,
    // M_{k+1} = A (M_k + c[n-k] Id).
    std::vector<CycloScalar> c(n + 1, CycloScalar(0));
    c[n] = CycloScalar(1);
    Matrix mk = a;
    for (size_t k = 1; k <= n; ++k) {
        CycloScalar tr = mk.trace();
        c[n - k] = -(tr * CycloScalar(Rational(1, static_cast<long>(k))));
        if (k == n) break;
        Matrix shifted = mk;
        for (size_t i = 0; i < n; ++i) shifted.at(i, i) += c[n - k];
        mk = a * shifted;
    }
    return UniPoly(std::move(c));
}

SolveResult solve_exact(const Matrix& a, const std::vector<CycloScalar>& b) {
    if (b.size() != a.rows()) throw Error("solve dimension mismatch");
    const size_t rows = a.rows(), cols = a.cols();
    // Fraction-free (Bareiss) forward elimination on the augmented matrix,
    // then back substitution with exact division.
    Matrix m(rows, cols + 1);
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) m.at(i, j) = a.at(i, j);
        m.at(i, cols) = b[i];
    }
    std::vector<size_t> pivot_col;
    CycloScalar prev(1);
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t pivot = row;
        while (pivot < rows && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == rows) continue;
        if (pivot != row)
            for (size_t j = 0; j <= cols; ++j)
                std::swap(m.at(row, j), m.at(pivot, j));
        const CycloScalar prev_inv = prev.inverse();
        for (size_t i = row + 1; i < rows; ++i) {
            for (size_t j = col + 1; j <= cols; ++j)
                m.at(i, j) =
                    (m.at(i, j) * m.at(row, col) - m.at(i, col) * m.at(row, j)) * prev_inv;
            m.at(i, col) = CycloScalar(0);
        }
        prev = m.at(row, col);
        pivot_col.push_back(col);
        ++row;
    }
    // Rows beyond the rank must have zero right-hand side.
    for (size_t i = row; i < rows; ++i)
        if (!m.at(i, cols).is_zero()) return {SolveStatus::Inconsistent, {}};
    if (pivot_col.size() < cols) return {SolveStatus::Underdetermined, {}};

    std::vector<CycloScalar> x(cols, CycloScalar(0));
    for (size_t r = pivot_col.size(); r-- > 0;) {
        const size_t col = pivot_col[r];
        CycloScalar acc = m.at(r, cols);
        for (size_t j = col + 1; j < cols; ++j)
            acc -= m.at(r, j) * x[j];
        x[col] = acc / m.at(r, col);
    }
    return {SolveStatus::Unique, std::move(x)};
}

std::string Matrix::key() const {
    std::string out = std::to_string(rows_) + "x" + std::to_string(cols_);
    for (const auto& v : a_) {
        out += '#';
        out += v.key();
    }
    return out;
}

std::string Matrix::str() const {
    std::ostringstream os;
    for (size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "[");
        for (size_t j = 0; j < cols_; ++j) {
            if (j) os << ", ";
            os << at(i, j).str();
        }
    }
    os << "]";
    return os.str();
}

} // namespace hessbasis
