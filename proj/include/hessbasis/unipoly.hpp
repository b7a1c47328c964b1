#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hessbasis/cyclo.hpp"

namespace hessbasis {

// Univariate polynomial in the formal variable t over CycloScalar,
// coefficients ascending, no trailing zeros. degree() of the zero
// polynomial is the sentinel kZeroDegree.
class UniPoly {
public:
    static constexpr int kZeroDegree = -1;

    UniPoly() = default;
    explicit UniPoly(std::vector<CycloScalar> coeffs) : c_(std::move(coeffs)) {
        normalize();
    }
    static UniPoly constant(CycloScalar v);
    static UniPoly monomial(CycloScalar v, unsigned power);
    // x^m - 1
    static UniPoly x_power_minus_one(unsigned m);
    // 1 - t^m
    static UniPoly one_minus_t_power(unsigned m);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<CycloScalar>& coeffs() const { return c_; }
    CycloScalar coeff(size_t k) const {
        return k < c_.size() ? c_[k] : CycloScalar(0);
    }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly scaled(const CycloScalar& s) const;

    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) {
        return !(a == b);
    }

    // Quotient and remainder; divisor must be nonzero.
    static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
    // Division known to be exact; throws on nonzero remainder.
    UniPoly exact_div(const UniPoly& divisor) const;

    CycloScalar eval(const CycloScalar& x) const;

    // Coefficients reversed: t^deg * p(1/t). For a monic charpoly p of g this
    // is det(Id - t g).
    UniPoly reversed() const;

    std::string key() const;
    std::string str(const std::string& var = "t") const;

private:
    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<CycloScalar> c_;
};

// The spec-level constructor: m-th cyclotomic polynomial as a UniPoly
// (monic, degree phi(m), integer coefficients).
UniPoly cyclotomic_polynomial(unsigned m);

} // namespace hessbasis
