#pragma once

#include <vector>

#include "hessbasis/unipoly.hpp"

namespace hessbasis {

// Truncated power series in t: coefficients 0..order, arithmetic closed at
// the truncation order. Reciprocal requires a nonzero constant term.
class TruncSeries {
public:
    explicit TruncSeries(unsigned order) : c_(order + 1, CycloScalar(0)) {}
    static TruncSeries one(unsigned order) {
        TruncSeries s(order);
        s.c_[0] = CycloScalar(1);
        return s;
    }
    static TruncSeries from_poly(const UniPoly& p, unsigned order);

    unsigned order() const { return static_cast<unsigned>(c_.size()) - 1; }
    const CycloScalar& coeff(size_t k) const { return c_.at(k); }
    CycloScalar& coeff(size_t k) { return c_.at(k); }
    const std::vector<CycloScalar>& coeffs() const { return c_; }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    TruncSeries scaled(const CycloScalar& s) const;
    TruncSeries reciprocal() const;

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) {
        return a.c_ == b.c_;
    }

    // True when every coefficient demotes to a plain rational.
    bool all_rational() const;
    // Demote all coefficients to conductor 1; throws if one is irrational.
    TruncSeries demoted() const;

    std::string str() const;

private:
    std::vector<CycloScalar> c_;
};

} // namespace hessbasis
