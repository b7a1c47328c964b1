#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hessbasis/rational.hpp"

namespace hessbasis {

unsigned euler_phi(unsigned m);

// Coefficients of the m-th cyclotomic polynomial, ascending, monic,
// length phi(m)+1. All entries are integers.
const std::vector<Rational>& cyclotomic_coeffs(unsigned m);

// Exact element of the cyclotomic field Q(zeta_m) = Q[x]/(Phi_m), stored as
// coordinates in the power basis 1, z, ..., z^{phi(m)-1}. Conductor 1 is
// plain Q. Values are immutable in spirit: every operation returns a fresh
// value, so sharing across threads is safe.
//
// Mixed-conductor operands lift to the lcm conductor. Results are not
// demoted automatically; try_rational() answers the "is this actually a
// rational?" query.
class CycloScalar {
public:
    CycloScalar() : m_(1), c_(1) {}
    CycloScalar(long v) : m_(1), c_{Rational(v)} {}
    explicit CycloScalar(Rational r) : m_(1), c_{std::move(r)} {}
    CycloScalar(unsigned conductor, std::vector<Rational> coords);

    // z^k at conductor m, reduced mod Phi_m.
    static CycloScalar zeta_power(unsigned m, long k);
    static CycloScalar zeta(unsigned m) { return zeta_power(m, 1); }

    unsigned conductor() const { return m_; }
    const std::vector<Rational>& coords() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    std::optional<Rational> try_rational() const;
    Rational to_rational() const;
    CycloScalar lifted_to(unsigned target_conductor) const;

    CycloScalar operator-() const;
    CycloScalar& operator+=(const CycloScalar& o) { return *this = *this + o; }
    CycloScalar& operator-=(const CycloScalar& o) { return *this = *this - o; }
    CycloScalar& operator*=(const CycloScalar& o) { return *this = *this * o; }

    friend CycloScalar operator+(const CycloScalar& a, const CycloScalar& b);
    friend CycloScalar operator-(const CycloScalar& a, const CycloScalar& b);
    friend CycloScalar operator*(const CycloScalar& a, const CycloScalar& b);

    CycloScalar inverse() const;  // throws Error on zero
    friend CycloScalar operator/(const CycloScalar& a, const CycloScalar& b) {
        return a * b.inverse();
    }

    friend bool operator==(const CycloScalar& a, const CycloScalar& b);
    friend bool operator!=(const CycloScalar& a, const CycloScalar& b) {
        return !(a == b);
    }

    // Canonical serialization "m|c0|c1|..."; equal values at equal conductors
    // give equal keys.
    std::string key() const;
    // Human-readable "c0 + c1*z + ..." form.
    std::string str() const;

private:
    unsigned m_;
    std::vector<Rational> c_;
};

inline CycloScalar fma(const CycloScalar& acc, const CycloScalar& a, const CycloScalar& b) {
    return acc + a * b;
}

} // namespace hessbasis
