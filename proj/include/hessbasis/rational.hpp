#pragma once

#include <gmpxx.h>

#include <string>

#include "hessbasis/error.hpp"

namespace hessbasis {

// Arbitrary-precision rational, always kept canonical (lowest terms,
// positive denominator). GMP's mpq_class maintains this through arithmetic;
// only raw construction needs an explicit canonicalize().
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw Error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p" or "p/q" (base 10).
inline Rational parse_rational(const std::string& s) {
    Rational r;
    if (s.empty() || mpq_set_str(r.get_mpq_t(), s.c_str(), 10) != 0)
        throw Error("malformed rational: '" + s + "'");
    if (mpz_sgn(mpq_denref(r.get_mpq_t())) == 0)
        throw Error("rational with zero denominator: '" + s + "'");
    r.canonicalize();
    return r;
}

// Canonical "p" / "p/q" form; round-trips bit-exactly through parse_rational.
inline std::string rational_str(const Rational& r) {
    return r.get_str();
}

inline bool is_integer(const Rational& r) {
    return mpz_cmp_ui(mpq_denref(r.get_mpq_t()), 1) == 0;
}

} // namespace hessbasis
