#pragma once

#include <vector>

#include "hessbasis/group.hpp"
#include "hessbasis/series.hpp"
#include "hessbasis/unipoly.hpp"

namespace hessbasis {

enum class MolienCharacter { Trivial, Sym2 };

// Default truncation order: sum(d_i - 1) + 2. The coinvariant algebra is
// concentrated in degrees <= sum(d_i - 1), so the two-coefficient guard band
// sees every contribution and flags corruption.
unsigned default_truncation(const std::vector<unsigned>& degrees);

// prod_i 1/(1 - t^{d_i}) up to the given order.
TruncSeries invariants_series(const std::vector<unsigned>& degrees, unsigned order);

// Molien's formula summed over a characteristic-polynomial census:
// (1/|W|) sum_g chi(g) / det(Id - t g). For each census class, det(Id - t g)
// is the reversed characteristic polynomial and the Sym^2 character is
// tr(g)^2 - c_{n-2} read off its coefficients. Result demoted to rational
// coefficients.
TruncSeries molien_series(const CharpolyCensus& census, MolienCharacter character,
                          unsigned order);

// Census-free dihedral summation at conductor n: rotations contribute
// (1 + z^{2j} + z^{-2j}) / ((1 - t z^j)(1 - t z^{-j})), the n reflections
// 1/(1 - t^2). Demotion failure signals an internal inconsistency.
TruncSeries molien_dihedral_direct(unsigned n, MolienCharacter character,
                                   unsigned order);

// Direct summation over (signed) cycle types for types A, B, D.
TruncSeries cycle_index_molien(GroupType type, unsigned n, MolienCharacter character,
                               unsigned order);

// Ratio of Poincare series P_t(Sym^2 module)/P_t(invariants) as a
// polynomial with nonnegative integer coefficients summing to
// rank(rank+1)/2; its exponents are the Hessian degrees of a module basis.
struct RatioPolynomial {
    UniPoly poly;
    std::vector<unsigned> degrees;

    std::vector<Rational> coefficients() const;
    // Exponent multiset as (exponent, multiplicity), ascending.
    std::vector<std::pair<unsigned, unsigned>> exponent_multiset() const;
};

// Multiplies the Sym^2 series by prod(1 - t^{d_i}) and reads off the
// polynomial. Enforces: integer nonnegative coefficients, coefficient sum
// n(n+1)/2, constant term >= 1, and a clean guard band above degree
// 2 max(d_i) - 2. Violations throw a "series inconsistency" error.
RatioPolynomial ratio_polynomial(const TruncSeries& sym2_series,
                                 const std::vector<unsigned>& degrees);

// Closed forms for I2/A/B/D, simplified to polynomials by exact division.
RatioPolynomial closed_form_ratio(GroupType type, unsigned n);

// Degree bookkeeping for product groups:
// ratio(W1 x W2) = ratio(W1) + ratio(W2) + (sum t^{d_i-1})(sum t^{e_j-1}).
UniPoly product_ratio(const UniPoly& ratio1, const std::vector<unsigned>& degrees1,
                      const UniPoly& ratio2, const std::vector<unsigned>& degrees2);

// Convenience: census -> sym2 series at the default truncation -> ratio.
RatioPolynomial census_ratio(ReflectionGroup& group, std::uint64_t element_bound);

} // namespace hessbasis
