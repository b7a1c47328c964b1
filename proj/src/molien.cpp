#include "hessbasis/molien.hpp"

#include <algorithm>
#include <functional>

#include "hessbasis/error.hpp"

namespace hessbasis {

unsigned default_truncation(const std::vector<unsigned>& degrees) {
    unsigned s = 2;
    for (unsigned d : degrees) s += d - 1;
    return s;
}

TruncSeries invariants_series(const std::vector<unsigned>& degrees, unsigned order) {
    TruncSeries acc = TruncSeries::one(order);
    for (unsigned d : degrees)
        acc = acc * TruncSeries::from_poly(UniPoly::one_minus_t_power(d), order).reciprocal();
    return acc;
}

namespace {

CycloScalar sym2_character(const UniPoly& charpoly, unsigned n) {
    // chi(g) = (tr(g^2) + tr(g)^2)/2 with tr(g) = -c_{n-1},
    // tr(g^2) = tr(g)^2 - 2 c_{n-2}; together chi = c_{n-1}^2 - c_{n-2}.
    CycloScalar cn1 = n >= 1 ? charpoly.coeff(n - 1) : CycloScalar(0);
    CycloScalar cn2 = n >= 2 ? charpoly.coeff(n - 2) : CycloScalar(0);
    return cn1 * cn1 - cn2;
}

TruncSeries demote_or_throw(const TruncSeries& s, const std::string& what) {
    if (!s.all_rational())
        throw Error("internal consistency: non-rational coefficient in " + what);
    return s.demoted();
}

} // namespace

TruncSeries molien_series(const CharpolyCensus& census, MolienCharacter character,
                          unsigned order) {
    if (census.entries.empty()) throw Error("molien_series: empty census");
    if (order < 1) throw Error("molien_series: order must be >= 1");
    const unsigned n = census.rank;
    TruncSeries acc(order);
    std::uint64_t total = 0;
    for (const auto& entry : census.entries) {
        // det(Id - t g) has the charpoly coefficients reversed.
        const TruncSeries det =
            TruncSeries::from_poly(entry.charpoly.reversed(), order);
        TruncSeries term = det.reciprocal();
        if (character == MolienCharacter::Sym2) {
            CycloScalar chi = sym2_character(entry.charpoly, n);
            if (chi.is_zero()) continue;
            term = term.scaled(chi);
        }
        acc = acc + term.scaled(CycloScalar(Rational(static_cast<long>(entry.multiplicity))));
        total += entry.multiplicity;
    }
    acc = acc.scaled(CycloScalar(Rational(1, static_cast<long>(total))));
    return demote_or_throw(acc, "census Molien sum");
}

TruncSeries molien_dihedral_direct(unsigned n, MolienCharacter character,
                                   unsigned order) {
    if (n < 2) throw Error("dihedral Molien needs n >= 2");
    TruncSeries acc(order);
    for (unsigned j = 0; j < n; ++j) {
        // det(Id - t a^j) = (1 - t z^j)(1 - t z^{-j})
        const CycloScalar zj = CycloScalar::zeta_power(n, j);
        const CycloScalar zmj = CycloScalar::zeta_power(n, -(long)j);
        UniPoly det(std::vector<CycloScalar>{CycloScalar(1), -(zj + zmj), CycloScalar(1)});
        TruncSeries term = TruncSeries::from_poly(det, order).reciprocal();
        if (character == MolienCharacter::Sym2) {
            const CycloScalar chi = CycloScalar(1) + CycloScalar::zeta_power(n, 2 * (long)j) +
                                    CycloScalar::zeta_power(n, -2 * (long)j);
            term = term.scaled(chi);
        }
        acc = acc + term;
    }
    // n reflections: det = 1 - t^2, tr(Sym^2) = 1.
    TruncSeries refl =
        TruncSeries::from_poly(UniPoly::one_minus_t_power(2), order).reciprocal();
    acc = acc + refl.scaled(CycloScalar(static_cast<long>(n)));
    acc = acc.scaled(CycloScalar(Rational(1, 2l * n)));
    return demote_or_throw(acc, "dihedral Molien sum");
}

namespace {

Rational factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Rational pow2(unsigned e) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, e);
    return Rational(p);
}

Rational binom2(unsigned k) { return Rational(static_cast<long>(k) * (k - 1) / 2); }

// All cycle types (k_1..k_n), sum i*k_i = n.
void enumerate_partitions(unsigned n, unsigned i, std::vector<unsigned>& k,
                          const std::function<void(const std::vector<unsigned>&)>& emit) {
    if (n == 0) {
        emit(k);
        return;
    }
    if (i > n) return;
    for (unsigned c = 0; c * i <= n; ++c) {
        k[i - 1] = c;
        enumerate_partitions(n - c * i, i + 1, k, emit);
    }
    k[i - 1] = 0;
}

// Signed cycle types ((k_1^+, k_1^-), ...), sum i*(k_i^+ + k_i^-) = n.
void enumerate_signed(unsigned n, unsigned i, std::vector<unsigned>& kp,
                      std::vector<unsigned>& km,
                      const std::function<void(const std::vector<unsigned>&,
                                               const std::vector<unsigned>&)>& emit) {
    if (n == 0) {
        emit(kp, km);
        return;
    }
    if (i > n) return;
    for (unsigned cp = 0; cp * i <= n; ++cp)
        for (unsigned cm = 0; (cp + cm) * i <= n; ++cm) {
            kp[i - 1] = cp;
            km[i - 1] = cm;
            enumerate_signed(n - (cp + cm) * i, i + 1, kp, km, emit);
        }
    kp[i - 1] = 0;
    km[i - 1] = 0;
}

} // namespace

TruncSeries cycle_index_molien(GroupType type, unsigned n, MolienCharacter character,
                               unsigned order) {
    if (type != GroupType::A && type != GroupType::B && type != GroupType::D)
        throw Error("cycle_index_molien: type must be A, B or D");
    if (n < 1 || (type == GroupType::D && n < 2))
        throw Error("cycle_index_molien: rank too small");
    TruncSeries acc(order);
    const bool sym2 = character == MolienCharacter::Sym2;

    if (type == GroupType::A) {
        std::vector<unsigned> k(n, 0);
        enumerate_partitions(n, 1, k, [&](const std::vector<unsigned>& kk) {
            // Class size n! / prod(i^{k_i} k_i!).
            Rational weight = factorial(n);
            UniPoly det = UniPoly::constant(CycloScalar(1));
            for (unsigned i = 1; i <= n; ++i) {
                for (unsigned c = 0; c < kk[i - 1]; ++c) {
                    weight /= static_cast<long>(i);
                    det = det * UniPoly::one_minus_t_power(i);
                }
                weight /= factorial(kk[i - 1]);
            }
            Rational chi(1);
            if (sym2) {
                const unsigned k1 = kk[0], k2 = n >= 2 ? kk[1] : 0;
                chi = Rational(static_cast<long>(k1) * (k1 + 1) / 2 + k2);
            }
            if (chi == 0) return;
            TruncSeries term = TruncSeries::from_poly(det, order).reciprocal();
            acc = acc + term.scaled(CycloScalar(weight * chi));
        });
        acc = acc.scaled(CycloScalar(1 / factorial(n)));
        return demote_or_throw(acc, "type A cycle index sum");
    }

    const bool type_d = type == GroupType::D;
    std::vector<unsigned> kp(n, 0), km(n, 0);
    enumerate_signed(n, 1, kp, km, [&](const std::vector<unsigned>& p,
                                       const std::vector<unsigned>& m) {
        unsigned cycles = 0, negatives = 0;
        for (unsigned i = 0; i < n; ++i) {
            cycles += p[i] + m[i];
            negatives += m[i];
        }
        if (type_d && negatives % 2 != 0) return;
        // Class size 2^{n - #cycles} n! / prod(i^{k_i} k_i^+! k_i^-!).
        Rational weight = pow2(n - cycles) * factorial(n);
        UniPoly det = UniPoly::constant(CycloScalar(1));
        for (unsigned i = 1; i <= n; ++i) {
            for (unsigned c = 0; c < p[i - 1] + m[i - 1]; ++c)
                weight /= static_cast<long>(i);
            weight /= factorial(p[i - 1]) * factorial(m[i - 1]);
            for (unsigned c = 0; c < p[i - 1]; ++c)
                det = det * UniPoly::one_minus_t_power(i);
            for (unsigned c = 0; c < m[i - 1]; ++c) {
                UniPoly plus(std::vector<CycloScalar>(0));
                plus = UniPoly::constant(CycloScalar(1)) +
                       UniPoly::monomial(CycloScalar(1), i);
                det = det * plus;
            }
        }
        Rational chi(1);
        if (sym2) {
            const unsigned k1p = p[0], k1m = m[0];
            const unsigned k2p = n >= 2 ? p[1] : 0, k2m = n >= 2 ? m[1] : 0;
            chi = Rational(static_cast<long>(k1p) + k1m) + binom2(k1p) + binom2(k1m) +
                  Rational(static_cast<long>(k2p)) -
                  Rational(static_cast<long>(k1p) * k1m) -
                  Rational(static_cast<long>(k2m));
        }
        if (chi == 0) return;
        TruncSeries term = TruncSeries::from_poly(det, order).reciprocal();
        acc = acc + term.scaled(CycloScalar(weight * chi));
    });
    Rational group_order = pow2(type_d ? n - 1 : n) * factorial(n);
    acc = acc.scaled(CycloScalar(1 / group_order));
    return demote_or_throw(acc, "signed cycle index sum");
}

std::vector<Rational> RatioPolynomial::coefficients() const {
    std::vector<Rational> out;
    for (int k = 0; k <= poly.degree(); ++k)
        out.push_back(poly.coeff(static_cast<size_t>(k)).to_rational());
    return out;
}

std::vector<std::pair<unsigned, unsigned>> RatioPolynomial::exponent_multiset() const {
    std::vector<std::pair<unsigned, unsigned>> out;
    for (int k = 0; k <= poly.degree(); ++k) {
        const Rational c = poly.coeff(static_cast<size_t>(k)).to_rational();
        if (c != 0)
            out.emplace_back(static_cast<unsigned>(k),
                             static_cast<unsigned>(c.get_num().get_ui()));
    }
    return out;
}

RatioPolynomial ratio_polynomial(const TruncSeries& sym2_series,
                                 const std::vector<unsigned>& degrees) {
    const unsigned order = sym2_series.order();
    if (order < default_truncation(degrees))
        throw Error("ratio_polynomial: truncation order too small for guard band");
    TruncSeries numer = sym2_series;
    for (unsigned d : degrees)
        numer = numer * TruncSeries::from_poly(UniPoly::one_minus_t_power(d), order);

    const unsigned n = static_cast<unsigned>(degrees.size());
    const unsigned dmax = *std::max_element(degrees.begin(), degrees.end());
    const unsigned degree_cap = 2 * dmax - 2;

    std::vector<CycloScalar> coeffs;
    Rational sum(0);
    for (unsigned k = 0; k <= order; ++k) {
        auto r = numer.coeff(k).try_rational();
        if (!r || !is_integer(*r) || *r < 0)
            throw Error("series inconsistency: ratio coefficient at t^" +
                        std::to_string(k) + " is not a nonnegative integer");
        if (k > degree_cap && *r != 0)
            throw Error("series inconsistency: nonzero guard coefficient at t^" +
                        std::to_string(k));
        if (k <= degree_cap) coeffs.push_back(CycloScalar(*r));
        sum += *r;
    }
    if (sum != Rational(static_cast<long>(n) * (n + 1) / 2))
        throw Error("series inconsistency: ratio coefficient sum " + sum.get_str() +
                    " != n(n+1)/2");
    UniPoly poly{std::move(coeffs)};
    if (poly.coeff(0).is_zero() || poly.coeff(0).to_rational() < 1)
        throw Error("series inconsistency: ratio constant term < 1");
    return {std::move(poly), degrees};
}

RatioPolynomial closed_form_ratio(GroupType type, unsigned n) {
    auto one_minus = [](unsigned e) { return UniPoly::one_minus_t_power(e); };
    UniPoly numer, denom;
    std::vector<unsigned> degrees;
    switch (type) {
        case GroupType::I2: {
            if (n < 2) throw Error("closed_form_ratio: I2 needs n >= 2");
            UniPoly p = UniPoly::constant(CycloScalar(1)) +
                        UniPoly::monomial(CycloScalar(1), 2) +
                        UniPoly::monomial(CycloScalar(1), n - 2);
            return {std::move(p), GroupSpec::I2(n).degrees()};
        }
        case GroupType::A:
            if (n < 1) throw Error("closed_form_ratio: A needs n >= 1");
            numer = one_minus(n) * one_minus(2) + one_minus(n - 1) * one_minus(n);
            denom = one_minus(1) * one_minus(2);
            degrees = GroupSpec::classical(GroupType::A, n).degrees();
            break;
        case GroupType::B:
            if (n < 1) throw Error("closed_form_ratio: B needs n >= 1");
            numer = one_minus(2 * n) * one_minus(4) +
                    UniPoly::monomial(CycloScalar(1), 2) * one_minus(2 * n - 2) *
                        one_minus(2 * n);
            denom = one_minus(2) * one_minus(4);
            degrees = GroupSpec::classical(GroupType::B, n).degrees();
            break;
        case GroupType::D: {
            if (n < 2) throw Error("closed_form_ratio: D needs n >= 2");
            UniPoly t2_tn2 = UniPoly::monomial(CycloScalar(1), 2) +
                             UniPoly::monomial(CycloScalar(1), n - 2);
            numer = one_minus(2 * n) * one_minus(4) +
                    t2_tn2 * one_minus(2 * n - 2) * one_minus(n);
            denom = one_minus(2) * one_minus(4);
            degrees = GroupSpec::classical(GroupType::D, n).degrees();
            break;
        }
        default:
            throw Error("closed_form_ratio: no closed form for " + type_name(type));
    }
    return {numer.exact_div(denom), std::move(degrees)};
}

UniPoly product_ratio(const UniPoly& ratio1, const std::vector<unsigned>& degrees1,
                      const UniPoly& ratio2, const std::vector<unsigned>& degrees2) {
    UniPoly cross1, cross2;
    for (unsigned d : degrees1)
        cross1 = cross1 + UniPoly::monomial(CycloScalar(1), d - 1);
    for (unsigned d : degrees2)
        cross2 = cross2 + UniPoly::monomial(CycloScalar(1), d - 1);
    return ratio1 + ratio2 + cross1 * cross2;
}

RatioPolynomial census_ratio(ReflectionGroup& group, std::uint64_t element_bound) {
    const auto degrees = group.spec().degrees();
    const unsigned order = default_truncation(degrees);
    const TruncSeries sym2 =
        molien_series(group.census(element_bound), MolienCharacter::Sym2, order);
    return ratio_polynomial(sym2, degrees);
}

} // namespace hessbasis
