#pragma once

#include <string>
#include <vector>

#include "hessbasis/invariants.hpp"
#include "hessbasis/molien.hpp"

namespace hessbasis {

// One candidate generator: a basic invariant rho_i or a product
// rho_i rho_j (i <= j). Indices are 0-based.
struct CandidateEntry {
    bool pair = false;
    unsigned i = 0;
    unsigned j = 0;  // == i for singles

    unsigned degree(const std::vector<unsigned>& degrees) const {
        return pair ? degrees.at(i) + degrees.at(j) : degrees.at(i);
    }
    std::string str() const {
        return pair ? "r" + std::to_string(i + 1) + "*r" + std::to_string(j + 1)
                    : "r" + std::to_string(i + 1);
    }
    friend bool operator==(const CandidateEntry& a, const CandidateEntry& b) {
        return a.pair == b.pair && a.i == b.i && a.j == b.j;
    }
    friend bool operator<(const CandidateEntry& a, const CandidateEntry& b) {
        if (a.pair != b.pair) return !a.pair;
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }
};

struct CandidateSet {
    std::vector<CandidateEntry> entries;

    std::string str() const;
    std::vector<unsigned> hessian_degrees(const std::vector<unsigned>& degrees) const;
};

// "r1,r1*r1,r2"
CandidateSet parse_candidate_set(const std::string& text);

// All subsets T of {rho_i} u {rho_i rho_j} whose Hessian-degree generating
// polynomial sum t^{deg-2} equals the ratio, optionally required to contain
// every rho_i. Complete and duplicate-free, deterministic order. An empty
// result is a finding, not an error.
std::vector<CandidateSet> enumerate_candidate_sets(
    const std::vector<unsigned>& degrees, const RatioPolynomial& ratio,
    bool require_all_singles);

// Hess(Q)(v) for a candidate entry. Products use the chain rule
//   Hess(fg)(v) = grad f (x) grad g + grad g (x) grad f
//               + f(v) Hess(g)(v) + g(v) Hess(f)(v),
// so orbit-backed invariants never need expansion.
Matrix point_hessian(const CandidateEntry& entry,
                     const std::vector<BasicInvariant>& invs,
                     const std::vector<CycloScalar>& v);

struct Certificate {
    GroupSpec spec;
    CandidateSet set;
    std::vector<CycloScalar> point;
    CycloScalar determinant;
    bool certified = false;  // determinant != 0
};

// Builds the l x l matrix of upper-triangular point-Hessian entries
// (l = n(n+1)/2) and takes its exact determinant. Requires a certified
// regular vector.
Certificate certify(const GroupSpec& spec, const CandidateSet& set,
                    const std::vector<BasicInvariant>& invs,
                    const RegularVector& v);

// The closed-form classical candidate set: everything except T_0, where T_0
// removes per-degree redundancy (one product per total degree k in the
// stated range; type A also drops the linear rho_1, type D the product
// rho_{n-1} rho_n). t0_pairs selects the removed (i, j) per k (1-based);
// empty means the lexicographically smallest valid choice.
CandidateSet classical_T(GroupType type, unsigned n,
                         const std::vector<std::pair<unsigned, unsigned>>& t0_pairs = {});

// {rho_1, rho_1^2, rho_2}.
CandidateSet dihedral_basis();

// Basis for a product group: both factor sets reindexed plus all cross
// products rho_i psi_j.
CandidateSet product_basis(const CandidateSet& ta, unsigned rank_a,
                           const CandidateSet& tb, unsigned rank_b);

} // namespace hessbasis
