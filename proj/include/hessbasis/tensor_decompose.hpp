#pragma once

#include <vector>

#include "hessbasis/hessian_basis.hpp"

namespace hessbasis {

// Exact generator test for membership in the module of equivariant
// symmetric 2-tensors: g^T sigma(g x) g = sigma(x) for every generator.
bool check_equivariance(const SymTensorPoly& sigma, const ReflectionGroup& group);

// All exponent tuples e with sum e_i * d_i = d (monomials rho^e of weighted
// degree d in a free invariant ring with generator degrees d_i).
std::vector<Exponents> invariant_monomial_basis(const std::vector<unsigned>& degrees,
                                                unsigned d);

// sigma = sum_i a_i Hess(Q_i) with a_i polynomial in the abstract invariant
// variables y_1..y_n (a_i(y) evaluated at y_k = rho_k reproduces sigma when
// residual is false). residual = true means the degreewise linear system was
// inconsistent: sigma is not in the module span.
struct Decomposition {
    CandidateSet set;
    std::vector<MultiPoly> coefficients;  // one per set entry, in y variables
    bool residual = false;
};

// Solves sigma = sum a_i Hess(Q_i) degree by degree with exact linear
// algebra. Requires every invariant explicit and sigma equivariant (checked;
// rejected otherwise). For a homogeneous component of degree d the unknown
// for slot i ranges over invariant monomials of weighted degree
// d - (deg Q_i - 2); the free-module structure makes each system's solution
// unique when it exists.
Decomposition decompose(const SymTensorPoly& sigma, const CandidateSet& set,
                        const std::vector<BasicInvariant>& invs,
                        const ReflectionGroup& group);

// Substitutes y_k <- rho_k into the coefficients and assembles
// sum a_i Hess(Q_i); inverse of decompose on its image.
SymTensorPoly reconstruct(const Decomposition& decomposition,
                          const std::vector<BasicInvariant>& invs);

// Group average (1/|W|) sum_g g^T sigma(g x) g. Needs the materialized
// element list; idempotent, and the output is always equivariant.
SymTensorPoly symmetrize(const SymTensorPoly& sigma, const ReflectionGroup& group);

// The product polynomial behind a candidate entry (explicit invariants).
MultiPoly entry_polynomial(const CandidateEntry& entry,
                           const std::vector<BasicInvariant>& invs);

} // namespace hessbasis
