#pragma once

#include <vector>

#include "hessbasis/group.hpp"
#include "hessbasis/multipoly.hpp"

namespace hessbasis {

// psi_m = sum_{lambda in orbit} lambda^m, kept as the orbit of linear forms
// and never expanded. Value, gradient and Hessian at a point cost
// O(|orbit| * n^2) scalar operations:
//   psi(v)      = sum (w.v)^m
//   grad psi(v) = m sum (w.v)^{m-1} w
//   Hess psi(v) = m(m-1) sum (w.v)^{m-2} w (x) w
struct OrbitInvariant {
    WeightOrbit orbit;
    unsigned exponent = 0;

    CycloScalar value_at(const std::vector<CycloScalar>& v) const;
    std::vector<CycloScalar> gradient_at(const std::vector<CycloScalar>& v) const;
    Matrix hessian_at(const std::vector<CycloScalar>& v) const;
    // Expanded polynomial; only sensible for small orbits and exponents
    // (test oracle).
    MultiPoly expanded() const;
};

// A homogeneous basic invariant: an explicit polynomial (dihedral and
// classical types) or an orbit Chern class (exceptional types).
class BasicInvariant {
public:
    static BasicInvariant explicit_poly(MultiPoly p);
    static BasicInvariant chern(OrbitInvariant form);

    unsigned degree() const { return degree_; }
    bool is_explicit() const { return is_explicit_; }
    const MultiPoly& poly() const;
    const OrbitInvariant& orbit_form() const;

    CycloScalar value_at(const std::vector<CycloScalar>& v) const;
    std::vector<CycloScalar> gradient_at(const std::vector<CycloScalar>& v) const;
    Matrix hessian_at(const std::vector<CycloScalar>& v) const;

private:
    unsigned degree_ = 0;
    bool is_explicit_ = true;
    MultiPoly poly_;
    OrbitInvariant orbit_;
};

// Basic invariants in degree order d_1..d_n:
//   I2(n): x^2 + y^2 and Re((x+iy)^n) expanded;
//   A: (1/j) sum x_i^j;  B: (1/2j) sum x_i^{2j};
//   D: (1/2j) sum x_i^{2j} for j < n and x_1...x_n;
//   exceptional: Chern classes psi_{d_i} over the minimal weight orbit;
//   products: factor invariants embedded in the product coordinates.
std::vector<BasicInvariant> basic_invariants(const ReflectionGroup& group);

// The linear form with minimal orbit: (0,...,0,1) * C^{-1} in the coroot
// basis, which in root-value coordinates is just (0,...,0,1). Errors on a
// singular Cartan matrix.
LinearForm minimal_weight(const Matrix& cartan);

// J_{ij} = d rho_i / d x_j at v (x_j = coordinate j of the working basis).
Matrix jacobian_at(const std::vector<BasicInvariant>& invs,
                   const std::vector<CycloScalar>& v);

// Exact determinant test: nonzero certifies algebraic independence of the
// invariants and regularity of v.
std::pair<bool, CycloScalar> is_regular(const std::vector<BasicInvariant>& invs,
                                        const std::vector<CycloScalar>& v);

struct RegularVector {
    std::vector<CycloScalar> point;
    bool certified = false;
    CycloScalar jacobian_det;
};

// Built-in certification points: (1,2) for I2, (1,...,n) for A/B/D, the
// reference table rows for the exceptional types, concatenation for
// products. Certified at build; throws if the determinant vanishes.
RegularVector default_regular_vector(const ReflectionGroup& group,
                                     const std::vector<BasicInvariant>& invs);

// Exact invariance verification: for explicit invariants the polynomial
// identity rho(g x) = rho(x) per generator; for Chern invariants the exact
// orbit-permutation check {lambda o g} == orbit (a complete certificate)
// plus agreement of evaluations at `samples` deterministic pseudo-random
// rational points.
bool verify_invariance(const ReflectionGroup& group,
                       const std::vector<BasicInvariant>& invs,
                       unsigned samples = 20, std::uint64_t seed = 0x5eed);

} // namespace hessbasis
