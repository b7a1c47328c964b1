#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hessbasis/linalg.hpp"
#include "hessbasis/multipoly.hpp"
#include "hessbasis/unipoly.hpp"

namespace hessbasis {

enum class GroupType { I2, A, B, D, H3, H4, F4, E6, E7, E8, Product };

std::string type_name(GroupType t);
bool is_exceptional(GroupType t);

// What a group is, independent of any computed data: type, rank, degrees,
// scalar conductor. Products are trees of specs.
struct GroupSpec {
    GroupType type = GroupType::A;
    unsigned n = 1;                  // I2(n): the n (rank is 2); A/B/D: the rank
    std::vector<GroupSpec> factors;  // Product only

    static GroupSpec I2(unsigned n);
    static GroupSpec classical(GroupType t, unsigned n);  // A, B, D
    static GroupSpec exceptional(GroupType t);
    static GroupSpec product(GroupSpec a, GroupSpec b);
    // "H3", "I2:5", "A:3", "A1sign" (= B:1), products "A:2xB:1".
    static GroupSpec parse(const std::string& text);

    unsigned rank() const;
    std::vector<unsigned> degrees() const;
    std::uint64_t order() const;  // product of the degrees
    // Scalar conductor of the census/brute-force field: 1 for the
    // crystallographic types, 5 for H3/H4, n for I2(n).
    unsigned conductor() const;
    std::string name() const;

    friend bool operator==(const GroupSpec& a, const GroupSpec& b) {
        return a.type == b.type && a.n == b.n && a.factors == b.factors;
    }
};

struct CensusEntry {
    UniPoly charpoly;        // monic, degree = rank
    std::uint64_t multiplicity;
};

// Multiset of characteristic polynomials over the whole group; everything a
// Sym^2 Molien summation needs (traces and det(Id - t g) are functions of
// the characteristic polynomial alone).
struct CharpolyCensus {
    unsigned rank = 0;
    std::vector<CensusEntry> entries;  // sorted by charpoly key
    std::uint64_t total() const;
};

using WeightOrbit = std::vector<LinearForm>;

class ReflectionGroup {
public:
    // build_generators: generators only, no enumeration.
    static ReflectionGroup build(const GroupSpec& spec);

    const GroupSpec& spec() const { return spec_; }
    unsigned rank() const { return spec_.rank(); }

    // Action presentation: matrices acting on coordinate vectors
    // (standard coordinates for I2/A/B/D, simple-root coordinates for the
    // Cartan types). Used for polynomial invariance, equivariance and
    // symmetrization.
    const std::vector<Matrix>& generators() const { return gens_; }

    // Presentation used for enumeration-based Molien work. Differs from the
    // action presentation only for I2(n), where the rotation diagonalizes
    // over Q(zeta_n): diag(z, z^{n-1}) and the antidiagonal swap. Conjugate
    // to the action presentation, so characteristic polynomials agree.
    const std::vector<Matrix>& census_generators() const { return census_gens_; }

    // Conductor all action-matrix entries live at (I2(n): lcm(4, n) unless
    // everything demotes to Q).
    unsigned action_conductor() const { return action_conductor_; }

    // BFS closure under generator multiplication; materializes the element
    // list (sorted by canonical serialized form). Errors when the group
    // order exceeds element_bound.
    void enumerate(std::uint64_t element_bound);
    bool has_elements() const { return elements_.has_value(); }
    const std::vector<Matrix>& elements() const;

    // Characteristic-polynomial census over all of W. Uses the materialized
    // element list when present; otherwise streams a BFS without storing
    // elements (this is the E7 path). Cached after the first call.
    const CharpolyCensus& census(std::uint64_t element_bound);
    bool has_census() const { return census_.has_value(); }
    void set_census(CharpolyCensus census) { census_ = std::move(census); }

    // Orbit of a linear form under the group, BFS over generators.
    // Forms are stored by their values on the coordinate basis; generators
    // act by precomposition. Errors if the orbit exceeds safety_bound.
    WeightOrbit weight_orbit(const LinearForm& seed,
                             std::size_t safety_bound = 1000000) const;

private:
    GroupSpec spec_;
    std::vector<Matrix> gens_;
    std::vector<Matrix> census_gens_;
    unsigned action_conductor_ = 1;
    unsigned census_conductor_ = 1;
    std::optional<std::vector<Matrix>> elements_;
    std::optional<CharpolyCensus> census_;
};

} // namespace hessbasis
