#pragma once

#include <cstdint>
#include <vector>

#include "hessbasis/group.hpp"
#include "hessbasis/unipoly.hpp"

// Reference data for the exceptional types, kept in one place: Cartan
// matrices, invariant degrees, certification points, minimal-orbit sizes,
// the published Sym^2/invariant ratio polynomials, and the published
// candidate-set counts. The ratio table doubles as the only source for E8,
// whose group (order 696729600) is not enumerable at desk scale; every
// other row is recomputed and checked against this table by the self-check
// and acceptance suites.
namespace hessbasis::tables {

// H3, H4, F4, E6, E7, E8. H3/H4 entries live in Q(zeta_5).
Matrix cartan_matrix(GroupType t);

const std::vector<unsigned>& exceptional_degrees(GroupType t);

// Certification points in simple-root coordinates.
const std::vector<long>& regular_vector(GroupType t);

std::size_t minimal_orbit_size(GroupType t);

// Published ratio P_t(Sym^2 module) / P_t(invariants), exponents ascending.
UniPoly published_ratio(GroupType t);

// Number of admissible generator sets T.
std::size_t candidate_count(GroupType t);

} // namespace hessbasis::tables
