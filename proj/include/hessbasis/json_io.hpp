#pragma once

#include <json.hpp>

#include "hessbasis/group.hpp"
#include "hessbasis/hessian_basis.hpp"
#include "hessbasis/series.hpp"
#include "hessbasis/tensor_decompose.hpp"

namespace hessbasis {

using Json = nlohmann::json;

// Scalars: rationals as "p/q" strings, cyclotomic values as
// {"m": conductor, "coeffs": ["...", ...]}. Bit-exact round trip.
Json scalar_to_json(const CycloScalar& v);
CycloScalar scalar_from_json(const Json& j);

// {"n": nvars, "terms": [{"exp": [..], "coeff": <scalar>}, ...]},
// terms in graded-lex order.
Json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j);

// {"schema": "hessbasis/tensor/1", "n": n, "entries": [poly, ...]} with
// n(n+1)/2 entries in row-major upper-triangular order.
Json tensor_to_json(const SymTensorPoly& t);
SymTensorPoly tensor_from_json(const Json& j);

Json unipoly_to_json(const UniPoly& p);       // coefficient array, ascending
UniPoly unipoly_from_json(const Json& j);

Json series_to_json(const TruncSeries& s);

Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

Json spec_to_json(const GroupSpec& spec);
GroupSpec spec_from_json(const Json& j);

// Group: spec + generators + optional census. Element lists are never
// serialized; loading rebuilds the generators from the spec and checks that
// any serialized generators agree.
Json group_to_json(ReflectionGroup& group, bool include_census,
                   std::uint64_t census_bound);
ReflectionGroup group_from_json(const Json& j);

Json census_to_json(const CharpolyCensus& census);
CharpolyCensus census_from_json(const Json& j);

Json certificate_to_json(const Certificate& cert);

Json decomposition_to_json(const Decomposition& d);

// Comma-separated rational coordinates: "1,2,-3/2".
std::vector<CycloScalar> parse_point(const std::string& csv);

} // namespace hessbasis
