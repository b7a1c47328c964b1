#include "hessbasis/json_io.hpp"

#include <sstream>

#include "hessbasis/error.hpp"
#include "hessbasis/version.hpp"

namespace hessbasis {

Json scalar_to_json(const CycloScalar& v) {
    if (v.conductor() == 1) return v.coords()[0].get_str();
    Json coeffs = Json::array();
    for (const auto& c : v.coords()) coeffs.push_back(c.get_str());
    return Json{{"m", v.conductor()}, {"coeffs", coeffs}};
}

CycloScalar scalar_from_json(const Json& j) {
    if (j.is_string()) return CycloScalar(parse_rational(j.get<std::string>()));
    if (!j.is_object() || !j.contains("m") || !j.contains("coeffs"))
        throw Error("malformed scalar JSON");
    const unsigned m = j.at("m").get<unsigned>();
    std::vector<Rational> coords;
    for (const auto& c : j.at("coeffs"))
        coords.push_back(parse_rational(c.get<std::string>()));
    if (m == 1 && coords.size() == 1) return CycloScalar(coords[0]);
    return CycloScalar(m, std::move(coords));
}

Json poly_to_json(const MultiPoly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back(Json{{"exp", e}, {"coeff", scalar_to_json(c)}});
    return Json{{"n", p.nvars()}, {"terms", terms}};
}

MultiPoly poly_from_json(const Json& j) {
    MultiPoly p(j.at("n").get<unsigned>());
    for (const auto& t : j.at("terms")) {
        Exponents e = t.at("exp").get<Exponents>();
        p.add_term(e, scalar_from_json(t.at("coeff")));
    }
    return p;
}

Json tensor_to_json(const SymTensorPoly& t) {
    Json entries = Json::array();
    for (const auto& p : t.entries()) entries.push_back(poly_to_json(p));
    return Json{{"schema", "hessbasis/tensor/1"}, {"n", t.nvars()}, {"entries", entries}};
}

SymTensorPoly tensor_from_json(const Json& j) {
    const unsigned n = j.at("n").get<unsigned>();
    SymTensorPoly t(n);
    const auto& entries = j.at("entries");
    if (entries.size() != t.entry_count())
        throw Error("tensor JSON: wrong entry count");
    size_t idx = 0;
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = a; b < n; ++b) t.set(a, b, poly_from_json(entries[idx++]));
    return t;
}

Json unipoly_to_json(const UniPoly& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coeffs()) coeffs.push_back(scalar_to_json(c));
    return coeffs;
}

UniPoly unipoly_from_json(const Json& j) {
    std::vector<CycloScalar> coeffs;
    for (const auto& c : j) coeffs.push_back(scalar_from_json(c));
    return UniPoly(std::move(coeffs));
}

Json series_to_json(const TruncSeries& s) {
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(scalar_to_json(c));
    return coeffs;
}

Json matrix_to_json(const Matrix& m) {
    Json rows = Json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (size_t j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Matrix matrix_from_json(const Json& j) {
    const size_t rows = j.size();
    const size_t cols = rows ? j[0].size() : 0;
    Matrix m(rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t c = 0; c < cols; ++c) m.at(i, c) = scalar_from_json(j[i][c]);
    return m;
}

Json spec_to_json(const GroupSpec& spec) {
    return Json{{"name", spec.name()},
                {"rank", spec.rank()},
                {"degrees", spec.degrees()},
                {"conductor", spec.conductor()}};
}

GroupSpec spec_from_json(const Json& j) {
    return GroupSpec::parse(j.at("name").get<std::string>());
}

Json group_to_json(ReflectionGroup& group, bool include_census,
                   std::uint64_t census_bound) {
    Json gens = Json::array();
    for (const auto& g : group.generators()) gens.push_back(matrix_to_json(g));
    Json out{{"schema", "hessbasis/group/1"},
             {"spec", spec_to_json(group.spec())},
             {"generators", gens}};
    if (include_census) out["census"] = census_to_json(group.census(census_bound));
    return out;
}

ReflectionGroup group_from_json(const Json& j) {
    GroupSpec spec = spec_from_json(j.at("spec"));
    ReflectionGroup group = ReflectionGroup::build(spec);
    if (j.contains("generators")) {
        const auto& gens = j.at("generators");
        if (gens.size() != group.generators().size())
            throw Error("group JSON: generator count mismatch");
        for (size_t i = 0; i < gens.size(); ++i)
            if (!(matrix_from_json(gens[i]) == group.generators()[i]))
                throw Error("group JSON: serialized generator differs from spec rebuild");
    }
    if (j.contains("census")) group.set_census(census_from_json(j.at("census")));
    return group;
}

Json census_to_json(const CharpolyCensus& census) {
    Json entries = Json::array();
    for (const auto& e : census.entries)
        entries.push_back(Json{{"charpoly", unipoly_to_json(e.charpoly)},
                               {"multiplicity", e.multiplicity}});
    return Json{{"rank", census.rank}, {"entries", entries}};
}

CharpolyCensus census_from_json(const Json& j) {
    CharpolyCensus census;
    census.rank = j.at("rank").get<unsigned>();
    for (const auto& e : j.at("entries"))
        census.entries.push_back(
            {unipoly_from_json(e.at("charpoly")), e.at("multiplicity").get<std::uint64_t>()});
    return census;
}

Json certificate_to_json(const Certificate& cert) {
    Json point = Json::array();
    for (const auto& c : cert.point) point.push_back(scalar_to_json(c));
    return Json{{"schema", "hessbasis/certificate/1"},
                {"engine", kEngineVersion},
                {"group", cert.spec.name()},
                {"set", cert.set.str()},
                {"point", point},
                {"determinant", scalar_to_json(cert.determinant)},
                {"verdict", cert.certified ? "certified" : "degenerate"}};
}

Json decomposition_to_json(const Decomposition& d) {
    Json coeffs = Json::array();
    for (size_t i = 0; i < d.coefficients.size(); ++i)
        coeffs.push_back(Json{{"entry", d.set.entries[i].str()},
                              {"coefficient_y", poly_to_json(d.coefficients[i])}});
    return Json{{"schema", "hessbasis/decomposition/1"},
                {"set", d.set.str()},
                {"residual", d.residual},
                {"coefficients", coeffs}};
}

std::vector<CycloScalar> parse_point(const std::string& csv) {
    std::vector<CycloScalar> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        // Trim blanks.
        const auto first = item.find_first_not_of(" \t");
        const auto last = item.find_last_not_of(" \t");
        if (first == std::string::npos) throw Error("empty point coordinate");
        out.push_back(CycloScalar(parse_rational(item.substr(first, last - first + 1))));
    }
    if (out.empty()) throw Error("empty point");
    return out;
}

} // namespace hessbasis
