#include "hessbasis/fixtures.hpp"

#include <map>

#include "hessbasis/error.hpp"

namespace hessbasis::tables {

namespace {

// zeta_5^2 + zeta_5^3 = -(1+sqrt 5)/2, the off-diagonal entry of the
// H-type Cartan matrices.
CycloScalar golden_entry() {
    return CycloScalar::zeta_power(5, 2) + CycloScalar::zeta_power(5, 3);
}

Matrix from_int_rows(const std::vector<std::vector<long>>& rows) {
    Matrix m(rows.size(), rows.size());
    for (size_t i = 0; i < rows.size(); ++i)
        for (size_t j = 0; j < rows.size(); ++j)
            m.at(i, j) = CycloScalar(rows[i][j]);
    return m;
}

// Simply-laced Cartan matrix from an edge list.
Matrix simply_laced(unsigned n, const std::vector<std::pair<unsigned, unsigned>>& edges) {
    Matrix m(n, n);
    for (unsigned i = 0; i < n; ++i) m.at(i, i) = CycloScalar(2);
    for (auto [a, b] : edges) {
        m.at(a - 1, b - 1) = CycloScalar(-1);
        m.at(b - 1, a - 1) = CycloScalar(-1);
    }
    return m;
}

} // namespace

Matrix cartan_matrix(GroupType t) {
    switch (t) {
        case GroupType::H3: {
            Matrix m = from_int_rows({{2, 0, 0}, {0, 2, -1}, {0, -1, 2}});
            m.at(0, 1) = golden_entry();
            m.at(1, 0) = golden_entry();
            return m;
        }
        case GroupType::H4: {
            Matrix m = from_int_rows({{2, 0, 0, 0},
                                      {0, 2, -1, 0},
                                      {0, -1, 2, -1},
                                      {0, 0, -1, 2}});
            m.at(0, 1) = golden_entry();
            m.at(1, 0) = golden_entry();
            return m;
        }
        case GroupType::F4:
            // Asymmetric pair at (2,3)/(3,2): the -2 sits in row 3, col 2.
            return from_int_rows({{2, -1, 0, 0},
                                  {-1, 2, -1, 0},
                                  {0, -2, 2, -1},
                                  {0, 0, -1, 2}});
        case GroupType::E6:
            return simply_laced(6, {{1, 3}, {2, 4}, {3, 4}, {4, 5}, {5, 6}});
        case GroupType::E7:
            return simply_laced(7, {{1, 3}, {2, 4}, {3, 4}, {4, 5}, {5, 6}, {6, 7}});
        case GroupType::E8:
            return simply_laced(
                8, {{1, 3}, {2, 4}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}});
        default:
            throw Error("no Cartan matrix for type " + type_name(t));
    }
}

const std::vector<unsigned>& exceptional_degrees(GroupType t) {
    static const std::map<GroupType, std::vector<unsigned>> table = {
        {GroupType::H3, {2, 6, 10}},
        {GroupType::H4, {2, 12, 20, 30}},
        {GroupType::F4, {2, 6, 8, 12}},
        {GroupType::E6, {2, 5, 6, 8, 9, 12}},
        {GroupType::E7, {2, 6, 8, 10, 12, 14, 18}},
        {GroupType::E8, {2, 8, 12, 14, 18, 20, 24, 30}},
    };
    auto it = table.find(t);
    if (it == table.end())
        throw Error("no degree table for type " + type_name(t));
    return it->second;
}

const std::vector<long>& regular_vector(GroupType t) {
    static const std::map<GroupType, std::vector<long>> table = {
        {GroupType::H3, {1, 2, 3}},
        {GroupType::H4, {1, 2, 3, 5}},
        {GroupType::F4, {2, -3, 5, 7}},
        {GroupType::E6, {2, -5, 41, 7, -9, 110}},
        {GroupType::E7, {2, -5, 41, 7, -9, 110, -87}},
        {GroupType::E8, {2, -5, 41, 7, -9, 110, -87, 11}},
    };
    auto it = table.find(t);
    if (it == table.end())
        throw Error("no certification point for type " + type_name(t));
    return it->second;
}

std::size_t minimal_orbit_size(GroupType t) {
    switch (t) {
        case GroupType::H3: return 12;
        case GroupType::H4: return 20;
        case GroupType::F4: return 24;
        case GroupType::E6: return 27;
        case GroupType::E7: return 56;
        case GroupType::E8: return 240;
        default: throw Error("no orbit-size entry for type " + type_name(t));
    }
}

namespace {
UniPoly from_exponent_mults(const std::vector<std::pair<unsigned, unsigned>>& em) {
    UniPoly p;
    for (auto [e, mult] : em)
        p = p + UniPoly::monomial(CycloScalar(static_cast<long>(mult)), e);
    return p;
}
} // namespace

UniPoly published_ratio(GroupType t) {
    switch (t) {
        case GroupType::H3:
            return from_exponent_mults({{0, 1}, {2, 1}, {4, 1}, {6, 1}, {8, 1}, {10, 1}});
        case GroupType::H4:
            return from_exponent_mults({{0, 1}, {2, 1}, {10, 1}, {12, 1}, {18, 1},
                                        {20, 1}, {22, 1}, {28, 1}, {30, 1}, {38, 1}});
        case GroupType::F4:
            return from_exponent_mults({{0, 1}, {2, 1}, {4, 1}, {6, 2}, {8, 1},
                                        {10, 2}, {12, 1}, {14, 1}});
        case GroupType::E6:
            return from_exponent_mults({{0, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1},
                                        {6, 2}, {7, 1}, {8, 2}, {9, 2}, {10, 2},
                                        {11, 1}, {12, 2}, {13, 1}, {14, 1}, {15, 1},
                                        {16, 1}});
        case GroupType::E7:
            return from_exponent_mults({{0, 1}, {2, 1}, {4, 1}, {6, 2}, {8, 2},
                                        {10, 3}, {12, 3}, {14, 3}, {16, 3}, {18, 3},
                                        {20, 2}, {22, 2}, {24, 1}, {26, 1}});
        case GroupType::E8:
            return from_exponent_mults({{0, 1}, {2, 1}, {6, 1}, {8, 1}, {10, 1},
                                        {12, 2}, {14, 2}, {16, 1}, {18, 3}, {20, 2},
                                        {22, 2}, {24, 3}, {26, 2}, {28, 2}, {30, 3},
                                        {32, 1}, {34, 2}, {36, 2}, {38, 1}, {40, 1},
                                        {42, 1}, {46, 1}});
        default:
            throw Error("no published ratio for type " + type_name(t));
    }
}

std::size_t candidate_count(GroupType t) {
    switch (t) {
        case GroupType::H3: return 2;
        case GroupType::H4: return 2;
        case GroupType::F4: return 2;
        case GroupType::E6: return 12;
        case GroupType::E7: return 48;
        case GroupType::E8: return 96;
        default: throw Error("no candidate count for type " + type_name(t));
    }
}

} // namespace hessbasis::tables
