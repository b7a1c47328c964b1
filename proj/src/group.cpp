#include "hessbasis/group.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <numeric>
#include <unordered_set>

#include "hessbasis/error.hpp"
#include "hessbasis/fixtures.hpp"

namespace hessbasis {

std::string type_name(GroupType t) {
    switch (t) {
        case GroupType::I2: return "I2";
        case GroupType::A: return "A";
        case GroupType::B: return "B";
        case GroupType::D: return "D";
        case GroupType::H3: return "H3";
        case GroupType::H4: return "H4";
        case GroupType::F4: return "F4";
        case GroupType::E6: return "E6";
        case GroupType::E7: return "E7";
        case GroupType::E8: return "E8";
        case GroupType::Product: return "Product";
    }
    return "?";
}

bool is_exceptional(GroupType t) {
    switch (t) {
        case GroupType::H3:
        case GroupType::H4:
        case GroupType::F4:
        case GroupType::E6:
        case GroupType::E7:
        case GroupType::E8:
            return true;
        default:
            return false;
    }
}

GroupSpec GroupSpec::I2(unsigned n) {
    if (n < 2) throw Error("I2(n) needs n >= 2");
    GroupSpec s;
    s.type = GroupType::I2;
    s.n = n;
    return s;
}

GroupSpec GroupSpec::classical(GroupType t, unsigned n) {
    if (t != GroupType::A && t != GroupType::B && t != GroupType::D)
        throw Error("classical spec needs type A, B or D");
    if (n < 1 || (t == GroupType::D && n < 2))
        throw Error("rank too small for type " + type_name(t));
    GroupSpec s;
    s.type = t;
    s.n = n;
    return s;
}

GroupSpec GroupSpec::exceptional(GroupType t) {
    if (!hessbasis::is_exceptional(t))
        throw Error("not an exceptional type: " + type_name(t));
    GroupSpec s;
    s.type = t;
    s.n = 0;
    return s;
}

GroupSpec GroupSpec::product(GroupSpec a, GroupSpec b) {
    GroupSpec s;
    s.type = GroupType::Product;
    // Flatten nested products into one factor list.
    auto push = [&s](GroupSpec& g) {
        if (g.type == GroupType::Product)
            for (auto& f : g.factors) s.factors.push_back(std::move(f));
        else
            s.factors.push_back(std::move(g));
    };
    push(a);
    push(b);
    return s;
}

GroupSpec GroupSpec::parse(const std::string& text) {
    // Products: 'x'-separated factors.
    if (auto pos = text.find('x'); pos != std::string::npos) {
        GroupSpec acc = parse(text.substr(0, pos));
        GroupSpec rest = parse(text.substr(pos + 1));
        return product(std::move(acc), std::move(rest));
    }
    if (text == "A1sign") return classical(GroupType::B, 1);
    for (GroupType t : {GroupType::H3, GroupType::H4, GroupType::F4,
                        GroupType::E6, GroupType::E7, GroupType::E8})
        if (text == type_name(t)) return exceptional(t);
    auto colon = text.find(':');
    if (colon != std::string::npos) {
        const std::string head = text.substr(0, colon);
        unsigned n = 0;
        try {
            n = static_cast<unsigned>(std::stoul(text.substr(colon + 1)));
        } catch (...) {
            throw Error("malformed group spec: '" + text + "'");
        }
        if (head == "I2") return I2(n);
        if (head == "A") return classical(GroupType::A, n);
        if (head == "B") return classical(GroupType::B, n);
        if (head == "D") return classical(GroupType::D, n);
    }
    throw Error("unknown group spec: '" + text + "'");
}

unsigned GroupSpec::rank() const {
    switch (type) {
        case GroupType::I2: return 2;
        case GroupType::A:
        case GroupType::B:
        case GroupType::D: return n;
        case GroupType::H3: return 3;
        case GroupType::H4: return 4;
        case GroupType::F4: return 4;
        case GroupType::E6: return 6;
        case GroupType::E7: return 7;
        case GroupType::E8: return 8;
        case GroupType::Product: {
            unsigned r = 0;
            for (const auto& f : factors) r += f.rank();
            return r;
        }
    }
    return 0;
}

std::vector<unsigned> GroupSpec::degrees() const {
    std::vector<unsigned> d;
    switch (type) {
        case GroupType::I2:
            d = {2, n};
            break;
        case GroupType::A:
            for (unsigned j = 1; j <= n; ++j) d.push_back(j);
            break;
        case GroupType::B:
            for (unsigned j = 1; j <= n; ++j) d.push_back(2 * j);
            break;
        case GroupType::D:
            for (unsigned j = 1; j < n; ++j) d.push_back(2 * j);
            d.push_back(n);
            break;
        case GroupType::Product:
            for (const auto& f : factors)
                for (unsigned x : f.degrees()) d.push_back(x);
            break;
        default:
            d = tables::exceptional_degrees(type);
    }
    return d;
}

std::uint64_t GroupSpec::order() const {
    std::uint64_t o = 1;
    for (unsigned d : degrees()) o *= d;
    return o;
}

unsigned GroupSpec::conductor() const {
    switch (type) {
        case GroupType::I2: return n;
        case GroupType::H3:
        case GroupType::H4: return 5;
        case GroupType::Product: {
            unsigned long long m = 1;
            for (const auto& f : factors) m = std::lcm<unsigned long long>(m, f.conductor());
            return static_cast<unsigned>(m);
        }
        default: return 1;
    }
}

std::string GroupSpec::name() const {
    switch (type) {
        case GroupType::I2: return "I2:" + std::to_string(n);
        case GroupType::A:
        case GroupType::B:
        case GroupType::D:
            return type_name(type) + ":" + std::to_string(n);
        case GroupType::Product: {
            std::string out;
            for (size_t i = 0; i < factors.size(); ++i) {
                if (i) out += 'x';
                out += factors[i].name();
            }
            return out;
        }
        default: return type_name(type);
    }
}

std::uint64_t CharpolyCensus::total() const {
    std::uint64_t t = 0;
    for (const auto& e : entries) t += e.multiplicity;
    return t;
}

namespace {

Matrix permutation_transposition(unsigned n, unsigned i) {
    Matrix m = Matrix::identity(n);
    m.at(i, i) = CycloScalar(0);
    m.at(i + 1, i + 1) = CycloScalar(0);
    m.at(i, i + 1) = CycloScalar(1);
    m.at(i + 1, i) = CycloScalar(1);
    return m;
}

std::vector<Matrix> classical_generators(GroupType t, unsigned n) {
    std::vector<Matrix> gens;
    for (unsigned i = 0; i + 1 < n; ++i)
        gens.push_back(permutation_transposition(n, i));
    if (t == GroupType::B) {
        Matrix m = Matrix::identity(n);
        m.at(n - 1, n - 1) = CycloScalar(-1);
        gens.push_back(m);
    } else if (t == GroupType::D) {
        // e_{n-1} -> -e_n, e_n -> -e_{n-1}
        Matrix m = Matrix::identity(n);
        m.at(n - 2, n - 2) = CycloScalar(0);
        m.at(n - 1, n - 1) = CycloScalar(0);
        m.at(n - 2, n - 1) = CycloScalar(-1);
        m.at(n - 1, n - 2) = CycloScalar(-1);
        gens.push_back(m);
    }
    return gens;
}

// Simple reflections from a Cartan matrix, acting on simple-root
// coordinates: R_i = Id - e_i (row i of C).
std::vector<Matrix> cartan_generators(const Matrix& cartan) {
    const size_t n = cartan.rows();
    if (cartan.cols() != n) throw Error("Cartan matrix must be square");
    std::vector<Matrix> gens;
    for (size_t i = 0; i < n; ++i) {
        if (!(cartan.at(i, i) == CycloScalar(2)))
            throw Error("malformed Cartan matrix: diagonal entry is not 2");
        Matrix m = Matrix::identity(n);
        for (size_t j = 0; j < n; ++j) m.at(i, j) -= cartan.at(i, j);
        gens.push_back(m);
    }
    return gens;
}

unsigned matrices_conductor(const std::vector<Matrix>& mats) {
    unsigned long long m = 1;
    for (const auto& g : mats)
        for (size_t i = 0; i < g.rows(); ++i)
            for (size_t j = 0; j < g.cols(); ++j)
                m = std::lcm<unsigned long long>(m, g.at(i, j).conductor());
    return static_cast<unsigned>(m);
}

// All entries rational -> same matrices rebuilt at conductor 1.
std::optional<std::vector<Matrix>> try_demote_all(const std::vector<Matrix>& mats) {
    std::vector<Matrix> out;
    for (const auto& g : mats) {
        Matrix d(g.rows(), g.cols());
        for (size_t i = 0; i < g.rows(); ++i)
            for (size_t j = 0; j < g.cols(); ++j) {
                auto r = g.at(i, j).try_rational();
                if (!r) return std::nullopt;
                d.at(i, j) = CycloScalar(*r);
            }
        out.push_back(std::move(d));
    }
    return out;
}

Matrix block_embed(const Matrix& g, unsigned total, unsigned offset) {
    Matrix m = Matrix::identity(total);
    for (size_t i = 0; i < g.rows(); ++i)
        for (size_t j = 0; j < g.cols(); ++j)
            m.at(offset + i, offset + j) = g.at(i, j);
    return m;
}

std::string lifted_matrix_key(const Matrix& m, unsigned conductor) {
    std::string out;
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) {
            out += m.at(i, j).lifted_to(conductor).key();
            out += '#';
        }
    return out;
}

UniPoly lifted_poly(const UniPoly& p, unsigned conductor) {
    std::vector<CycloScalar> c;
    c.reserve(p.coeffs().size());
    for (const auto& v : p.coeffs()) c.push_back(v.lifted_to(conductor));
    return UniPoly(std::move(c));
}

// ---------------------------------------------------------------------------
// Integer fast path: when every generator entry has integer coordinates at a
// common conductor, elements are flat int64 coordinate arrays and the BFS,
// keys and characteristic polynomials run on plain integer arithmetic. This
// covers all crystallographic types (conductor 1) and H3/H4 (Z[zeta_5]).
// ---------------------------------------------------------------------------

struct IntModel {
    unsigned n = 0;     // matrix dimension
    unsigned k = 1;     // coordinates per scalar, phi(conductor)
    unsigned m = 1;     // conductor
    std::vector<std::vector<long long>> red;   // x^j mod Phi_m, j in [k, 2k-2]
    std::vector<std::vector<long long>> gens;  // flattened n*n*k
};

bool slice_zero(const long long* p, unsigned k) {
    for (unsigned s = 0; s < k; ++s)
        if (p[s] != 0) return false;
    return true;
}

std::optional<IntModel> try_int_model(const std::vector<Matrix>& gens,
                                      unsigned conductor, unsigned n) {
    IntModel model;
    model.n = n;
    model.m = conductor;
    model.k = euler_phi(conductor);
    for (const auto& g : gens) {
        std::vector<long long> flat(static_cast<size_t>(n) * n * model.k, 0);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j) {
                const CycloScalar v = g.at(i, j).lifted_to(conductor);
                for (unsigned s = 0; s < model.k; ++s) {
                    const Rational& c = v.coords()[s];
                    if (!is_integer(c)) return std::nullopt;
                    if (!c.get_num().fits_slong_p()) return std::nullopt;
                    long val = c.get_num().get_si();
                    if (val > (1 << 30) || val < -(1 << 30)) return std::nullopt;
                    flat[(static_cast<size_t>(i) * n + j) * model.k + s] = val;
                }
            }
        model.gens.push_back(std::move(flat));
    }
    // Integer reduction rows (the cyclotomic polynomial is monic integer).
    const auto& phi_poly = cyclotomic_coeffs(conductor);
    const unsigned k = model.k;
    if (k > 1) {
        std::vector<long long> prev(k, 0);
        std::vector<long long> base(k);
        for (unsigned s = 0; s < k; ++s) base[s] = -phi_poly[s].get_num().get_si();
        model.red.push_back(base);
        for (unsigned j = k + 1; j <= 2 * k - 2; ++j) {
            const auto& last = model.red.back();
            std::vector<long long> row(k, 0);
            for (unsigned s = 0; s + 1 < k; ++s) row[s + 1] = last[s];
            if (last[k - 1] != 0)
                for (unsigned s = 0; s < k; ++s) row[s] += last[k - 1] * base[s];
            model.red.push_back(std::move(row));
        }
    }
    return model;
}

void int_mat_mul(const IntModel& md, const long long* a, const long long* b,
                 long long* out, long long* conv) {
    const unsigned n = md.n, k = md.k;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) {
            std::memset(conv, 0, sizeof(long long) * (2 * k - 1));
            for (unsigned l = 0; l < n; ++l) {
                const long long* pa = a + (static_cast<size_t>(i) * n + l) * k;
                if (slice_zero(pa, k)) continue;
                const long long* pb = b + (static_cast<size_t>(l) * n + j) * k;
                if (slice_zero(pb, k)) continue;
                for (unsigned s = 0; s < k; ++s) {
                    if (pa[s] == 0) continue;
                    for (unsigned t = 0; t < k; ++t)
                        conv[s + t] += pa[s] * pb[t];
                }
            }
            long long* po = out + (static_cast<size_t>(i) * n + j) * k;
            for (unsigned s = 0; s < k; ++s) po[s] = conv[s];
            for (unsigned j2 = k; j2 + 1 <= 2 * k - 1; ++j2) {
                if (conv[j2] == 0) continue;
                const auto& row = md.red[j2 - k];
                for (unsigned s = 0; s < k; ++s) po[s] += conv[j2] * row[s];
            }
        }
}

// Monic characteristic polynomial, coordinates flattened ascending:
// (n+1)*k entries. Faddeev-LeVerrier; the divisions are exact because the
// coefficients are algebraic integers with integer coordinates.
std::vector<long long> int_charpoly(const IntModel& md, const std::vector<long long>& a) {
    const unsigned n = md.n, k = md.k;
    std::vector<long long> c(static_cast<size_t>(n + 1) * k, 0);
    c[static_cast<size_t>(n) * k] = 1;
    std::vector<long long> mk = a;
    std::vector<long long> shifted, prod(a.size());
    std::vector<long long> conv(2 * k - 1);
    for (unsigned step = 1; step <= n; ++step) {
        std::vector<long long> tr(k, 0);
        for (unsigned i = 0; i < n; ++i)
            for (unsigned s = 0; s < k; ++s)
                tr[s] += mk[(static_cast<size_t>(i) * n + i) * k + s];
        for (unsigned s = 0; s < k; ++s) {
            if (tr[s] % static_cast<long long>(step) != 0)
                throw Error("internal: inexact division in integer charpoly");
            c[(static_cast<size_t>(n) - step) * k + s] = -(tr[s] / step);
        }
        if (step == n) break;
        shifted = mk;
        for (unsigned i = 0; i < n; ++i)
            for (unsigned s = 0; s < k; ++s)
                shifted[(static_cast<size_t>(i) * n + i) * k + s] +=
                    c[(static_cast<size_t>(n) - step) * k + s];
        int_mat_mul(md, a.data(), shifted.data(), prod.data(), conv.data());
        mk = prod;
    }
    return c;
}

std::string pack_int32(const std::vector<long long>& v) {
    std::string out(v.size() * 4, '\0');
    for (size_t i = 0; i < v.size(); ++i) {
        long long x = v[i];
        if (x > INT32_MAX || x < INT32_MIN)
            throw Error("internal: element coordinate exceeds packing range");
        std::uint32_t u = static_cast<std::uint32_t>(static_cast<std::int32_t>(x));
        std::memcpy(out.data() + i * 4, &u, 4);
    }
    return out;
}

Matrix unflatten(const IntModel& md, const std::vector<long long>& flat) {
    Matrix m(md.n, md.n);
    for (unsigned i = 0; i < md.n; ++i)
        for (unsigned j = 0; j < md.n; ++j) {
            std::vector<Rational> coords(md.k);
            for (unsigned s = 0; s < md.k; ++s)
                coords[s] = Rational(flat[(static_cast<size_t>(i) * md.n + j) * md.k + s]);
            if (md.m == 1)
                m.at(i, j) = CycloScalar(coords[0]);
            else
                m.at(i, j) = CycloScalar(md.m, std::move(coords));
        }
    return m;
}

struct BfsRequest {
    bool materialize = false;
    bool want_census = false;
};

struct BfsResult {
    std::uint64_t count = 0;
    std::vector<Matrix> elements;
    CharpolyCensus census;
};

BfsResult int_bfs(const IntModel& md, const BfsRequest& req, std::uint64_t expected) {
    const unsigned n = md.n, k = md.k;
    std::unordered_set<std::string> visited;
    visited.reserve(expected * 2);
    std::map<std::string, std::pair<std::vector<long long>, std::uint64_t>> census;
    BfsResult out;

    std::vector<long long> identity(static_cast<size_t>(n) * n * k, 0);
    for (unsigned i = 0; i < n; ++i) identity[(static_cast<size_t>(i) * n + i) * k] = 1;

    auto process = [&](const std::vector<long long>& el) {
        if (req.want_census) {
            auto cp = int_charpoly(md, el);
            auto key = pack_int32(cp);
            auto it = census.find(key);
            if (it == census.end())
                census.emplace(std::move(key), std::make_pair(std::move(cp), 1));
            else
                it->second.second += 1;
        }
        if (req.materialize) out.elements.push_back(unflatten(md, el));
    };

    std::vector<std::vector<long long>> frontier;
    visited.insert(pack_int32(identity));
    process(identity);
    frontier.push_back(std::move(identity));

    std::vector<long long> prod(static_cast<size_t>(n) * n * k);
    std::vector<long long> conv(2 * k - 1);
    while (!frontier.empty()) {
        std::vector<std::vector<long long>> next;
        for (const auto& el : frontier)
            for (const auto& g : md.gens) {
                int_mat_mul(md, el.data(), g.data(), prod.data(), conv.data());
                std::string key = pack_int32(prod);
                if (visited.insert(std::move(key)).second) {
                    process(prod);
                    next.push_back(prod);
                    if (visited.size() > expected)
                        throw Error("internal: enumeration exceeded expected group order");
                }
            }
        frontier = std::move(next);
    }
    out.count = visited.size();
    if (req.want_census) {
        out.census.rank = n;
        for (auto& [key, val] : census) {
            std::vector<CycloScalar> coeffs;
            for (unsigned d = 0; d <= n; ++d) {
                std::vector<Rational> coords(k);
                for (unsigned s = 0; s < k; ++s)
                    coords[s] = Rational(val.first[static_cast<size_t>(d) * k + s]);
                coeffs.push_back(md.m == 1 ? CycloScalar(coords[0])
                                           : CycloScalar(md.m, std::move(coords)));
            }
            out.census.entries.push_back({UniPoly(std::move(coeffs)), val.second});
        }
    }
    return out;
}

BfsResult generic_bfs(const std::vector<Matrix>& gens, unsigned n, unsigned conductor,
                      const BfsRequest& req, std::uint64_t expected) {
    std::unordered_set<std::string> visited;
    visited.reserve(expected * 2);
    std::map<std::string, CensusEntry> census;
    BfsResult out;

    auto process = [&](const Matrix& el) {
        if (req.want_census) {
            UniPoly cp = lifted_poly(charpoly(el), conductor);
            std::string key = cp.key();
            auto it = census.find(key);
            if (it == census.end())
                census.emplace(std::move(key), CensusEntry{std::move(cp), 1});
            else
                it->second.multiplicity += 1;
        }
        if (req.materialize) out.elements.push_back(el);
    };

    Matrix identity = Matrix::identity(n);
    std::vector<Matrix> frontier;
    visited.insert(lifted_matrix_key(identity, conductor));
    process(identity);
    frontier.push_back(std::move(identity));

    while (!frontier.empty()) {
        std::vector<Matrix> next;
        for (const auto& el : frontier)
            for (const auto& g : gens) {
                Matrix prod = el * g;
                std::string key = lifted_matrix_key(prod, conductor);
                if (visited.insert(std::move(key)).second) {
                    process(prod);
                    next.push_back(std::move(prod));
                    if (visited.size() > expected)
                        throw Error("internal: enumeration exceeded expected group order");
                }
            }
        frontier = std::move(next);
    }
    out.count = visited.size();
    if (req.want_census) {
        out.census.rank = n;
        for (auto& [key, entry] : census) out.census.entries.push_back(std::move(entry));
    }
    return out;
}

BfsResult run_bfs(const std::vector<Matrix>& gens, unsigned n, const BfsRequest& req,
                  std::uint64_t expected) {
    const unsigned conductor = matrices_conductor(gens);
    if (auto model = try_int_model(gens, conductor, n))
        return int_bfs(*model, req, expected);
    return generic_bfs(gens, n, conductor, req, expected);
}

} // namespace

ReflectionGroup ReflectionGroup::build(const GroupSpec& spec) {
    ReflectionGroup g;
    g.spec_ = spec;
    switch (spec.type) {
        case GroupType::I2: {
            const unsigned n = spec.n;
            const unsigned M = static_cast<unsigned>(std::lcm(4u, n));
            const CycloScalar zn = CycloScalar::zeta_power(M, M / n);
            const CycloScalar zn_inv = CycloScalar::zeta_power(M, M - M / n);
            const CycloScalar half(Rational(1, 2));
            const CycloScalar i_unit = CycloScalar::zeta_power(M, M / 4);
            const CycloScalar cos = (zn + zn_inv) * half;
            const CycloScalar sin = (zn - zn_inv) * half * (-i_unit);
            Matrix rot(2, 2), refl(2, 2);
            rot.at(0, 0) = cos;
            rot.at(0, 1) = -sin;
            rot.at(1, 0) = sin;
            rot.at(1, 1) = cos;
            refl.at(0, 0) = CycloScalar(1);
            refl.at(1, 1) = CycloScalar(-1);
            g.gens_ = {rot, refl};
            if (auto demoted = try_demote_all(g.gens_)) g.gens_ = std::move(*demoted);
            // Diagonalized presentation over Q(zeta_n) for Molien work.
            Matrix a(2, 2), b(2, 2);
            a.at(0, 0) = CycloScalar::zeta_power(n, 1);
            a.at(1, 1) = CycloScalar::zeta_power(n, static_cast<long>(n) - 1);
            b.at(0, 1) = CycloScalar(1);
            b.at(1, 0) = CycloScalar(1);
            g.census_gens_ = {a, b};
            break;
        }
        case GroupType::A:
        case GroupType::B:
        case GroupType::D:
            g.gens_ = classical_generators(spec.type, spec.n);
            g.census_gens_ = g.gens_;
            break;
        case GroupType::H3:
        case GroupType::H4:
        case GroupType::F4:
        case GroupType::E6:
        case GroupType::E7:
        case GroupType::E8: {
            g.gens_ = cartan_generators(tables::cartan_matrix(spec.type));
            g.census_gens_ = g.gens_;
            // Simple reflections must be involutions.
            for (const auto& r : g.gens_)
                if (!(r * r).is_identity())
                    throw Error("internal: Cartan generator is not an involution");
            break;
        }
        case GroupType::Product: {
            const unsigned total = spec.rank();
            unsigned offset = 0;
            for (const auto& f : spec.factors) {
                ReflectionGroup fg = ReflectionGroup::build(f);
                for (const auto& m : fg.gens_)
                    g.gens_.push_back(block_embed(m, total, offset));
                for (const auto& m : fg.census_gens_)
                    g.census_gens_.push_back(block_embed(m, total, offset));
                offset += f.rank();
            }
            break;
        }
    }
    g.action_conductor_ = matrices_conductor(g.gens_);
    g.census_conductor_ = matrices_conductor(g.census_gens_);
    return g;
}

const std::vector<Matrix>& ReflectionGroup::elements() const {
    if (!elements_) throw Error("element list not materialized; call enumerate()");
    return *elements_;
}

void ReflectionGroup::enumerate(std::uint64_t element_bound) {
    if (elements_) return;
    const std::uint64_t order = spec_.order();
    if (order > element_bound)
        throw Error("group " + spec_.name() + " too large to enumerate: order " +
                    std::to_string(order) + " exceeds bound " +
                    std::to_string(element_bound));
    BfsRequest req;
    req.materialize = true;
    BfsResult res = run_bfs(gens_, rank(), req, order);
    if (res.count != order)
        throw Error("internal: enumerated " + std::to_string(res.count) +
                    " elements, expected " + std::to_string(order));
    // Deterministic order: sort by canonical serialized form.
    const unsigned conductor = action_conductor_;
    std::sort(res.elements.begin(), res.elements.end(),
              [conductor](const Matrix& x, const Matrix& y) {
                  return lifted_matrix_key(x, conductor) < lifted_matrix_key(y, conductor);
              });
    elements_ = std::move(res.elements);
}

const CharpolyCensus& ReflectionGroup::census(std::uint64_t element_bound) {
    if (census_) return *census_;
    const std::uint64_t order = spec_.order();
    if (order > element_bound)
        throw Error("group " + spec_.name() + " too large to enumerate: order " +
                    std::to_string(order) + " exceeds bound " +
                    std::to_string(element_bound));
    BfsRequest req;
    req.want_census = true;
    BfsResult res = run_bfs(census_gens_, rank(), req, order);
    if (res.count != order || res.census.total() != order)
        throw Error("internal: census total " + std::to_string(res.census.total()) +
                    " does not match group order " + std::to_string(order));
    census_ = std::move(res.census);
    return *census_;
}

WeightOrbit ReflectionGroup::weight_orbit(const LinearForm& seed,
                                          std::size_t safety_bound) const {
    const unsigned n = rank();
    if (seed.size() != n) throw Error("weight orbit: form dimension mismatch");
    const unsigned conductor = action_conductor_;
    auto lift_form = [conductor](const LinearForm& w) {
        LinearForm out;
        out.reserve(w.size());
        for (const auto& c : w) out.push_back(c.lifted_to(conductor));
        return out;
    };
    auto form_key = [](const LinearForm& w) {
        std::string key;
        for (const auto& c : w) {
            key += c.key();
            key += '#';
        }
        return key;
    };
    // Generators act by precomposition: values transform by g^T. Closure
    // under the forward maps equals the group orbit since the group is
    // finite.
    std::unordered_set<std::string> visited;
    std::vector<LinearForm> orbit;
    std::vector<LinearForm> frontier;
    LinearForm start = lift_form(seed);
    visited.insert(form_key(start));
    orbit.push_back(start);
    frontier.push_back(std::move(start));
    while (!frontier.empty()) {
        std::vector<LinearForm> next;
        for (const auto& w : frontier)
            for (const auto& g : gens_) {
                LinearForm image(n, CycloScalar(0));
                for (unsigned k = 0; k < n; ++k) {
                    CycloScalar acc(0);
                    for (unsigned j = 0; j < n; ++j) {
                        if (g.at(j, k).is_zero() || w[j].is_zero()) continue;
                        acc += g.at(j, k) * w[j];
                    }
                    image[k] = acc.lifted_to(conductor);
                }
                std::string key = form_key(image);
                if (visited.insert(std::move(key)).second) {
                    if (orbit.size() >= safety_bound)
                        throw Error("weight orbit exceeds safety bound " +
                                    std::to_string(safety_bound));
                    orbit.push_back(image);
                    next.push_back(std::move(image));
                }
            }
        frontier = std::move(next);
    }
    std::sort(orbit.begin(), orbit.end(),
              [&form_key](const LinearForm& x, const LinearForm& y) {
                  return form_key(x) < form_key(y);
              });
    return orbit;
}

} // namespace hessbasis
