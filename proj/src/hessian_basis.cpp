#include "hessbasis/hessian_basis.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "hessbasis/error.hpp"

namespace hessbasis {

std::string CandidateSet::str() const {
    std::string out;
    for (size_t k = 0; k < entries.size(); ++k) {
        if (k) out += ',';
        out += entries[k].str();
    }
    return out;
}

std::vector<unsigned> CandidateSet::hessian_degrees(
    const std::vector<unsigned>& degrees) const {
    std::vector<unsigned> out;
    for (const auto& e : entries) {
        const unsigned d = e.degree(degrees);
        if (d < 2) throw Error("candidate entry of degree < 2 has zero Hessian");
        out.push_back(d - 2);
    }
    return out;
}

CandidateSet parse_candidate_set(const std::string& text) {
    CandidateSet set;
    std::stringstream ss(text);
    std::string item;
    auto parse_factor = [](const std::string& f) -> unsigned {
        if (f.size() < 2 || f[0] != 'r')
            throw Error("malformed candidate entry: '" + f + "'");
        unsigned idx = static_cast<unsigned>(std::stoul(f.substr(1)));
        if (idx == 0) throw Error("candidate indices are 1-based");
        return idx - 1;
    };
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        CandidateEntry e;
        auto star = item.find('*');
        if (star == std::string::npos) {
            e.pair = false;
            e.i = e.j = parse_factor(item);
        } else {
            e.pair = true;
            e.i = parse_factor(item.substr(0, star));
            e.j = parse_factor(item.substr(star + 1));
            if (e.i > e.j) std::swap(e.i, e.j);
        }
        set.entries.push_back(e);
    }
    return set;
}

std::vector<CandidateSet> enumerate_candidate_sets(
    const std::vector<unsigned>& degrees, const RatioPolynomial& ratio,
    bool require_all_singles) {
    const unsigned n = static_cast<unsigned>(degrees.size());

    // Pool grouped by Hessian degree.
    std::map<unsigned, std::vector<CandidateEntry>> pool;
    for (unsigned i = 0; i < n; ++i)
        if (degrees[i] >= 2) pool[degrees[i] - 2].push_back({false, i, i});
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i; j < n; ++j)
            pool[degrees[i] + degrees[j] - 2].push_back({true, i, j});

    const auto required = ratio.exponent_multiset();

    // Forced singles must have a slot in the ratio.
    if (require_all_singles) {
        for (unsigned i = 0; i < n; ++i) {
            if (degrees[i] < 2) continue;
            const unsigned h = degrees[i] - 2;
            bool found = false;
            for (auto [e, c] : required) found |= (e == h && c > 0);
            if (!found) return {};
        }
    }

    // Per Hessian degree: choose the needed count from the pool class
    // (singles forced first when required); combine classes by cartesian
    // product. Deterministic: classes ascending, entries sorted,
    // combinations in lexicographic index order.
    std::vector<std::vector<std::vector<CandidateEntry>>> per_class;
    std::map<unsigned, unsigned> required_map;
    for (auto [e, c] : required) required_map[e] = c;

    // Any pooled degree absent from the ratio simply contributes nothing;
    // but a required degree with an empty pool kills all choices.
    for (auto [e, count] : required_map) {
        auto it = pool.find(e);
        std::vector<CandidateEntry> candidates =
            it == pool.end() ? std::vector<CandidateEntry>{} : it->second;
        std::sort(candidates.begin(), candidates.end());

        std::vector<CandidateEntry> forced;
        std::vector<CandidateEntry> optional;
        for (const auto& entry : candidates) {
            if (require_all_singles && !entry.pair)
                forced.push_back(entry);
            else
                optional.push_back(entry);
        }
        if (forced.size() > count) return {};
        const unsigned to_choose = count - static_cast<unsigned>(forced.size());
        if (to_choose > optional.size()) return {};

        std::vector<std::vector<CandidateEntry>> choices;
        std::vector<unsigned> idx(to_choose);
        // Lexicographic combinations of `to_choose` out of optional.
        std::function<void(unsigned, unsigned)> rec = [&](unsigned pos, unsigned start) {
            if (pos == to_choose) {
                std::vector<CandidateEntry> sel = forced;
                for (unsigned q : idx) sel.push_back(optional[q]);
                choices.push_back(std::move(sel));
                return;
            }
            for (unsigned s = start; s < optional.size(); ++s) {
                idx[pos] = s;
                rec(pos + 1, s + 1);
            }
        };
        rec(0, 0);
        if (choices.empty()) return {};
        per_class.push_back(std::move(choices));
    }

    if (per_class.empty()) return {};
    std::vector<CandidateSet> out;
    std::vector<size_t> cursor(per_class.size(), 0);
    while (true) {
        CandidateSet set;
        for (size_t c = 0; c < per_class.size(); ++c)
            for (const auto& e : per_class[c][cursor[c]]) set.entries.push_back(e);
        std::sort(set.entries.begin(), set.entries.end());
        out.push_back(std::move(set));
        // Advance the mixed-radix cursor.
        size_t c = 0;
        while (c < cursor.size()) {
            if (++cursor[c] < per_class[c].size()) break;
            cursor[c] = 0;
            ++c;
        }
        if (c == cursor.size()) break;
    }
    return out;
}

Matrix point_hessian(const CandidateEntry& entry,
                     const std::vector<BasicInvariant>& invs,
                     const std::vector<CycloScalar>& v) {
    const size_t n = v.size();
    if (!entry.pair) return invs.at(entry.i).hessian_at(v);
    const auto& f = invs.at(entry.i);
    const auto& g = invs.at(entry.j);
    const auto gf = f.gradient_at(v);
    const auto gg = g.gradient_at(v);
    const CycloScalar fv = f.value_at(v);
    const CycloScalar gv = g.value_at(v);
    Matrix h = f.hessian_at(v).scaled(gv) + g.hessian_at(v).scaled(fv);
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b)
            h.at(a, b) += gf[a] * gg[b] + gg[a] * gf[b];
    return h;
}

Certificate certify(const GroupSpec& spec, const CandidateSet& set,
                    const std::vector<BasicInvariant>& invs,
                    const RegularVector& v) {
    if (!v.certified)
        throw Error("certify: evaluation point is not a certified regular vector");
    const unsigned n = static_cast<unsigned>(v.point.size());
    const size_t l = static_cast<size_t>(n) * (n + 1) / 2;
    if (set.entries.size() != l)
        throw Error("certify: candidate set has " +
                    std::to_string(set.entries.size()) + " entries, need " +
                    std::to_string(l));
    // Rows: candidates; columns: upper-triangular positions (a, b), a <= b.
    Matrix m(l, l);
    for (size_t r = 0; r < l; ++r) {
        const Matrix h = point_hessian(set.entries[r], invs, v.point);
        size_t col = 0;
        for (unsigned a = 0; a < n; ++a)
            for (unsigned b = a; b < n; ++b) m.at(r, col++) = h.at(a, b);
    }
    Certificate cert;
    cert.spec = spec;
    cert.set = set;
    cert.point = v.point;
    cert.determinant = m.determinant();
    cert.certified = !cert.determinant.is_zero();
    return cert;
}

CandidateSet classical_T(GroupType type, unsigned n,
                         const std::vector<std::pair<unsigned, unsigned>>& t0_pairs) {
    if (type != GroupType::A && type != GroupType::B && type != GroupType::D)
        throw Error("classical_T: type must be A, B or D");
    if (n < 1 || (type == GroupType::D && n < 2))
        throw Error("classical_T: rank too small");

    // Required k values for the removed products and per-k pair validity.
    unsigned k_lo, k_hi;
    auto pair_ok = [&](unsigned i, unsigned j, unsigned k) {
        if (i < 1 || j < i || i + j != k) return false;
        if (type == GroupType::D) return j <= n - 1;
        return j <= n;
    };
    switch (type) {
        case GroupType::A: k_lo = n + 2; k_hi = 2 * n; break;
        case GroupType::B: k_lo = n + 1; k_hi = 2 * n; break;
        default:           k_lo = n;     k_hi = 2 * n - 2; break;  // D
    }

    std::map<unsigned, std::pair<unsigned, unsigned>> removal;
    if (t0_pairs.empty()) {
        for (unsigned k = k_lo; k <= k_hi; ++k) {
            const unsigned cap = type == GroupType::D ? n - 1 : n;
            unsigned i = k > cap ? k - cap : 1;
            if (!pair_ok(i, k - i, k))
                throw Error("classical_T: no valid default pair for k=" +
                            std::to_string(k));
            removal[k] = {i, k - i};
        }
    } else {
        for (auto [i, j] : t0_pairs) {
            if (i > j) std::swap(i, j);
            const unsigned k = i + j;
            if (k < k_lo || k > k_hi || !pair_ok(i, j, k))
                throw Error("classical_T: pair r" + std::to_string(i) + "*r" +
                            std::to_string(j) + " is not a valid T0 choice");
            if (removal.count(k))
                throw Error("classical_T: duplicate T0 pair for k=" + std::to_string(k));
            removal[k] = {i, j};
        }
        for (unsigned k = k_lo; k <= k_hi; ++k)
            if (!removal.count(k))
                throw Error("classical_T: T0 misses degree k=" + std::to_string(k));
    }

    CandidateSet set;
    for (unsigned i = 1; i <= n; ++i) {
        if (type == GroupType::A && i == 1) continue;  // linear, zero Hessian
        set.entries.push_back({false, i - 1, i - 1});
    }
    for (unsigned i = 1; i <= n; ++i)
        for (unsigned j = i; j <= n; ++j) {
            if (type == GroupType::D && i == n - 1 && j == n) continue;
            auto it = removal.find(i + j);
            if (it != removal.end() && it->second == std::make_pair(i, j)) continue;
            set.entries.push_back({true, i - 1, j - 1});
        }
    std::sort(set.entries.begin(), set.entries.end());
    return set;
}

CandidateSet dihedral_basis() {
    CandidateSet set;
    set.entries.push_back({false, 0, 0});  // rho_1
    set.entries.push_back({true, 0, 0});   // rho_1^2
    set.entries.push_back({false, 1, 1});  // rho_2
    return set;
}

CandidateSet product_basis(const CandidateSet& ta, unsigned rank_a,
                           const CandidateSet& tb, unsigned rank_b) {
    CandidateSet set;
    for (const auto& e : ta.entries) set.entries.push_back(e);
    for (const auto& e : tb.entries)
        set.entries.push_back({e.pair, e.i + rank_a, e.j + rank_a});
    for (unsigned i = 0; i < rank_a; ++i)
        for (unsigned j = 0; j < rank_b; ++j)
            set.entries.push_back({true, i, rank_a + j});
    const size_t expect = static_cast<size_t>(rank_a + rank_b) *
                          (rank_a + rank_b + 1) / 2;
    if (set.entries.size() != expect)
        throw Error("product_basis: factor sets have the wrong sizes");
    return set;
}

} // namespace hessbasis
