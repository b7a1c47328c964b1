#include "hessbasis/tensor_decompose.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "hessbasis/error.hpp"

namespace hessbasis {

bool check_equivariance(const SymTensorPoly& sigma, const ReflectionGroup& group) {
    if (sigma.nvars() != group.rank())
        throw Error("equivariance check: dimension mismatch");
    for (const auto& g : group.generators())
        if (!(sigma.pullback(g) == sigma)) return false;
    return true;
}

std::vector<Exponents> invariant_monomial_basis(const std::vector<unsigned>& degrees,
                                                unsigned d) {
    const unsigned n = static_cast<unsigned>(degrees.size());
    std::vector<Exponents> out;
    Exponents current(n, 0);
    // Lexicographic over slots; weighted remainder must hit zero.
    std::function<void(unsigned, unsigned)> rec = [&](unsigned slot, unsigned left) {
        if (slot == n) {
            if (left == 0) out.push_back(current);
            return;
        }
        const unsigned dk = degrees[slot];
        for (unsigned e = 0; e * dk <= left; ++e) {
            current[slot] = e;
            rec(slot + 1, left - e * dk);
        }
        current[slot] = 0;
    };
    rec(0, d);
    return out;
}

MultiPoly entry_polynomial(const CandidateEntry& entry,
                           const std::vector<BasicInvariant>& invs) {
    const MultiPoly& pi = invs.at(entry.i).poly();
    if (!entry.pair) return pi;
    return pi * invs.at(entry.j).poly();
}

namespace {

// rho^e as an explicit polynomial, with cached generator powers.
class InvariantMonomials {
public:
    explicit InvariantMonomials(const std::vector<BasicInvariant>& invs)
        : invs_(invs), powers_(invs.size()) {
        const unsigned n = invs.empty() ? 0 : invs.front().poly().nvars();
        for (auto& p : powers_)
            p.push_back(MultiPoly::constant(n, CycloScalar(1)));
    }

    MultiPoly expand(const Exponents& e) {
        MultiPoly acc = powers_[0][0];
        for (size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            auto& pw = powers_[k];
            while (pw.size() <= e[k]) pw.push_back(pw.back() * invs_[k].poly());
            acc = acc * pw[e[k]];
        }
        return acc;
    }

private:
    const std::vector<BasicInvariant>& invs_;
    std::vector<std::vector<MultiPoly>> powers_;
};

struct Unknown {
    size_t slot;      // index into set.entries
    Exponents yexp;   // invariant-monomial exponent
};

} // namespace

Decomposition decompose(const SymTensorPoly& sigma, const CandidateSet& set,
                        const std::vector<BasicInvariant>& invs,
                        const ReflectionGroup& group) {
    const unsigned n = group.rank();
    if (sigma.nvars() != n) throw Error("decompose: tensor dimension mismatch");
    for (const auto& inv : invs)
        if (!inv.is_explicit())
            throw Error("decompose: needs explicit invariants (orbit-backed "
                        "invariants are out of scope)");
    if (!check_equivariance(sigma, group))
        throw Error("decompose: tensor is not equivariant");

    std::vector<unsigned> degrees;
    for (const auto& inv : invs) degrees.push_back(inv.degree());

    Decomposition out;
    out.set = set;
    out.coefficients.assign(set.entries.size(), MultiPoly(n));

    // Symbolic Hessians of the candidate polynomials, once.
    std::vector<SymTensorPoly> hess;
    std::vector<unsigned> hdeg;
    for (const auto& entry : set.entries) {
        const unsigned d = entry.degree(degrees);
        if (d < 2) throw Error("decompose: candidate entry of degree < 2");
        hess.push_back(hessian_sym(entry_polynomial(entry, invs)));
        hdeg.push_back(d - 2);
    }

    InvariantMonomials monomials(invs);

    for (auto& [d, component] : sigma.homogeneous_components()) {
        // Unknowns: (slot, invariant monomial of weighted degree d - hdeg).
        std::vector<Unknown> unknowns;
        std::vector<MultiPoly> columns;  // flattened per entry below
        for (size_t slot = 0; slot < set.entries.size(); ++slot) {
            if (hdeg[slot] > d) continue;
            for (auto& e : invariant_monomial_basis(degrees, d - hdeg[slot]))
                unknowns.push_back({slot, e});
        }
        // Row space: (tensor position, x-monomial) pairs.
        std::map<std::pair<size_t, Exponents>, size_t> row_of;
        auto row_id = [&row_of](size_t pos, const Exponents& e) {
            auto [it, fresh] = row_of.try_emplace({pos, e}, row_of.size());
            return it->second;
        };
        // Collect columns: contribution of each unknown to each entry.
        std::vector<std::map<size_t, CycloScalar>> cols(unknowns.size());
        for (size_t u = 0; u < unknowns.size(); ++u) {
            const MultiPoly factor = monomials.expand(unknowns[u].yexp);
            const SymTensorPoly contrib = hess[unknowns[u].slot].scaled_poly(factor);
            for (size_t pos = 0; pos < contrib.entry_count(); ++pos)
                for (const auto& [e, c] : contrib.entries()[pos].terms())
                    cols[u][row_id(pos, e)] = c;
        }
        std::map<size_t, CycloScalar> rhs;
        for (size_t pos = 0; pos < component.entry_count(); ++pos)
            for (const auto& [e, c] : component.entries()[pos].terms())
                rhs[row_id(pos, e)] = c;

        const size_t rows = row_of.size();
        if (unknowns.empty()) {
            if (!rhs.empty()) {
                out.residual = true;
                return out;
            }
            continue;
        }
        Matrix a(rows, unknowns.size());
        std::vector<CycloScalar> b(rows, CycloScalar(0));
        for (size_t u = 0; u < unknowns.size(); ++u)
            for (const auto& [r, c] : cols[u]) a.at(r, u) = c;
        for (const auto& [r, c] : rhs) b[r] = c;

        SolveResult solved = solve_exact(a, b);
        if (solved.status == SolveStatus::Inconsistent) {
            out.residual = true;
            return out;
        }
        if (solved.status == SolveStatus::Underdetermined)
            throw Error("decompose: underdetermined system contradicts the free "
                        "module structure");
        for (size_t u = 0; u < unknowns.size(); ++u)
            out.coefficients[unknowns[u].slot].add_term(unknowns[u].yexp,
                                                        solved.solution[u]);
    }
    return out;
}

SymTensorPoly reconstruct(const Decomposition& decomposition,
                          const std::vector<BasicInvariant>& invs) {
    if (invs.empty()) throw Error("reconstruct: no invariants");
    const unsigned n = invs.front().poly().nvars();
    InvariantMonomials monomials(invs);
    SymTensorPoly acc(n);
    for (size_t slot = 0; slot < decomposition.set.entries.size(); ++slot) {
        const MultiPoly& ay = decomposition.coefficients[slot];
        if (ay.is_zero()) continue;
        // a_i(rho_1..rho_n) as a polynomial in x.
        MultiPoly ax(n);
        for (const auto& [e, c] : ay.terms())
            ax = ax + monomials.expand(e).scaled(c);
        acc = acc + hessian_sym(entry_polynomial(decomposition.set.entries[slot], invs))
                        .scaled_poly(ax);
    }
    return acc;
}

SymTensorPoly symmetrize(const SymTensorPoly& sigma, const ReflectionGroup& group) {
    if (sigma.nvars() != group.rank())
        throw Error("symmetrize: dimension mismatch");
    const auto& elements = group.elements();
    SymTensorPoly acc(sigma.nvars());
    for (const auto& g : elements) acc = acc + sigma.pullback(g);
    return acc.scaled(CycloScalar(Rational(1, static_cast<long>(elements.size()))));
}

} // namespace hessbasis
