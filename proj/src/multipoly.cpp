#include "hessbasis/multipoly.hpp"

#include <numeric>
#include <sstream>

#include "hessbasis/error.hpp"

namespace hessbasis {

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
    const unsigned ta = std::accumulate(a.begin(), a.end(), 0u);
    const unsigned tb = std::accumulate(b.begin(), b.end(), 0u);
    if (ta != tb) return ta < tb;
    return a < b;
}

MultiPoly MultiPoly::constant(unsigned nvars, CycloScalar v) {
    MultiPoly p(nvars);
    if (!v.is_zero()) p.t_.emplace(Exponents(nvars, 0), std::move(v));
    return p;
}

MultiPoly MultiPoly::variable(unsigned nvars, unsigned index) {
    if (index >= nvars) throw Error("variable index out of range");
    MultiPoly p(nvars);
    Exponents e(nvars, 0);
    e[index] = 1;
    p.t_.emplace(std::move(e), CycloScalar(1));
    return p;
}

MultiPoly MultiPoly::linear(const std::vector<CycloScalar>& w) {
    MultiPoly p(static_cast<unsigned>(w.size()));
    for (size_t j = 0; j < w.size(); ++j) {
        if (w[j].is_zero()) continue;
        Exponents e(w.size(), 0);
        e[j] = 1;
        p.t_.emplace(std::move(e), w[j]);
    }
    return p;
}

int MultiPoly::degree() const {
    if (t_.empty()) return -1;
    // Graded order: last term has maximal total degree.
    const Exponents& e = t_.rbegin()->first;
    return static_cast<int>(std::accumulate(e.begin(), e.end(), 0u));
}

bool MultiPoly::is_homogeneous() const {
    if (t_.empty()) return true;
    const unsigned d = std::accumulate(t_.begin()->first.begin(),
                                       t_.begin()->first.end(), 0u);
    const unsigned dtop = std::accumulate(t_.rbegin()->first.begin(),
                                          t_.rbegin()->first.end(), 0u);
    return d == dtop;
}

void MultiPoly::add_term(const Exponents& exp, const CycloScalar& c) {
    if (exp.size() != n_) throw Error("exponent length mismatch");
    if (c.is_zero()) return;
    auto it = t_.find(exp);
    if (it == t_.end()) {
        t_.emplace(exp, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(n_);
    for (const auto& [e, c] : t_) out.t_.emplace(e, -c);
    return out;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    if (a.n_ != b.n_) throw Error("polynomial variable-count mismatch");
    MultiPoly out = a;
    for (const auto& [e, c] : b.t_) out.add_term(e, c);
    return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    if (a.n_ != b.n_) throw Error("polynomial variable-count mismatch");
    MultiPoly out = a;
    for (const auto& [e, c] : b.t_) out.add_term(e, -c);
    return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.n_ != b.n_) throw Error("polynomial variable-count mismatch");
    MultiPoly out(a.n_);
    Exponents e(a.n_, 0);
    for (const auto& [ea, ca] : a.t_)
        for (const auto& [eb, cb] : b.t_) {
            for (unsigned i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

MultiPoly MultiPoly::scaled(const CycloScalar& s) const {
    MultiPoly out(n_);
    if (s.is_zero()) return out;
    for (const auto& [e, c] : t_) out.t_.emplace(e, c * s);
    return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
    MultiPoly acc = MultiPoly::constant(n_, CycloScalar(1));
    for (unsigned i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

MultiPoly MultiPoly::derivative(unsigned var) const {
    if (var >= n_) throw Error("derivative variable out of range");
    MultiPoly out(n_);
    for (const auto& [e, c] : t_) {
        if (e[var] == 0) continue;
        Exponents d = e;
        d[var] -= 1;
        out.t_.emplace(std::move(d), c * CycloScalar(static_cast<long>(e[var])));
    }
    return out;
}

CycloScalar MultiPoly::evaluate(const std::vector<CycloScalar>& point) const {
    if (point.size() != n_) throw Error("evaluation point dimension mismatch");
    // Power cache per variable up to the needed exponent.
    std::vector<std::vector<CycloScalar>> powers(n_);
    for (unsigned i = 0; i < n_; ++i) powers[i].push_back(CycloScalar(1));
    CycloScalar acc(0);
    for (const auto& [e, c] : t_) {
        CycloScalar term = c;
        for (unsigned i = 0; i < n_; ++i) {
            if (e[i] == 0) continue;
            auto& pw = powers[i];
            while (pw.size() <= e[i]) pw.push_back(pw.back() * point[i]);
            term *= pw[e[i]];
        }
        acc += term;
    }
    return acc;
}

MultiPoly MultiPoly::substitute_linear(const Matrix& m) const {
    if (m.rows() != n_ || m.cols() != n_)
        throw Error("substitution matrix dimension mismatch");
    // Images of the variables, then per-term power products with caching.
    std::vector<MultiPoly> image(n_, MultiPoly(n_));
    for (unsigned i = 0; i < n_; ++i) {
        std::vector<CycloScalar> row(n_);
        for (unsigned j = 0; j < n_; ++j) row[j] = m.at(i, j);
        image[i] = MultiPoly::linear(row);
    }
    std::vector<std::vector<MultiPoly>> powers(n_);
    for (unsigned i = 0; i < n_; ++i)
        powers[i].push_back(MultiPoly::constant(n_, CycloScalar(1)));
    MultiPoly out(n_);
    for (const auto& [e, c] : t_) {
        MultiPoly term = MultiPoly::constant(n_, c);
        for (unsigned i = 0; i < n_; ++i) {
            if (e[i] == 0) continue;
            auto& pw = powers[i];
            while (pw.size() <= e[i]) pw.push_back(pw.back() * image[i]);
            term = term * pw[e[i]];
        }
        out = out + term;
    }
    return out;
}

std::map<unsigned, MultiPoly> MultiPoly::homogeneous_components() const {
    std::map<unsigned, MultiPoly> out;
    for (const auto& [e, c] : t_) {
        const unsigned d = std::accumulate(e.begin(), e.end(), 0u);
        auto [it, fresh] = out.try_emplace(d, MultiPoly(n_));
        it->second.t_.emplace(e, c);
    }
    return out;
}

std::string MultiPoly::key() const {
    std::string out = "n" + std::to_string(n_);
    for (const auto& [e, c] : t_) {
        out += '{';
        for (unsigned x : e) {
            out += std::to_string(x);
            out += ',';
        }
        out += c.key();
        out += '}';
    }
    return out;
}

std::string MultiPoly::str(const std::string& stem) const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : t_) {
        if (!first) os << " + ";
        auto r = c.try_rational();
        os << (r ? r->get_str() : "(" + c.str() + ")");
        for (unsigned i = 0; i < n_; ++i) {
            if (e[i] == 0) continue;
            os << "*" << stem << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
        }
        first = false;
    }
    return os.str();
}

size_t SymTensorPoly::index(unsigned n, unsigned a, unsigned b) {
    if (a > b) std::swap(a, b);
    if (b >= n) throw Error("tensor index out of range");
    // Row-major upper triangular: offset(a) = a*n - a(a-1)/2.
    return static_cast<size_t>(a) * n - static_cast<size_t>(a) * (a - 1) / 2 +
           (b - a);
}

const MultiPoly& SymTensorPoly::at(unsigned a, unsigned b) const {
    return e_[index(n_, a, b)];
}

void SymTensorPoly::set(unsigned a, unsigned b, MultiPoly p) {
    if (p.nvars() != n_) throw Error("tensor entry variable-count mismatch");
    e_[index(n_, a, b)] = std::move(p);
}

SymTensorPoly operator+(const SymTensorPoly& a, const SymTensorPoly& b) {
    if (a.n_ != b.n_) throw Error("tensor sum dimension mismatch");
    SymTensorPoly out = a;
    for (size_t i = 0; i < out.e_.size(); ++i) out.e_[i] = out.e_[i] + b.e_[i];
    return out;
}

SymTensorPoly operator-(const SymTensorPoly& a, const SymTensorPoly& b) {
    if (a.n_ != b.n_) throw Error("tensor difference dimension mismatch");
    SymTensorPoly out = a;
    for (size_t i = 0; i < out.e_.size(); ++i) out.e_[i] = out.e_[i] - b.e_[i];
    return out;
}

SymTensorPoly SymTensorPoly::scaled_poly(const MultiPoly& f) const {
    SymTensorPoly out(n_);
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] * f;
    return out;
}

SymTensorPoly SymTensorPoly::scaled(const CycloScalar& s) const {
    SymTensorPoly out(n_);
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i].scaled(s);
    return out;
}

bool SymTensorPoly::is_zero() const {
    for (const auto& p : e_)
        if (!p.is_zero()) return false;
    return true;
}

bool SymTensorPoly::homogeneous_of_degree(unsigned d) const {
    for (const auto& p : e_) {
        if (p.is_zero()) continue;
        if (!p.is_homogeneous() || p.degree() != static_cast<int>(d))
            return false;
    }
    return true;
}

std::map<unsigned, SymTensorPoly> SymTensorPoly::homogeneous_components() const {
    std::map<unsigned, SymTensorPoly> out;
    for (unsigned a = 0; a < n_; ++a)
        for (unsigned b = a; b < n_; ++b) {
            for (auto& [d, comp] : at(a, b).homogeneous_components()) {
                auto [it, fresh] = out.try_emplace(d, SymTensorPoly(n_));
                it->second.set(a, b, std::move(comp));
            }
        }
    return out;
}

SymTensorPoly SymTensorPoly::pullback(const Matrix& g) const {
    if (g.rows() != n_ || g.cols() != n_)
        throw Error("pullback matrix dimension mismatch");
    // sigma'(x) = g^T sigma(g x) g, computed entrywise on the full matrix.
    std::vector<std::vector<MultiPoly>> full(n_, std::vector<MultiPoly>(n_, MultiPoly(n_)));
    for (unsigned a = 0; a < n_; ++a)
        for (unsigned b = 0; b < n_; ++b) full[a][b] = at(a, b).substitute_linear(g);
    SymTensorPoly out(n_);
    for (unsigned a = 0; a < n_; ++a)
        for (unsigned b = a; b < n_; ++b) {
            MultiPoly acc(n_);
            for (unsigned i = 0; i < n_; ++i) {
                if (g.at(i, a).is_zero()) continue;
                for (unsigned j = 0; j < n_; ++j) {
                    if (g.at(j, b).is_zero()) continue;
                    acc = acc + full[i][j].scaled(g.at(i, a) * g.at(j, b));
                }
            }
            out.set(a, b, std::move(acc));
        }
    return out;
}

SymTensorPoly hessian_sym(const MultiPoly& p) {
    const unsigned n = p.nvars();
    SymTensorPoly out(n);
    for (unsigned a = 0; a < n; ++a) {
        const MultiPoly da = p.derivative(a);
        for (unsigned b = a; b < n; ++b) out.set(a, b, da.derivative(b));
    }
    return out;
}

Matrix tensor_eval(const SymTensorPoly& sigma, const std::vector<CycloScalar>& v) {
    const unsigned n = sigma.nvars();
    if (v.size() != n) throw Error("tensor evaluation dimension mismatch");
    Matrix out(n, n);
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = a; b < n; ++b) {
            CycloScalar val = sigma.at(a, b).evaluate(v);
            out.at(a, b) = val;
            if (a != b) out.at(b, a) = val;
        }
    return out;
}

std::vector<CycloScalar> gradient_at(const MultiPoly& p,
                                     const std::vector<CycloScalar>& v) {
    std::vector<CycloScalar> out;
    out.reserve(p.nvars());
    for (unsigned i = 0; i < p.nvars(); ++i)
        out.push_back(p.derivative(i).evaluate(v));
    return out;
}

} // namespace hessbasis
