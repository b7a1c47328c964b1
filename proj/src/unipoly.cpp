#include "hessbasis/unipoly.hpp"

#include <sstream>

#include "hessbasis/error.hpp"

namespace hessbasis {

UniPoly UniPoly::constant(CycloScalar v) {
    UniPoly p;
    if (!v.is_zero()) p.c_.push_back(std::move(v));
    return p;
}

UniPoly UniPoly::monomial(CycloScalar v, unsigned power) {
    UniPoly p;
    if (!v.is_zero()) {
        p.c_.assign(power + 1, CycloScalar(0));
        p.c_[power] = std::move(v);
    }
    return p;
}

UniPoly UniPoly::x_power_minus_one(unsigned m) {
    UniPoly p;
    p.c_.assign(m + 1, CycloScalar(0));
    p.c_[0] = CycloScalar(-1);
    p.c_[m] = CycloScalar(1);
    return p;
}

UniPoly UniPoly::one_minus_t_power(unsigned m) {
    UniPoly p;
    p.c_.assign(m + 1, CycloScalar(0));
    p.c_[0] = CycloScalar(1);
    p.c_[m] = CycloScalar(-1);
    return p;
}

UniPoly UniPoly::operator-() const {
    UniPoly out(*this);
    for (auto& c : out.c_) c = -c;
    return out;
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    UniPoly out;
    out.c_.resize(std::max(a.c_.size(), b.c_.size()), CycloScalar(0));
    for (size_t i = 0; i < a.c_.size(); ++i) out.c_[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) out.c_[i] += b.c_[i];
    out.normalize();
    return out;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    UniPoly out;
    out.c_.resize(std::max(a.c_.size(), b.c_.size()), CycloScalar(0));
    for (size_t i = 0; i < a.c_.size(); ++i) out.c_[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) out.c_[i] -= b.c_[i];
    out.normalize();
    return out;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    UniPoly out;
    if (a.is_zero() || b.is_zero()) return out;
    out.c_.assign(a.c_.size() + b.c_.size() - 1, CycloScalar(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            out.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    out.normalize();
    return out;
}

UniPoly UniPoly::scaled(const CycloScalar& s) const {
    UniPoly out;
    if (s.is_zero()) return out;
    out.c_ = c_;
    for (auto& c : out.c_) c *= s;
    return out;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw Error("polynomial division by zero");
    UniPoly rem = a;
    UniPoly quot;
    if (a.degree() < b.degree()) return {quot, rem};
    const CycloScalar lead_inv = b.c_.back().inverse();
    quot.c_.assign(a.c_.size() - b.c_.size() + 1, CycloScalar(0));
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        const size_t shift = rem.c_.size() - b.c_.size();
        CycloScalar f = rem.c_.back() * lead_inv;
        quot.c_[shift] = f;
        for (size_t i = 0; i < b.c_.size(); ++i)
            rem.c_[shift + i] -= f * b.c_[i];
        rem.normalize();
    }
    quot.normalize();
    return {quot, rem};
}

UniPoly UniPoly::exact_div(const UniPoly& divisor) const {
    auto [q, r] = divmod(*this, divisor);
    if (!r.is_zero()) throw Error("polynomial division not exact");
    return q;
}

CycloScalar UniPoly::eval(const CycloScalar& x) const {
    CycloScalar acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

UniPoly UniPoly::reversed() const {
    UniPoly out;
    out.c_.assign(c_.rbegin(), c_.rend());
    out.normalize();
    return out;
}

std::string UniPoly::key() const {
    std::string out = "d" + std::to_string(degree());
    for (const auto& c : c_) {
        out += ';';
        out += c.key();
    }
    return out;
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        auto r = c_[i].try_rational();
        std::string cs = r ? r->get_str() : "(" + c_[i].str() + ")";
        if (i == 0) {
            os << cs;
        } else {
            if (cs != "1") os << cs << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

UniPoly cyclotomic_polynomial(unsigned m) {
    if (m < 1) throw Error("cyclotomic polynomial needs m >= 1");
    const auto& coeffs = cyclotomic_coeffs(m);
    std::vector<CycloScalar> c;
    c.reserve(coeffs.size());
    for (const auto& r : coeffs) c.emplace_back(CycloScalar(r));
    return UniPoly(std::move(c));
}

} // namespace hessbasis
