#include "hessbasis/cyclo.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace hessbasis {

unsigned euler_phi(unsigned m) {
    unsigned result = m;
    for (unsigned p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) m /= p;
            result -= result / p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

namespace {

using Coeffs = std::vector<Rational>;

void trim(Coeffs& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient of a by monic b; requires exact divisibility (used only for
// x^m - 1 over products of cyclotomic polynomials).
Coeffs exact_div_monic(Coeffs a, const Coeffs& b) {
    trim(a);
    if (a.empty()) return {};
    const size_t db = b.size() - 1;
    if (a.size() - 1 < db) throw Error("cyclotomic division underflow");
    Coeffs q(a.size() - db);
    for (size_t k = q.size(); k-- > 0;) {
        Rational coef = a[k + db];
        q[k] = coef;
        if (coef == 0) continue;
        for (size_t j = 0; j <= db; ++j) a[k + j] -= coef * b[j];
    }
    trim(a);
    if (!a.empty()) throw Error("cyclotomic division not exact");
    return q;
}

struct ConductorContext {
    unsigned m = 1;
    unsigned phi = 1;
    Coeffs phi_poly;                  // monic, length phi+1
    std::vector<Coeffs> pow_rows;     // x^j mod Phi_m for j = 0..row_count-1
};

class ContextCache {
public:
    const ConductorContext& get(unsigned m) {
        // Contexts are immutable and never evicted, so raw pointers can be
        // cached per thread to keep the hot path lock-free.
        thread_local std::map<unsigned, const ConductorContext*> local;
        auto hit = local.find(m);
        if (hit != local.end()) return *hit->second;
        std::lock_guard<std::mutex> lock(mu_);
        const ConductorContext& ctx = get_locked(m);
        local.emplace(m, &ctx);
        return ctx;
    }

private:
    const ConductorContext& get_locked(unsigned m) {
        auto it = cache_.find(m);
        if (it != cache_.end()) return *it->second;

        auto ctx = std::make_unique<ConductorContext>();
        ctx->m = m;
        ctx->phi = euler_phi(m);
        ctx->phi_poly = compute_phi_locked(m);

        const unsigned phi = ctx->phi;
        // Rows cover multiplication (degree up to 2phi-2) and conductor
        // lifting (exponents up to m-1).
        const unsigned rows = std::max(2 * phi > 1 ? 2 * phi - 1 : 1, m);
        ctx->pow_rows.resize(rows);
        for (unsigned j = 0; j < rows; ++j) {
            Coeffs& row = ctx->pow_rows[j];
            if (j < phi) {
                row.assign(phi, Rational(0));
                row[j] = 1;
            } else {
                // x^j = x * x^{j-1}, reduced via x^phi = -(low part of Phi).
                const Coeffs& prev = ctx->pow_rows[j - 1];
                row.assign(phi, Rational(0));
                for (unsigned i = 0; i + 1 < phi; ++i) row[i + 1] = prev[i];
                const Rational& top = prev[phi - 1];
                if (top != 0)
                    for (unsigned i = 0; i < phi; ++i)
                        row[i] -= top * ctx->phi_poly[i];
            }
        }

        auto& slot = cache_[m];
        slot = std::move(ctx);
        return *slot;
    }

    Coeffs compute_phi_locked(unsigned m) {
        if (m == 1) return {Rational(-1), Rational(1)};  // x - 1
        // Phi_m = (x^m - 1) / prod_{d|m, d<m} Phi_d
        Coeffs numer(m + 1, Rational(0));
        numer[0] = -1;
        numer[m] = 1;
        for (unsigned d = 1; d < m; ++d) {
            if (m % d != 0) continue;
            numer = exact_div_monic(std::move(numer), get_locked(d).phi_poly);
        }
        return numer;
    }

    std::mutex mu_;
    std::map<unsigned, std::unique_ptr<ConductorContext>> cache_;
};

ContextCache& cache() {
    static ContextCache c;
    return c;
}

unsigned lcm_u(unsigned a, unsigned b) {
    return static_cast<unsigned>(std::lcm<unsigned long>(a, b));
}

} // namespace

const std::vector<Rational>& cyclotomic_coeffs(unsigned m) {
    if (m < 1) throw Error("cyclotomic polynomial needs m >= 1");
    return cache().get(m).phi_poly;
}

CycloScalar::CycloScalar(unsigned conductor, std::vector<Rational> coords)
    : m_(conductor), c_(std::move(coords)) {
    if (conductor < 1) throw Error("conductor must be >= 1");
    if (c_.size() != euler_phi(conductor))
        throw Error("coordinate vector length must equal phi(conductor)");
}

CycloScalar CycloScalar::zeta_power(unsigned m, long k) {
    const auto& ctx = cache().get(m);
    long r = k % static_cast<long>(m);
    if (r < 0) r += m;
    CycloScalar out;
    out.m_ = m;
    out.c_ = ctx.pow_rows[static_cast<size_t>(r)];
    return out;
}

bool CycloScalar::is_zero() const {
    for (const auto& c : c_)
        if (c != 0) return false;
    return true;
}

bool CycloScalar::is_one() const {
    if (c_[0] != 1) return false;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

std::optional<Rational> CycloScalar::try_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return std::nullopt;
    return c_[0];
}

Rational CycloScalar::to_rational() const {
    auto r = try_rational();
    if (!r) throw Error("cyclotomic value is not rational: " + str());
    return *r;
}

CycloScalar CycloScalar::lifted_to(unsigned target) const {
    if (target == m_) return *this;
    if (target % m_ != 0)
        throw Error("conductor lift requires divisibility");
    const auto& ctx = cache().get(target);
    const unsigned stride = target / m_;
    CycloScalar out;
    out.m_ = target;
    out.c_.assign(ctx.phi, Rational(0));
    for (size_t k = 0; k < c_.size(); ++k) {
        if (c_[k] == 0) continue;
        const Coeffs& row = ctx.pow_rows[k * stride];
        for (unsigned i = 0; i < ctx.phi; ++i)
            if (row[i] != 0) out.c_[i] += c_[k] * row[i];
    }
    return out;
}

CycloScalar CycloScalar::operator-() const {
    CycloScalar out(*this);
    for (auto& c : out.c_) c = -c;
    return out;
}

CycloScalar operator+(const CycloScalar& a, const CycloScalar& b) {
    if (a.m_ != b.m_) {
        const unsigned m = lcm_u(a.m_, b.m_);
        return a.lifted_to(m) + b.lifted_to(m);
    }
    CycloScalar out(a);
    for (size_t i = 0; i < out.c_.size(); ++i) out.c_[i] += b.c_[i];
    return out;
}

CycloScalar operator-(const CycloScalar& a, const CycloScalar& b) {
    if (a.m_ != b.m_) {
        const unsigned m = lcm_u(a.m_, b.m_);
        return a.lifted_to(m) - b.lifted_to(m);
    }
    CycloScalar out(a);
    for (size_t i = 0; i < out.c_.size(); ++i) out.c_[i] -= b.c_[i];
    return out;
}

CycloScalar operator*(const CycloScalar& a, const CycloScalar& b) {
    if (a.m_ != b.m_) {
        // Rational times anything needs no lift machinery.
        if (a.m_ == 1) {
            CycloScalar out(b);
            for (auto& c : out.c_) c *= a.c_[0];
            return out;
        }
        if (b.m_ == 1) return b * a;
        const unsigned m = lcm_u(a.m_, b.m_);
        return a.lifted_to(m) * b.lifted_to(m);
    }
    const unsigned phi = static_cast<unsigned>(a.c_.size());
    if (phi == 1) {
        CycloScalar out(a);
        out.c_[0] *= b.c_[0];
        return out;
    }
    // Convolution, then reduction of degrees >= phi via cached rows.
    std::vector<Rational> conv(2 * phi - 1, Rational(0));
    for (unsigned i = 0; i < phi; ++i) {
        if (a.c_[i] == 0) continue;
        for (unsigned j = 0; j < phi; ++j) {
            if (b.c_[j] == 0) continue;
            conv[i + j] += a.c_[i] * b.c_[j];
        }
    }
    const auto& ctx = cache().get(a.m_);
    CycloScalar out;
    out.m_ = a.m_;
    out.c_.assign(conv.begin(), conv.begin() + phi);
    for (unsigned j = phi; j < 2 * phi - 1; ++j) {
        if (conv[j] == 0) continue;
        const Coeffs& row = ctx.pow_rows[j];
        for (unsigned i = 0; i < phi; ++i)
            if (row[i] != 0) out.c_[i] += conv[j] * row[i];
    }
    return out;
}

CycloScalar CycloScalar::inverse() const {
    if (is_zero()) throw Error("division by zero");
    if (m_ == 1) {
        CycloScalar out;
        out.c_[0] = 1 / c_[0];
        return out;
    }
    // Extended Euclid in Q[x]: u*a + v*Phi_m = 1, inverse = u mod Phi_m.
    Coeffs r0 = cache().get(m_).phi_poly;
    Coeffs r1 = c_;
    trim(r1);
    Coeffs s0{}, s1{Rational(1)};
    while (!r1.empty()) {
        // r0 = q*r1 + r2
        Coeffs q(r0.size() > r1.size() ? r0.size() - r1.size() + 1 : 1,
                 Rational(0));
        Coeffs rem = r0;
        const Rational lead = r1.back();
        while (rem.size() >= r1.size() && !rem.empty()) {
            Rational f = rem.back() / lead;
            size_t shift = rem.size() - r1.size();
            q[shift] = f;
            for (size_t i = 0; i < r1.size(); ++i)
                rem[shift + i] -= f * r1[i];
            trim(rem);
            if (rem.size() < r1.size()) break;
        }
        // s2 = s0 - q*s1
        Coeffs s2 = s0;
        if (s2.size() < q.size() + s1.size())
            s2.resize(q.size() + s1.size() > 0 ? q.size() + s1.size() - 1 : 0,
                      Rational(0));
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < s1.size(); ++j) {
                if (s2.size() <= i + j) s2.resize(i + j + 1, Rational(0));
                s2[i + j] -= q[i] * s1[j];
            }
        }
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is the gcd, a nonzero constant since Phi_m is irreducible.
    if (r0.size() != 1)
        throw Error("inverse: gcd with cyclotomic polynomial not constant");
    const Rational scale = 1 / r0[0];
    CycloScalar out;
    out.m_ = m_;
    out.c_.assign(euler_phi(m_), Rational(0));
    for (size_t i = 0; i < s0.size() && i < out.c_.size(); ++i)
        out.c_[i] = s0[i] * scale;
    return out;
}

bool operator==(const CycloScalar& a, const CycloScalar& b) {
    if (a.m_ == b.m_) return a.c_ == b.c_;
    const unsigned m = lcm_u(a.m_, b.m_);
    return a.lifted_to(m).c_ == b.lifted_to(m).c_;
}

std::string CycloScalar::key() const {
    std::string out = std::to_string(m_);
    for (const auto& c : c_) {
        out += '|';
        out += c.get_str();
    }
    return out;
}

std::string CycloScalar::str() const {
    if (m_ == 1) return c_[0].get_str();
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        os << c_[i].get_str();
        if (i >= 1) os << "*z" << (i > 1 ? "^" + std::to_string(i) : "");
        first = false;
    }
    if (first) os << "0";
    os << " (m=" << m_ << ")";
    return os.str();
}

} // namespace hessbasis
