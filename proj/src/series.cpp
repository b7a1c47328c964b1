#include "hessbasis/series.hpp"

#include <sstream>

#include "hessbasis/error.hpp"

namespace hessbasis {

namespace {
void require_same_order(const TruncSeries& a, const TruncSeries& b) {
    if (a.order() != b.order())
        throw Error("truncated series orders differ");
}
} // namespace

TruncSeries TruncSeries::from_poly(const UniPoly& p, unsigned order) {
    TruncSeries s(order);
    const auto& c = p.coeffs();
    for (size_t i = 0; i < c.size() && i <= order; ++i) s.c_[i] = c[i];
    return s;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    require_same_order(a, b);
    TruncSeries out = a;
    for (size_t i = 0; i < out.c_.size(); ++i) out.c_[i] += b.c_[i];
    return out;
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
    require_same_order(a, b);
    TruncSeries out = a;
    for (size_t i = 0; i < out.c_.size(); ++i) out.c_[i] -= b.c_[i];
    return out;
}

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    require_same_order(a, b);
    TruncSeries out(a.order());
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; i + j < b.c_.size(); ++j) {
            if (b.c_[j].is_zero()) continue;
            out.c_[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return out;
}

TruncSeries TruncSeries::scaled(const CycloScalar& s) const {
    TruncSeries out = *this;
    for (auto& c : out.c_) c *= s;
    return out;
}

TruncSeries TruncSeries::reciprocal() const {
    if (c_[0].is_zero())
        throw Error("series reciprocal requires nonzero constant term");
    TruncSeries out(order());
    const CycloScalar inv0 = c_[0].inverse();
    out.c_[0] = inv0;
    for (size_t k = 1; k < c_.size(); ++k) {
        CycloScalar acc(0);
        for (size_t j = 1; j <= k; ++j) {
            if (c_[j].is_zero()) continue;
            acc += c_[j] * out.c_[k - j];
        }
        out.c_[k] = -(inv0 * acc);
    }
    return out;
}

bool TruncSeries::all_rational() const {
    for (const auto& c : c_)
        if (!c.try_rational()) return false;
    return true;
}

TruncSeries TruncSeries::demoted() const {
    TruncSeries out(order());
    for (size_t i = 0; i < c_.size(); ++i)
        out.c_[i] = CycloScalar(c_[i].to_rational());
    return out;
}

std::string TruncSeries::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < c_.size(); ++i) {
        if (i) os << ", ";
        auto r = c_[i].try_rational();
        os << (r ? r->get_str() : c_[i].str());
    }
    os << "]";
    return os.str();
}

} // namespace hessbasis
