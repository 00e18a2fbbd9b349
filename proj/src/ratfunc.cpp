#include "skeinalg/ratfunc.hpp"

#include <vector>

namespace skein {

namespace {

// Dense polynomials in Q[q], coefficients ascending from degree 0, no
// trailing zeros. Only used for normalization; everything else stays sparse.
using Dense = std::vector<Rational>;

Dense to_dense(const LaurentPoly& p) {
    Dense d;
    if (p.is_zero()) return d;
    int lo = p.min_exp();
    d.assign(static_cast<size_t>(p.max_exp() - lo) + 1, Rational(0));
    for (const auto& [k, c] : p.coeffs()) d[static_cast<size_t>(k - lo)] = c;
    return d;
}

void trim(Dense& d) {
    while (!d.empty() && d.back().is_zero()) d.pop_back();
}

LaurentPoly from_dense(const Dense& d, int shift) {
    LaurentPoly p;
    for (size_t i = 0; i < d.size(); ++i)
        if (!d[i].is_zero()) p.set(static_cast<int>(i) + shift, d[i]);
    return p;
}

// Remainder of a by b (b nonzero), in place of a.
void rem_inplace(Dense& a, const Dense& b) {
    Rational lead = b.back();
    while (a.size() >= b.size()) {
        Rational f = a.back() / lead;
        size_t off = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        trim(a);
        if (a.empty()) return;
    }
}

// Exact quotient a / b; remainder must vanish.
Dense div_exact(Dense a, const Dense& b) {
    Dense q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    Rational lead = b.back();
    while (a.size() >= b.size()) {
        Rational f = a.back() / lead;
        size_t off = a.size() - b.size();
        q[off] = f;
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        trim(a);
        if (a.empty()) break;
    }
    return q;
}

// Monic gcd in Q[q].
Dense gcd_monic(Dense a, Dense b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        rem_inplace(a, b);
        std::swap(a, b);
    }
    if (!a.empty()) {
        Rational lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

} // namespace

RatFunc::RatFunc(const LaurentPoly& numer, const LaurentPoly& denom)
    : num_(numer), den_(denom) {
    if (denom.is_zero()) throw DivisionByZero("rational function with zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly::one();
        return;
    }
    // Split off the q-valuation, reduce the polynomial parts, then put the
    // q power back on whichever side keeps exponents non-negative.
    int val = num_.min_exp() - den_.min_exp();
    Dense n = to_dense(num_.shifted(-num_.min_exp()));
    Dense d = to_dense(den_.shifted(-den_.min_exp()));
    Dense g = gcd_monic(n, d);
    if (g.size() > 1) {
        n = div_exact(std::move(n), g);
        d = div_exact(std::move(d), g);
    }
    Rational lead = d.back();
    for (auto& c : n) c /= lead;
    for (auto& c : d) c /= lead;
    num_ = from_dense(n, val > 0 ? val : 0);
    den_ = from_dense(d, val < 0 ? -val : 0);
}

RatFunc RatFunc::operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DivisionByZero("division by the zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of the zero rational function");
    return RatFunc(den_, num_);
}

std::string RatFunc::str() const {
    if (den_.is_one()) return num_.str();
    return num_.str() + " / " + den_.str();
}

RatFunc ratfunc_field_ops(const RatFunc& a, const RatFunc& b, FieldOp op) {
    switch (op) {
        case FieldOp::add: return a + b;
        case FieldOp::mul: return a * b;
        case FieldOp::div: return a / b;
    }
    throw Error("unknown field operation");
}

} // namespace skein
