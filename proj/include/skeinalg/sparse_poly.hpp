#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "skeinalg/monomial.hpp"
#include "skeinalg/rational.hpp"
#include "skeinalg/ratfunc.hpp"

namespace skein {

/// Ring descriptor: ordered variable names. Polynomials carry a shared
/// pointer to one of these; operations mix operands only when the
/// descriptors agree by value.
class Ring {
public:
    explicit Ring(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    size_t arity() const { return vars_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::string& var_name(size_t i) const { return vars_[i]; }

    int var_index(const std::string& name) const {
        for (size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return static_cast<int>(i);
        return -1;
    }

    friend bool operator==(const Ring& a, const Ring& b) { return a.vars_ == b.vars_; }

private:
    std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> vars) {
    return std::make_shared<const Ring>(std::move(vars));
}

inline void check_same_ring(const RingPtr& a, const RingPtr& b) {
    if (a.get() == b.get()) return;
    if (!a || !b || !(*a == *b)) throw RingMismatch();
}

/// Sparse multivariate polynomial over an exact coefficient field C.
/// Zero coefficients are never stored; the term map is ordered, so equal
/// polynomials over the same ring have identical representations.
template <typename C>
class SparsePoly {
public:
    using Terms = std::map<Monomial, C>;

    SparsePoly() = default;
    explicit SparsePoly(RingPtr ring) : ring_(std::move(ring)) {}

    static SparsePoly constant(RingPtr ring, const C& c) {
        SparsePoly p(std::move(ring));
        p.add_term(Monomial(p.ring()->arity()), c);
        return p;
    }
    static SparsePoly variable(RingPtr ring, size_t i, long exp = 1) {
        SparsePoly p(std::move(ring));
        Monomial m(p.ring()->arity());
        m[i] = exp;
        p.add_term(m, C(Rational(1)));
        return p;
    }
    static SparsePoly from_monomial(RingPtr ring, const Monomial& m, const C& c) {
        SparsePoly p(std::move(ring));
        p.add_term(m, c);
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    C coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? C(Rational(0)) : it->second;
    }

    void add_term(const Monomial& m, const C& c) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_.emplace(m, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    void erase_term(const Monomial& m) { terms_.erase(m); }

    SparsePoly operator-() const {
        SparsePoly r(ring_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) {
        check_same_ring(a.ring_, b.ring_);
        SparsePoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) {
        check_same_ring(a.ring_, b.ring_);
        SparsePoly r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }
    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
        check_same_ring(a.ring_, b.ring_);
        SparsePoly r(a.ring_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    SparsePoly& operator+=(const SparsePoly& b) { return *this = *this + b; }
    SparsePoly& operator-=(const SparsePoly& b) { return *this = *this - b; }
    SparsePoly& operator*=(const SparsePoly& b) { return *this = *this * b; }

    SparsePoly scaled(const C& c) const {
        SparsePoly r(ring_);
        if (c.is_zero()) return r;
        for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
        return r;
    }

    SparsePoly pow(unsigned long e) const {
        SparsePoly r = constant(ring_, C(Rational(1)));
        SparsePoly base = *this;
        while (e > 0) {
            if (e & 1) r *= base;
            base = (e >>= 1) ? base * base : base;
        }
        return r;
    }

    friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
        check_same_ring(a.ring_, b.ring_);
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

    /// Weighted degree; throws on the zero polynomial.
    long weighted_degree(const WeightVector& w) const {
        if (terms_.empty()) throw ZeroPolynomial();
        long best = 0;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            long d = w.degree(m);
            if (first || d > best) best = d;
            first = false;
        }
        return best;
    }

    /// Sum of the terms of weight exactly d (zero polynomial when none).
    SparsePoly graded_component(long d, const WeightVector& w) const {
        SparsePoly r(ring_);
        for (const auto& [m, c] : terms_)
            if (w.degree(m) == d) r.terms_.emplace(m, c);
        return r;
    }

    /// Terms as "coeff*v1^a v2" joined with signs, e.g. "s12^2 - 2*s3 + 4".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            std::string t = term_str(m, c);
            if (first) {
                os << t;
                first = false;
            } else if (!t.empty() && t[0] == '-') {
                os << " - " << t.substr(1);
            } else {
                os << " + " << t;
            }
        }
        return os.str();
    }

    /// As str(), with terms sorted descending by the given order.
    std::string str_ordered(const MonomialOrder& ord) const {
        if (terms_.empty()) return "0";
        std::vector<const typename Terms::value_type*> ts;
        for (const auto& t : terms_) ts.push_back(&t);
        std::sort(ts.begin(), ts.end(), [&](const auto* a, const auto* b) {
            return ord.compare(a->first, b->first) > 0;
        });
        std::ostringstream os;
        bool first = true;
        for (const auto* t : ts) {
            std::string s = term_str(t->first, t->second);
            if (first) {
                os << s;
                first = false;
            } else if (!s.empty() && s[0] == '-') {
                os << " - " << s.substr(1);
            } else {
                os << " + " << s;
            }
        }
        return os.str();
    }

private:
    std::string term_str(const Monomial& m, const C& c) const {
        std::string cs = c.str();
        std::string ms;
        for (size_t i = 0; i < m.arity(); ++i) {
            if (m[i] == 0) continue;
            if (!ms.empty()) ms += ' ';
            ms += ring_->var_name(i);
            if (m[i] != 1) ms += "^" + std::to_string(m[i]);
        }
        if (ms.empty()) return cs;
        if (cs == "1") return ms;
        if (cs == "-1") return "-" + ms;
        return cs + "*" + ms;
    }

    RingPtr ring_;
    Terms terms_;
};

using QPoly = SparsePoly<Rational>;
using QqPoly = SparsePoly<RatFunc>;

/// Commutative product with a ring check, as a named operation.
template <typename C>
SparsePoly<C> poly_mul(const SparsePoly<C>& a, const SparsePoly<C>& b) {
    return a * b;
}

/// Parse "3/2*s1^2 s2 - s23 + 4" over the given ring. Variables may be
/// juxtaposed or joined with '*'; longest variable name wins.
QPoly parse_qpoly(const RingPtr& ring, const std::string& text);

} // namespace skein
