#pragma once

#include <map>
#include <string>

#include "skeinalg/rational.hpp"

namespace skein {

/// Laurent polynomial in q with rational coefficients. The coefficient map
/// never stores zeros, so equal polynomials have identical maps and
/// operator== is structural.
class LaurentPoly {
public:
    using Coeffs = std::map<int, Rational>;

    LaurentPoly() = default;
    /// Constant polynomial.
    explicit LaurentPoly(const Rational& c) { set(0, c); }

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly one() { return LaurentPoly(Rational(1)); }
    /// c * q^k
    static LaurentPoly term(int k, const Rational& c) {
        LaurentPoly p;
        p.set(k, c);
        return p;
    }
    static LaurentPoly q_power(int k) { return term(k, Rational(1)); }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;

    const Coeffs& coeffs() const { return coeffs_; }
    Rational coeff(int k) const {
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? Rational(0) : it->second;
    }

    /// Lowest/highest exponent with nonzero coefficient; 0 for the zero poly.
    int min_exp() const { return coeffs_.empty() ? 0 : coeffs_.begin()->first; }
    int max_exp() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

    void set(int k, const Rational& c) {
        if (c.is_zero())
            coeffs_.erase(k);
        else
            coeffs_[k] = c;
    }
    void add_term(int k, const Rational& c) {
        auto it = coeffs_.find(k);
        if (it == coeffs_.end()) {
            if (!c.is_zero()) coeffs_.emplace(k, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator*(const Rational& c) const;

    LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }
    LaurentPoly& operator-=(const LaurentPoly& b) { return *this = *this - b; }
    LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }

    /// Multiply by q^k.
    LaurentPoly shifted(int k) const;

    /// Substitute q = 1, i.e. the sum of all coefficients.
    Rational eval_q1() const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
        return !(a == b);
    }
    bool operator<(const LaurentPoly& b) const { return coeffs_ < b.coeffs_; }

    /// Sparse exponent:coefficient form, e.g. "{-2:-1, 2:-1}" for -q^2 - q^-2.
    std::string str() const;

private:
    Coeffs coeffs_;
};

LaurentPoly laurent_mul(const LaurentPoly& a, const LaurentPoly& b);

/// Parse the "{exp:coeff, ...}" serialization produced by str().
LaurentPoly parse_laurent(const std::string& text);

} // namespace skein
