#pragma once

#include <string>

#include "skeinalg/laurent.hpp"

namespace skein {

/// Element of Q(q), the field of rational functions in q over the rationals.
/// Canonical form: numerator and denominator are ordinary polynomials in q
/// (no negative exponents), coprime in Q[q], the denominator is monic, and q
/// divides at most one of them. Equal values therefore compare equal
/// structurally; e.g. q + q^-1 normalizes to (q^2+1)/q.
class RatFunc {
public:
    RatFunc() : num_(), den_(LaurentPoly::one()) {}
    RatFunc(const LaurentPoly& numer) : num_(numer), den_(LaurentPoly::one()) {
        normalize();
    }
    RatFunc(const LaurentPoly& numer, const LaurentPoly& denom);
    explicit RatFunc(const Rational& c) : RatFunc(LaurentPoly(c)) {}

    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return RatFunc(LaurentPoly::one()); }
    static RatFunc q_power(int k) { return RatFunc(LaurentPoly::q_power(k)); }

    const LaurentPoly& numer() const { return num_; }
    const LaurentPoly& denom() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);

    RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
    RatFunc& operator-=(const RatFunc& b) { return *this = *this - b; }
    RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }
    RatFunc& operator/=(const RatFunc& b) { return *this = *this / b; }

    RatFunc inverse() const;

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    std::string str() const;

private:
    void normalize();

    LaurentPoly num_;
    LaurentPoly den_;
};

enum class FieldOp { add, mul, div };

/// Dispatch helper used by the CLI and tests.
RatFunc ratfunc_field_ops(const RatFunc& a, const RatFunc& b, FieldOp op);

} // namespace skein
