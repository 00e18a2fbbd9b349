#include <doctest.h>

#include <random>

#include "skeinalg/ratfunc.hpp"
#include "skeinalg/sampling.hpp"

using namespace skein;

namespace {

LaurentPoly L(const std::string& s) { return parse_laurent(s); }

RatFunc random_ratfunc(std::mt19937_64& rng) {
    LaurentPoly n, d;
    for (int t = 0; t < 3; ++t) {
        n.add_term(static_cast<int>(random_range(rng, -3, 3)), random_coeff(rng));
        d.add_term(static_cast<int>(random_range(rng, -3, 3)), random_coeff(rng));
    }
    if (d.is_zero()) d = LaurentPoly::one();
    return RatFunc(n, d);
}

} // namespace

TEST_CASE("laurent arithmetic") {
    LaurentPoly q = LaurentPoly::q_power(1);
    LaurentPoly qi = LaurentPoly::q_power(-1);
    CHECK(laurent_mul(q + qi, q - qi) == L("{-2:-1, 2:1}"));  // q^2 - q^-2

    LaurentPoly loop = L("{-2:-1, 2:-1}");  // -q^2 - q^-2
    CHECK(laurent_mul(loop, LaurentPoly::one()) == loop);

    CHECK(laurent_mul(LaurentPoly::q_power(3), LaurentPoly::term(-3, Rational(-1))) ==
          LaurentPoly(Rational(-1)));
}

TEST_CASE("laurent serialization round trip") {
    LaurentPoly p = L("{-2:-1, 0:3/2, 2:-1}");
    CHECK(p.str() == "{-2:-1, 0:3/2, 2:-1}");
    CHECK(parse_laurent(p.str()) == p);
    CHECK(L("{}").is_zero());
}

TEST_CASE("eval at q = 1") {
    CHECK(L("{-2:-1, 2:-1}").eval_q1() == Rational(-2));
    CHECK(L("{-1:1, 1:1}").eval_q1() == Rational(2));
    for (int n = 0; n <= 12; ++n) {
        LaurentPoly d = LaurentPoly::q_power(n) - LaurentPoly::q_power(-n - 6);
        CHECK(d.eval_q1() == Rational(0));  // division must precede q = 1
        CHECK_FALSE(d.is_zero());
    }
}

TEST_CASE("ratfunc inverse and canonical form") {
    RatFunc f = RatFunc::one() / RatFunc(L("{-1:-1, 1:1}"));  // 1/(q - q^-1)
    CHECK(f * RatFunc(L("{-1:-1, 1:1}")) == RatFunc::one());

    // 1/(q^0 - q^-6) is well-defined and normalizes to q^6/(q^6 - 1).
    RatFunc g = RatFunc(LaurentPoly::one(), LaurentPoly::one() - LaurentPoly::q_power(-6));
    CHECK(g.numer() == L("{6:1}"));
    CHECK(g.denom() == L("{0:-1, 6:1}"));

    // q + q^-1 -> (q^2 + 1)/q.
    RatFunc h = RatFunc(LaurentPoly::q_power(1)) + RatFunc(LaurentPoly::q_power(-1));
    CHECK(h.numer() == L("{0:1, 2:1}"));
    CHECK(h.denom() == L("{1:1}"));
}

TEST_CASE("ratfunc division by zero") {
    CHECK_THROWS_AS(RatFunc::one() / RatFunc::zero(), DivisionByZero);
    CHECK_THROWS_AS(RatFunc(LaurentPoly::one(), LaurentPoly::zero()), DivisionByZero);
    CHECK_THROWS_AS(ratfunc_field_ops(RatFunc::one(), RatFunc::zero(), FieldOp::div),
                    DivisionByZero);
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 60; ++i) {
        RatFunc a = random_ratfunc(rng), b = random_ratfunc(rng), c = random_ratfunc(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == RatFunc::one());
            CHECK(b / a * a == b);
        }
        CHECK(a - a == RatFunc::zero());
    }
}

TEST_CASE("eval_q1 is a ring homomorphism") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 80; ++i) {
        LaurentPoly a, b;
        for (int t = 0; t < 4; ++t) {
            a.add_term(static_cast<int>(random_range(rng, -4, 4)), random_coeff(rng));
            b.add_term(static_cast<int>(random_range(rng, -4, 4)), random_coeff(rng));
        }
        CHECK((a * b).eval_q1() == a.eval_q1() * b.eval_q1());
        CHECK((a + b).eval_q1() == a.eval_q1() + b.eval_q1());
    }
}

TEST_CASE("normalization is idempotent") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 60; ++i) {
        RatFunc a = random_ratfunc(rng);
        RatFunc renorm(a.numer(), a.denom());
        CHECK(renorm == a);
        CHECK(renorm.numer() == a.numer());
        CHECK(renorm.denom() == a.denom());
    }
}

TEST_CASE("common factors do not change the representative") {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 60; ++i) {
        RatFunc f = random_ratfunc(rng);
        LaurentPoly c;
        for (int t = 0; t < 3; ++t)
            c.add_term(static_cast<int>(random_range(rng, -3, 3)), random_coeff(rng));
        if (c.is_zero()) c = LaurentPoly::q_power(-2);
        RatFunc scaled(f.numer() * c, f.denom() * c);
        CHECK(scaled == f);
    }
}

TEST_CASE("rational wrapper canonical form") {
    Rational r(6, -4);
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(Rational(0, 5).str() == "0");
    CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
    CHECK_THROWS_AS(Rational(3).inverse() / Rational(0), DivisionByZero);
}
