#include <doctest.h>

#include <random>

#include "skeinalg/sampling.hpp"
#include "skeinalg/trace_poly.hpp"

using namespace skein;

namespace {

Rational eval_trace(const QPoly& t, const Mat2& A, const Mat2& B) {
    Rational xv = A.trace(), zv = B.trace(), yv = (A * B).trace();
    Rational out(0);
    for (const auto& [m, c] : t.terms()) {
        Rational v = c;
        for (long k = 0; k < m[0]; ++k) v *= xv;
        for (long k = 0; k < m[1]; ++k) v *= zv;
        for (long k = 0; k < m[2]; ++k) v *= yv;
        out += v;
    }
    return out;
}

} // namespace

TEST_CASE("word parsing and reduction") {
    CHECK(F2Word::parse("abA").str() == "abA");
    CHECK(F2Word::parse("aA").empty());
    CHECK(F2Word::parse("abBA").empty());
    CHECK(F2Word::parse("ab").inverse().str() == "BA");
    CHECK(F2Word::parse("Bab").cyclically_reduced().str() == "a");
    CHECK_THROWS_AS(F2Word::parse("abc"), Error);
}

TEST_CASE("basic trace values") {
    TracePolynomials tp;
    CHECK(tp.trace(F2Word::parse("a")) == tp.x());
    CHECK(tp.trace(F2Word::parse("b")) == tp.z());
    CHECK(tp.trace(F2Word::parse("ab")) == tp.y());
    CHECK(tp.trace(F2Word::parse("ba")) == tp.y());
    CHECK(tp.trace(F2Word()) == QPoly::constant(tp.ring(), Rational(2)));

    // Values pinned by the SL2 substitution oracle (checked below).
    CHECK(tp.trace(F2Word::parse("aB")) == tp.x() * tp.z() - tp.y());
    CHECK(tp.trace(F2Word::parse("aa")) ==
          tp.x() * tp.x() - QPoly::constant(tp.ring(), Rational(2)));
}

TEST_CASE("oracle soundness on random words") {
    TracePolynomials tp;
    std::mt19937_64 rng(101);
    for (int i = 0; i < 50; ++i) {
        F2Word w = random_word(rng, 8);
        QPoly t = tp.trace(w);
        for (int j = 0; j < 100; ++j) {
            Mat2 A = random_sl2(rng), B = random_sl2(rng);
            CHECK(eval_trace(t, A, B) == evaluate_word(w, A, B).trace());
        }
    }
}

TEST_CASE("conjugation and inversion invariance") {
    TracePolynomials tp;
    std::mt19937_64 rng(103);
    for (int i = 0; i < 60; ++i) {
        F2Word w = random_word(rng, 8);
        F2Word u = random_word(rng, 4);
        std::vector<int> conj = u.letters();
        conj.insert(conj.end(), w.letters().begin(), w.letters().end());
        std::vector<int> ui = u.inverse().letters();
        conj.insert(conj.end(), ui.begin(), ui.end());
        CHECK(tp.trace(F2Word(conj)) == tp.trace(w));
        CHECK(tp.trace(w.inverse()) == tp.trace(w));
    }
}

TEST_CASE("xzy degree") {
    TracePolynomials tp;
    RingPtr ring = tp.ring();
    Monomial m(3);
    m[0] = 2;  // x^2
    m[1] = 1;  // z
    m[2] = 3;  // y^3
    CHECK(xzy_degree(QPoly::from_monomial(ring, m, Rational(1))) == 2 + 1 + 2 * 3);
    CHECK(xzy_degree(QPoly::constant(ring, Rational(5))) == 0);
    CHECK(xzy_degree(tp.y() + tp.x() * tp.z()) == 2);
    CHECK_THROWS_AS(xzy_degree(QPoly(ring)), ZeroPolynomial);
}

TEST_CASE("trace degree matches word structure") {
    // tr((ab)^n) is a degree-n polynomial in y with unit leading coefficient.
    TracePolynomials tp;
    std::vector<int> w;
    for (int n = 1; n <= 6; ++n) {
        w.push_back(1);
        w.push_back(2);
        QPoly t = tp.trace(F2Word(w));
        CHECK(xzy_degree(t) == 2 * n);
        Monomial lead(3);
        lead[2] = n;
        CHECK(t.coeff(lead) == Rational(1));
    }
}
