#include <doctest.h>

#include <random>

#include "skeinalg/s4ring.hpp"
#include "skeinalg/sampling.hpp"

using namespace skein;

namespace {

QPoly S4(const std::string& text) {
    return parse_qpoly(S4Ring::instance().ring(), text);
}

Monomial tuple(std::vector<long> k) { return Monomial(std::move(k)); }

} // namespace

TEST_CASE("weight functions") {
    CHECK(s_weight(tuple({1, 0, 0, 0, 0, 0, 0})) == 3);
    CHECK(sprime_weight(tuple({1, 0, 0, 0, 0, 0, 0})) == 2);
    CHECK(s_weight(tuple({0, 0, 0, 0, 0, 0, 0})) == 0);
    CHECK(sprime_weight(tuple({0, 0, 0, 0, 0, 0, 0})) == 0);
    CHECK(s_weight(tuple({0, 0, 0, 1, 0, 0, 0})) == 4);
    CHECK(sprime_weight(tuple({0, 0, 0, 1, 0, 0, 0})) == 2);
    CHECK(sprime_weight(tuple({0, 0, 0, 0, 1, 0, 0})) == 3);
}

TEST_CASE("lambda basis membership") {
    CHECK(lambda_basis_member(tuple({5, 3, 2, 0, 9, 9, 1})));
    CHECK(lambda_basis_member(tuple({0, 0, 0, 0, 0, 0, 0})));
    CHECK_FALSE(lambda_basis_member(tuple({0, 0, 0, 1, 1, 1, 0})));
}

TEST_CASE("relation vanishes under the SL2 oracle") {
    const S4Ring& R = S4Ring::instance();
    QPoly rel = R.relation_element();
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 1000; ++i) {
        Mat2 a = random_sl2(rng), b = random_sl2(rng), c = random_sl2(rng);
        CHECK(sl2_oracle_eval(rel, a, b, c) == Rational(0));
    }
}

TEST_CASE("oracle values at simple triples") {
    Mat2 I = Mat2::identity();
    CHECK(sl2_oracle_eval(S4("s1"), I, I, I) == Rational(2));
    Mat2 A{1, 1, 0, 1};
    CHECK(sl2_oracle_eval(S4("s123"), I, I, A) == A.trace());
    Mat2 bad{1, 0, 0, 2};
    CHECK_THROWS_AS(sl2_oracle_eval(S4("s1"), bad, I, I), NotSL2);
}

TEST_CASE("normal form preserves the oracle value") {
    const S4Ring& R = S4Ring::instance();
    std::mt19937_64 rng(31);
    for (int i = 0; i < 200; ++i) {
        QPoly e = random_s4_poly(rng, 4, 2);
        QPoly nf = R.normal_form(e);
        Mat2 a = random_sl2(rng), b = random_sl2(rng), c = random_sl2(rng);
        CHECK(sl2_oracle_eval(e, a, b, c) == sl2_oracle_eval(nf, a, b, c));
    }
}

TEST_CASE("reduction of s12^2 s13 s23 cross-checked by the oracle") {
    const S4Ring& R = S4Ring::instance();
    QPoly p = S4("s12^2 s13 s23");
    QPoly nf = R.normal_form(p);
    CHECK(R.is_reduced(nf));
    std::mt19937_64 rng(37);
    for (int i = 0; i < 100; ++i) {
        Mat2 a = random_sl2(rng), b = random_sl2(rng), c = random_sl2(rng);
        CHECK(sl2_oracle_eval(p, a, b, c) == sl2_oracle_eval(nf, a, b, c));
    }
}

TEST_CASE("degree bounds for reduced triple products") {
    DegreeBoundReport rep = verify_product_degree_bounds(1);
    REQUIRE(rep.rows.size() == 1);
    CHECK(rep.pass);
    CHECK(rep.rows[0].bound == 8);
    CHECK(rep.rows[0].max_sprime == 8);

    // The top-degree part of the reduced s12 s13 s23 contains
    // s13 s2 s123 and s23 s1 s123, both with u13*u23 = 0 < 1.
    const S4Ring& R = S4Ring::instance();
    QPoly nf = R.normal_form(S4("s12 s13 s23"));
    QPoly top = nf.graded_component(8, R.sprime_weights());
    CHECK_FALSE(top.coeff(tuple({0, 1, 0, 0, 1, 0, 1})).is_zero());
    CHECK_FALSE(top.coeff(tuple({1, 0, 0, 0, 0, 1, 1})).is_zero());
    for (const auto& [u, c] : top.terms()) CHECK(u[4] * u[5] < 1 * 1);

    DegreeBoundReport rep3 = verify_product_degree_bounds(3);
    CHECK(rep3.pass);
    CHECK(rep3.rows.size() == 27);
    CHECK_THROWS_AS(verify_product_degree_bounds(0), Error);
}

TEST_CASE("products of generator images stay within the s' bound") {
    // Images of the boundary curves used in the genus-3 first-family
    // spanning argument: s1, s2, s3, s12, s13, s23 + s2 s3, s123 + s12 s3.
    const S4Ring& R = S4Ring::instance();
    std::vector<QPoly> gens = {S4("s1"),       S4("s2"),  S4("s3"),
                               S4("s12"),      S4("s13"), S4("s23 + s2 s3"),
                               S4("s123 + s12 s3")};
    std::vector<long> wts = {2, 2, 1, 2, 3, 3, 3};
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 50; ++trial) {
        long budget = 2;
        QPoly prod = R.constant(Rational(1));
        long expected = 0;
        for (size_t i = 0; i < gens.size(); ++i) {
            long e = random_range(rng, 0, budget);
            expected += e * wts[i];
            for (long j = 0; j < e; ++j) prod = R.normal_form(prod * gens[i]);
        }
        if (prod.is_zero()) continue;
        for (const auto& [u, c] : prod.terms())
            CHECK(sprime_weight(u) <= expected);
    }
}
