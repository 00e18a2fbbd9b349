#include <doctest.h>

#include <random>
#include <sstream>

#include "skeinalg/jobfile.hpp"
#include "skeinalg/sampling.hpp"
#include "skeinalg/spanning.hpp"

using namespace skein;

namespace {

SpanProblem h2_problem(std::vector<std::string> gens, std::vector<std::string> xs,
                       long cutoff, long cap) {
    SpanProblem p;
    p.ring_kind = AmbientRing::h2;
    p.weight = xzy_weights();
    for (size_t i = 0; i < gens.size(); ++i)
        p.generators.emplace_back("a" + std::to_string(i + 1),
                                  parse_qpoly(h2_ring(), gens[i]));
    for (const auto& x : xs) p.module_gens.push_back(parse_qpoly(h2_ring(), x));
    p.cutoff = cutoff;
    p.generator_weight_cap = cap;
    return p;
}

SpanProblem s4_family_problem(long cutoff, long cap) {
    SpanProblem p;
    p.ring_kind = AmbientRing::s4;
    p.weight = S4Ring::instance().sprime_weights();
    const RingPtr& R = S4Ring::instance().ring();
    p.generators = {
        {"a1", parse_qpoly(R, "s1")},        {"a2", parse_qpoly(R, "s2")},
        {"a3", parse_qpoly(R, "s3")},        {"a12", parse_qpoly(R, "s12")},
        {"a13", parse_qpoly(R, "s13")},      {"a23", parse_qpoly(R, "s23 + s2 s3")},
        {"a123", parse_qpoly(R, "s123 + s12 s3")},
    };
    p.module_gens = {QPoly::constant(R, Rational(1))};
    p.cutoff = cutoff;
    p.generator_weight_cap = cap;
    return p;
}

long covered_count(const SpanOutcome& o) {
    const SpanCertificate* c = std::get_if<SpanCertificate>(&o);
    return c ? static_cast<long>(c->covered.size()) : -1;
}

} // namespace

TEST_CASE("free-ring certificate with the y witness") {
    SpanProblem p = h2_problem({"x", "z", "y + x z"}, {"1"}, 6, 6);
    SpanOutcome o = certify_spanning(p);
    REQUIRE(std::holds_alternative<SpanCertificate>(o));
    const SpanCertificate& cert = std::get<SpanCertificate>(o);

    // Every basis monomial of weight <= 6 is covered.
    long expect = 0;
    for (long d = 0; d <= 6; ++d)
        expect += static_cast<long>(basis_monomials_of_weight(p, d).size());
    CHECK(static_cast<long>(cert.covered.size()) == expect);
    for (const auto& [d, dims] : cert.frontier) CHECK(dims.first == dims.second);

    // y = (y + x z) - x*z.
    Monomial y(3);
    y[2] = 1;
    REQUIRE(cert.covered.count(y) == 1);
    const WitnessExpr& wy = cert.covered.at(y);
    REQUIRE(wy.products.size() == 2);
    CHECK(wy.corrections.empty());
    for (const WitnessTerm& t : wy.products) {
        if (t.gen_exponents == std::vector<long>{0, 0, 1})
            CHECK(t.coeff == Rational(1));
        else if (t.gen_exponents == std::vector<long>{1, 1, 0})
            CHECK(t.coeff == Rational(-1));
        else
            FAIL("unexpected witness product");
    }

    // Witnesses replay to their monomials.
    for (const auto& [m, expr] : cert.covered)
        CHECK(replay_witness(p, expr) == QPoly::from_monomial(p.ring(), m, Rational(1)));
}

TEST_CASE("missing generator fails at the first absent monomial") {
    SpanProblem p = h2_problem({"x"}, {"1"}, 1, 1);
    SpanOutcome o = certify_spanning(p);
    REQUIRE(std::holds_alternative<SpanFailure>(o));
    const SpanFailure& f = std::get<SpanFailure>(o);
    Monomial z(3);
    z[1] = 1;
    CHECK(f.monomial == z);
    CHECK(f.degree == 1);
    CHECK(f.achievedDim == 1);
    CHECK(f.requiredDim == 2);
    CHECK_FALSE(f.refuted);  // cap == cutoff < cutoff + max weight

    SpanProblem p2 = h2_problem({"x"}, {"1"}, 1, 3);
    SpanOutcome o2 = certify_spanning(p2);
    REQUIRE(std::holds_alternative<SpanFailure>(o2));
    CHECK(std::get<SpanFailure>(o2).refuted);
}

TEST_CASE("genus-3 first-family generators certify through degree 5") {
    SpanProblem p = s4_family_problem(5, 5);
    SpanOutcome o = certify_spanning(p);
    REQUIRE(std::holds_alternative<SpanCertificate>(o));
    const SpanCertificate& cert = std::get<SpanCertificate>(o);
    for (const auto& [d, dims] : cert.frontier) CHECK(dims.first == dims.second);
    for (const auto& [m, expr] : cert.covered) {
        CHECK(replay_witness(p, expr) == QPoly::from_monomial(p.ring(), m, Rational(1)));
        // The induction never reaches above the target's weight.
        long dm = p.weight.degree(m);
        for (const WitnessTerm& t : expr.products) {
            long dw = 0;
            for (size_t i = 0; i < t.gen_exponents.size(); ++i)
                dw += t.gen_exponents[i] *
                      p.generators[i].second.weighted_degree(p.weight);
            CHECK(dw <= dm);
        }
    }
}

TEST_CASE("leading matrices of the genus-3 family are triangular") {
    SpanProblem p = s4_family_problem(6, 6);
    for (long d = 0; d <= 6; ++d) {
        LeadingMatrixReport rep = leading_matrix_report(p, d, s4_leading_order());
        CHECK(rep.triangular_unit_diagonal);
        CHECK(rep.labels.size() == basis_monomials_of_weight(p, d).size());
    }
}

TEST_CASE("identity leading matrix for the free-ring model") {
    // Generators x, z with X = {1, y, y^2}: products match monomials exactly
    // below weight 6, so every leading matrix is the identity.
    SpanProblem p = h2_problem({"x", "z"}, {"1", "y", "y^2"}, 5, 5);
    MonomialOrder order = MonomialOrder::lex_on_coords({0, 1, 2});
    for (long d = 0; d <= 5; ++d) {
        LeadingMatrixReport rep = leading_matrix_report(p, d, order);
        CHECK(rep.triangular_unit_diagonal);
        CHECK(rep.identity);
    }
    CHECK(leading_matrix_report(p, 0, order).matrix.size() == 1);
}

TEST_CASE("leading matrix rejects non-diagonal problems") {
    SpanProblem p = h2_problem({"x + z", "z", "y"}, {"1"}, 3, 3);
    CHECK_THROWS_AS(leading_matrix_report(p, 2, MonomialOrder::graded_lex(p.weight)),
                    std::invalid_argument);
}

TEST_CASE("cross-degree cancellation is found by the direct solve") {
    // x is only reachable as (y + x) - y, a cancellation between weight-2
    // products; the per-degree pass cannot see it.
    SpanProblem p = h2_problem({"y + x", "y", "z"}, {"1"}, 2, 2);
    SpanOutcome o = certify_spanning(p);
    REQUIRE(std::holds_alternative<SpanFailure>(o));
    const SpanFailure& f = std::get<SpanFailure>(o);
    Monomial xz(3);
    xz[0] = xz[1] = 1;
    CHECK(f.monomial == xz);  // x itself is covered; xz needs a wider cap
    CHECK(f.degree == 2);
    CHECK_FALSE(f.refuted);   // cap 2 < cutoff 2 + max generator weight 2

    // With a wider cap even x^2 = (y+x)^2 - 2(y+x)y + y^2 appears.
    SpanProblem wide = p;
    wide.generator_weight_cap = 4;
    SpanOutcome o2 = certify_spanning(wide);
    REQUIRE(std::holds_alternative<SpanCertificate>(o2));
    const SpanCertificate& cert = std::get<SpanCertificate>(o2);
    Monomial x(3);
    x[0] = 1;
    REQUIRE(cert.covered.count(x) == 1);
    CHECK(cert.covered.at(x).direct);
    for (const auto& [m, expr] : cert.covered)
        CHECK(replay_witness(wide, expr) ==
              QPoly::from_monomial(wide.ring(), m, Rational(1)));
}

TEST_CASE("dropping a generator refutes spanning at the missing monomial") {
    SpanProblem p = s4_family_problem(3, 3);
    p.generators.pop_back();       // remove the generator hitting s123
    p.generator_weight_cap = 6;    // cutoff + max generator weight: refutable
    SpanOutcome o = certify_spanning(p);
    REQUIRE(std::holds_alternative<SpanFailure>(o));
    const SpanFailure& f = std::get<SpanFailure>(o);
    Monomial s123(7);
    s123[6] = 1;
    CHECK(f.monomial == s123);
    CHECK(f.degree == 3);
    CHECK(f.refuted);
    CHECK(f.requiredDim > f.achievedDim);
}

TEST_CASE("monotonicity in the cap and in X") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 10; ++trial) {
        SpanProblem p = h2_problem({"x", "z", "y + x z"}, {"1"}, 4, 4);
        // Random extra generator never hurts.
        QPoly extra(h2_ring());
        for (int t = 0; t < 2; ++t) {
            Monomial m(3);
            for (size_t j = 0; j < 3; ++j) m[j] = random_range(rng, 0, 2);
            extra.add_term(m, random_coeff(rng));
        }
        if (!extra.is_zero()) p.generators.emplace_back("r", extra);

        SpanOutcome base = certify_spanning(p);
        SpanProblem wider = p;
        wider.generator_weight_cap += 2;
        SpanOutcome more = certify_spanning(wider);
        if (std::holds_alternative<SpanCertificate>(base))
            CHECK(std::holds_alternative<SpanCertificate>(more));

        SpanProblem bigger_x = p;
        bigger_x.module_gens.push_back(parse_qpoly(h2_ring(), "x^2"));
        SpanOutcome with_x = certify_spanning(bigger_x);
        if (std::holds_alternative<SpanCertificate>(base))
            CHECK(std::holds_alternative<SpanCertificate>(with_x));
    }
}

TEST_CASE("outcome is deterministic") {
    SpanProblem p = s4_family_problem(4, 4);
    SpanOutcome a = certify_spanning(p);
    SpanOutcome b = certify_spanning(p);
    REQUIRE(std::holds_alternative<SpanCertificate>(a));
    REQUIRE(std::holds_alternative<SpanCertificate>(b));
    const SpanCertificate& ca = std::get<SpanCertificate>(a);
    const SpanCertificate& cb = std::get<SpanCertificate>(b);
    REQUIRE(ca.covered.size() == cb.covered.size());
    auto ia = ca.covered.begin();
    auto ib = cb.covered.begin();
    for (; ia != ca.covered.end(); ++ia, ++ib) {
        CHECK(ia->first == ib->first);
        CHECK(witness_str(p, ia->second) == witness_str(p, ib->second));
    }
    CHECK(ca.frontier == cb.frontier);
}

TEST_CASE("job files round trip") {
    std::string text =
        "# genus-3 first family\n"
        "ring = s4\n"
        "weight = sprime\n"
        "cutoff = 4\n"
        "leading_order = s4-leading\n"
        "generator a1 = s1\n"
        "generator a2 = s2\n"
        "generator a3 = s3\n"
        "generator a12 = s12\n"
        "generator a13 = s13\n"
        "generator a23 = s23 + s2*s3\n"
        "generator a123 = s123 + s12*s3\n"
        "x = 1\n";
    SpanJob job = parse_span_job(text);
    CHECK(job.problem.cutoff == 4);
    CHECK(job.problem.generator_weight_cap == 4);  // defaults to cutoff
    CHECK(job.problem.generators.size() == 7);
    CHECK(job.leading_order.has_value());
    SpanOutcome o = certify_spanning(job.problem);
    CHECK(covered_count(o) > 0);

    CHECK_THROWS_AS(parse_span_job("ring = s4\n"), SchemaError);
    CHECK_THROWS_AS(parse_span_job("ring = dodecahedron\n"), SchemaError);
    CHECK_THROWS_AS(
        parse_span_job("ring = s4\nweight = sprime\ncutoff = 2\ngenerator g = w^2\nx = 1\n"),
        SchemaError);
}
