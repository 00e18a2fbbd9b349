#include "skeinalg/s4ring.hpp"

namespace skein {

namespace {

// Indices: 0..6 = s1, s2, s3, s12, s13, s23, s123.
QPoly relation_rhs(const RingPtr& ring) {
    auto var = [&](size_t i) { return QPoly::variable(ring, i); };
    QPoly s1 = var(0), s2 = var(1), s3 = var(2);
    QPoly s12 = var(3), s13 = var(4), s23 = var(5), s123 = var(6);
    return s12 * s12 + s13 * s13 + s23 * s23 + s12 * (s1 * s2 + s3 * s123) +
           s13 * (s1 * s3 + s2 * s123) + s23 * (s2 * s3 + s1 * s123) +
           s1 * s2 * s3 * s123 + s1 * s1 + s2 * s2 + s3 * s3 + s123 * s123 -
           QPoly::constant(ring, Rational(4));
}

Monomial relation_lhs() {
    Monomial m(7);
    m[3] = m[4] = m[5] = 1;
    return m;
}

} // namespace

S4Ring::S4Ring()
    : ring_(make_ring({"s1", "s2", "s3", "s12", "s13", "s23", "s123"})),
      s_(std::vector<long>{3, 3, 3, 4, 4, 4, 3}),
      sprime_(std::vector<long>{2, 2, 1, 2, 3, 3, 3}),
      rule_(relation_lhs(), relation_rhs(ring_), sprime_) {}

const S4Ring& S4Ring::instance() {
    static const S4Ring r;
    return r;
}

QPoly S4Ring::normal_form(const QPoly& e) const {
    return skein::normal_form(e, rule_);
}

QPoly S4Ring::relation_element() const {
    return s_power(relation_lhs()) - rule_.rhs();
}

std::array<Rational, 7> sl2_generator_values(const Mat2& A1, const Mat2& A2,
                                             const Mat2& A3) {
    if (!A1.is_sl2() || !A2.is_sl2() || !A3.is_sl2()) throw NotSL2();
    return {A1.trace(),          A2.trace(),          A3.trace(),
            -(A1 * A2).trace(),  -(A1 * A3).trace(),  -(A2 * A3).trace(),
            (A1 * A2 * A3).trace()};
}

Rational sl2_oracle_eval(const QPoly& e, const Mat2& A1, const Mat2& A2,
                         const Mat2& A3) {
    check_same_ring(e.ring(), S4Ring::instance().ring());
    std::array<Rational, 7> v = sl2_generator_values(A1, A2, A3);
    Rational sum(0);
    for (const auto& [m, c] : e.terms()) {
        Rational t = c;
        for (size_t i = 0; i < 7; ++i)
            for (long k = 0; k < m[i]; ++k) t *= v[i];
        sum += t;
    }
    return sum;
}

DegreeBoundReport verify_product_degree_bounds(long max_exp) {
    if (max_exp < 1) throw Error("verify_product_degree_bounds: max_exp must be >= 1");
    const S4Ring& R = S4Ring::instance();
    DegreeBoundReport rep;
    rep.max_exp = max_exp;
    for (long a = 1; a <= max_exp; ++a)
        for (long b = 1; b <= max_exp; ++b)
            for (long c = 1; c <= max_exp; ++c) {
                Monomial k(7);
                k[3] = a;
                k[4] = b;
                k[5] = c;
                QPoly nf = R.normal_form(R.s_power(k));
                DegreeBoundRow row;
                row.k12 = a;
                row.k13 = b;
                row.k23 = c;
                row.bound = 2 * a + 3 * (b + c);
                row.max_sprime = nf.weighted_degree(R.sprime_weights());
                row.degree_ok = row.max_sprime <= row.bound;
                row.top_ok = true;
                for (const auto& [u, cu] : nf.terms()) {
                    long w = sprime_weight(u);
                    if (w > row.bound && !row.violation) row.violation = u;
                    if (w == row.bound && u[4] * u[5] >= b * c) {
                        row.top_ok = false;
                        if (!row.violation) row.violation = u;
                    }
                }
                if (!row.degree_ok || !row.top_ok) rep.pass = false;
                rep.rows.push_back(std::move(row));
            }
    return rep;
}

} // namespace skein
