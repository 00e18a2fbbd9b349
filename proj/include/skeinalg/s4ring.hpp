#pragma once

#include <array>
#include <optional>

#include "skeinalg/rewrite.hpp"
#include "skeinalg/sl2.hpp"
#include "skeinalg/sparse_poly.hpp"

namespace skein {

/// The q=1 skein ring of the four-holed sphere: the commutative ring on the
/// seven curve generators s1, s2, s3, s12, s13, s23, s123 subject to the
/// single relation rewriting the product s12*s13*s23, with the monomial
/// basis { s^k : k12*k13*k23 = 0 } and two weight systems.
class S4Ring {
public:
    static const S4Ring& instance();

    const RingPtr& ring() const { return ring_; }
    const WeightVector& s_weights() const { return s_; }            // 3,3,3,4,4,4,3
    const WeightVector& sprime_weights() const { return sprime_; }  // 2,2,1,2,3,3,3
    const RewriteRule& rule() const { return rule_; }

    QPoly generator(size_t i, long exp = 1) const {
        return QPoly::variable(ring_, i, exp);
    }
    QPoly constant(const Rational& c) const { return QPoly::constant(ring_, c); }
    /// s^k for an exponent tuple of arity 7.
    QPoly s_power(const Monomial& k) const {
        return QPoly::from_monomial(ring_, k, Rational(1));
    }

    /// Unique representative supported on basis monomials.
    QPoly normal_form(const QPoly& e) const;
    bool is_reduced(const QPoly& e) const { return is_normal_form(e, rule_); }

    /// lhs - rhs of the defining relation (vanishes on every SL2 triple).
    QPoly relation_element() const;

private:
    S4Ring();

    RingPtr ring_;
    WeightVector s_;
    WeightVector sprime_;
    RewriteRule rule_;
};

/// Basis condition k12 * k13 * k23 = 0 for an arity-7 exponent tuple.
inline bool lambda_basis_member(const Monomial& k) {
    return k[3] == 0 || k[4] == 0 || k[5] == 0;
}

inline long s_weight(const Monomial& k) {
    return 3 * (k[0] + k[1] + k[2] + k[6]) + 4 * (k[3] + k[4] + k[5]);
}

inline long sprime_weight(const Monomial& k) {
    return 2 * (k[0] + k[1]) + k[2] + 2 * k[3] + 3 * (k[4] + k[5] + k[6]);
}

/// Character-variety evaluation of a polynomial in the seven generators at a
/// triple of SL2 matrices: s_i -> tr(A_i), s_ij -> -tr(A_i A_j),
/// s_123 -> tr(A_1 A_2 A_3). These are the trace coordinates of the triple
/// (-A_1, -A_2, -A_3) up to a global loop sign; under them the defining
/// relation vanishes identically. Throws NotSL2 if a determinant is not 1.
Rational sl2_oracle_eval(const QPoly& e, const Mat2& A1, const Mat2& A2,
                         const Mat2& A3);

/// The seven evaluation coordinates for a triple, in generator order.
std::array<Rational, 7> sl2_generator_values(const Mat2& A1, const Mat2& A2,
                                             const Mat2& A3);

/// Per-exponent-triple outcome of the degree-bound sweep over reduced
/// products s12^a s13^b s23^c.
struct DegreeBoundRow {
    long k12 = 0, k13 = 0, k23 = 0;
    long bound = 0;       // 2*k12 + 3*(k13 + k23)
    long max_sprime = 0;  // max s' over the reduced support
    bool degree_ok = false;
    bool top_ok = false;  // every top-degree monomial u has u13*u23 < k13*k23
    std::optional<Monomial> violation;
};

struct DegreeBoundReport {
    long max_exp = 0;
    std::vector<DegreeBoundRow> rows;
    bool pass = true;
};

/// Checks, for all 1 <= k12,k13,k23 <= max_exp, that the reduced product
/// s12^k12 s13^k13 s23^k23 stays within the s'-degree bound and that its
/// top-degree monomials drop the s13*s23 exponent product.
DegreeBoundReport verify_product_degree_bounds(long max_exp);

} // namespace skein
