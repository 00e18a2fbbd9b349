#pragma once

#include "skeinalg/sparse_poly.hpp"

namespace skein {

/// Single-relation rewrite rule lhs -> rhs together with the weight that
/// controls termination. On construction every rhs monomial must be strictly
/// lighter than lhs, or of equal weight and not divisible by lhs.
class RewriteRule {
public:
    RewriteRule(Monomial lhs, QPoly rhs, WeightVector weight);

    const Monomial& lhs() const { return lhs_; }
    const QPoly& rhs() const { return rhs_; }
    const WeightVector& weight() const { return weight_; }
    const RingPtr& ring() const { return rhs_.ring(); }

    bool divisible(const Monomial& m) const { return lhs_.divides(m); }

    /// Product of m's exponents over the variables occurring in lhs. Strict
    /// descent of (weight, this) per replacement monomial is the engine's
    /// termination guard.
    long pattern_measure(const Monomial& m) const;

private:
    Monomial lhs_;
    QPoly rhs_;
    WeightVector weight_;
    std::vector<size_t> support_;
};

enum class ReduceStrategy {
    max_weight_first,  // default: heaviest reducible monomial first
    lex_first,         // least reducible monomial in map order
    lex_last,          // greatest reducible monomial in map order
};

/// Rewrites until no monomial is divisible by rule.lhs(). The result is
/// congruent to p modulo the ideal generated by lhs - rhs. Throws
/// NonTerminating if a step fails the weight-descent check.
QPoly normal_form(const QPoly& p, const RewriteRule& rule,
                  ReduceStrategy strategy = ReduceStrategy::max_weight_first);

/// True when no monomial of p is divisible by rule.lhs().
bool is_normal_form(const QPoly& p, const RewriteRule& rule);

} // namespace skein
