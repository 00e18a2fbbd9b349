#include "skeinalg/rewrite.hpp"

namespace skein {

RewriteRule::RewriteRule(Monomial lhs, QPoly rhs, WeightVector weight)
    : lhs_(std::move(lhs)), rhs_(std::move(rhs)), weight_(std::move(weight)) {
    if (lhs_.arity() != rhs_.ring()->arity() || weight_.arity() != lhs_.arity())
        throw Error("rewrite rule: arity mismatch");
    for (size_t i = 0; i < lhs_.arity(); ++i)
        if (lhs_[i] > 0) support_.push_back(i);
    long lw = weight_.degree(lhs_);
    for (const auto& [m, c] : rhs_.terms()) {
        long mw = weight_.degree(m);
        if (mw > lw || (mw == lw && lhs_.divides(m)))
            throw Error("rewrite rule: rhs term does not decrease");
    }
}

long RewriteRule::pattern_measure(const Monomial& m) const {
    long p = 1;
    for (size_t i : support_) p *= m[i];
    return p;
}

namespace {

// Picks the reducible monomial according to the strategy; null when reduced.
const Monomial* pick(const QPoly& p, const RewriteRule& rule, ReduceStrategy st) {
    const Monomial* best = nullptr;
    long best_w = 0;
    for (const auto& [m, c] : p.terms()) {
        if (!rule.divisible(m)) continue;
        switch (st) {
            case ReduceStrategy::lex_first:
                return &m;  // map order is ascending lex
            case ReduceStrategy::lex_last:
                best = &m;  // keep the last one seen
                break;
            case ReduceStrategy::max_weight_first: {
                long w = rule.weight().degree(m);
                if (!best || w > best_w) {
                    best = &m;
                    best_w = w;
                }
                break;
            }
        }
    }
    return best;
}

} // namespace

QPoly normal_form(const QPoly& p, const RewriteRule& rule, ReduceStrategy strategy) {
    check_same_ring(p.ring(), rule.ring());
    QPoly r = p;
    while (const Monomial* mp = pick(r, rule, strategy)) {
        Monomial m = *mp;
        Rational c = r.coeff(m);
        long mw = rule.weight().degree(m);
        long mk = rule.pattern_measure(m);
        Monomial cof = m / rule.lhs();
        r.erase_term(m);
        for (const auto& [u, cu] : rule.rhs().terms()) {
            Monomial repl = cof * u;
            long rw = rule.weight().degree(repl);
            if (rw > mw || (rw == mw && rule.pattern_measure(repl) >= mk))
                throw NonTerminating("rewrite step failed the weight-descent check");
            r.add_term(repl, c * cu);
        }
    }
    return r;
}

bool is_normal_form(const QPoly& p, const RewriteRule& rule) {
    for (const auto& [m, c] : p.terms())
        if (rule.divisible(m)) return false;
    return true;
}

} // namespace skein
