#include "skeinalg/sliding.hpp"

namespace skein {

LaurentPoly slide_denominator(long n) {
    LaurentPoly d = LaurentPoly::q_power(static_cast<int>(n));
    d -= LaurentPoly::q_power(static_cast<int>(-n - 6));
    return d;
}

SlideCoeff degree_reduction_coeff(long n) {
    if (n < 0) throw NegativeDegree();
    if (n % 2 != 0) throw OddDegree();
    return SlideCoeff{n, RatFunc(LaurentPoly::one(), slide_denominator(n))};
}

LaurentPoly kink_coeff() { return LaurentPoly::term(-3, Rational(-1)); }

bool check_nonvanishing(long n_max) {
    if (n_max < 0) throw NegativeDegree();
    for (long n = 0; n <= n_max; n += 2)
        if (slide_denominator(n).is_zero()) return false;
    return true;
}

std::vector<SlideStep> reduction_chain(long n) {
    if (n < 0) throw NegativeDegree();
    if (n % 2 != 0) throw OddDegree();
    std::vector<SlideStep> chain;
    for (long d = n; d > 0; d -= 2) {
        SlideStep step;
        step.from_degree = d;
        step.coeff = degree_reduction_coeff(d);
        step.remainder_degree = d - 2;
        chain.push_back(std::move(step));
    }
    return chain;
}

} // namespace skein
