#pragma once

#include <vector>

#include "skeinalg/ratfunc.hpp"

namespace skein {

/// Coefficient attached to one sphere-sliding step at even degree n through
/// the separating sphere: 1 / (q^n - q^(-n-6)).
struct SlideCoeff {
    long n = 0;
    RatFunc value;
};

/// The denominator q^n - q^(-n-6) of the sliding coefficient.
LaurentPoly slide_denominator(long n);

/// Throws OddDegree / NegativeDegree on bad input.
SlideCoeff degree_reduction_coeff(long n);

/// The kink removal constant -q^-3.
LaurentPoly kink_coeff();

/// True iff q^n - q^(-n-6) is nonzero in Q(q) for every even 0 <= n <= n_max
/// (the exponents n and -n-6 never coincide for n >= 0).
bool check_nonvanishing(long n_max);

/// One formal step of the degree reduction: the remainder is an opaque bag of
/// terms all of strictly smaller even degree.
struct SlideStep {
    long from_degree = 0;
    SlideCoeff coeff;
    long remainder_degree = 0;  // from_degree - 2
};

/// The full chain n, n-2, ..., 2 ending at degree 0; its strictly decreasing
/// even degree tags witness the termination of the rewriting.
std::vector<SlideStep> reduction_chain(long n);

} // namespace skein
