#pragma once

#include <random>

#include "skeinalg/s4ring.hpp"
#include "skeinalg/trace_poly.hpp"

namespace skein {

// Seeded random inputs for the oracle and property suites. Everything here
// draws from the raw mt19937_64 stream, so a seed pins the exact values
// across platforms.

inline long random_range(std::mt19937_64& rng, long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

/// Exponent tuple with entries in [0, max_exp] and one of k12, k13, k23
/// forced to zero.
inline Monomial random_lambda_monomial(std::mt19937_64& rng, long max_exp) {
    Monomial k(7);
    for (size_t i = 0; i < 7; ++i) k[i] = random_range(rng, 0, max_exp);
    k[3 + static_cast<size_t>(rng() % 3)] = 0;
    return k;
}

/// Arbitrary exponent tuple (not necessarily in the basis).
inline Monomial random_s4_monomial(std::mt19937_64& rng, long max_exp) {
    Monomial k(7);
    for (size_t i = 0; i < 7; ++i) k[i] = random_range(rng, 0, max_exp);
    return k;
}

inline Rational random_coeff(std::mt19937_64& rng) {
    long c = random_range(rng, -4, 4);
    return Rational(c == 0 ? 1 : c);
}

/// Random element supported on basis monomials.
inline QPoly random_s4_reduced(std::mt19937_64& rng, int terms, long max_exp) {
    const S4Ring& R = S4Ring::instance();
    QPoly p(R.ring());
    for (int t = 0; t < terms; ++t)
        p.add_term(random_lambda_monomial(rng, max_exp), random_coeff(rng));
    if (p.is_zero()) p = R.constant(Rational(1));
    return p;
}

/// Random element of the seven-generator ring, reduction not assumed.
inline QPoly random_s4_poly(std::mt19937_64& rng, int terms, long max_exp) {
    const S4Ring& R = S4Ring::instance();
    QPoly p(R.ring());
    for (int t = 0; t < terms; ++t)
        p.add_term(random_s4_monomial(rng, max_exp), random_coeff(rng));
    return p;
}

/// Random word of at most the given length (free reduction may shorten it).
inline F2Word random_word(std::mt19937_64& rng, size_t max_len) {
    static const int alphabet[4] = {1, -1, 2, -2};
    std::vector<int> ls;
    size_t len = static_cast<size_t>(random_range(rng, 1, static_cast<long>(max_len)));
    for (size_t i = 0; i < len; ++i) ls.push_back(alphabet[rng() % 4]);
    return F2Word(std::move(ls));
}

} // namespace skein
