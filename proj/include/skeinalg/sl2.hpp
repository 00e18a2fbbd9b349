#pragma once

#include <random>

#include "skeinalg/rational.hpp"

namespace skein {

/// 2x2 matrix over the rationals.
struct Mat2 {
    Rational a, b, c, d;  // row major: (a b; c d)

    static Mat2 identity() { return {1, 0, 0, 1}; }

    Rational trace() const { return a + d; }
    Rational det() const { return a * d - b * c; }
    bool is_sl2() const { return det().is_one(); }

    /// Inverse assuming det = 1.
    Mat2 sl2_inverse() const { return {d, -b, -c, a}; }

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend bool operator==(const Mat2& x, const Mat2& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
};

/// Random integer SL2 matrix built by multiplying elementary shear matrices,
/// keeping every entry within max_abs. Deterministic for a given generator
/// state.
Mat2 random_sl2(std::mt19937_64& rng, long max_abs = 10);

} // namespace skein
