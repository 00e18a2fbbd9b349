#include "skeinalg/sl2.hpp"

namespace skein {

namespace {

bool within(const Mat2& m, const Rational& bound) {
    return abs(m.a) <= bound && abs(m.b) <= bound && abs(m.c) <= bound &&
           abs(m.d) <= bound;
}

} // namespace

Mat2 random_sl2(std::mt19937_64& rng, long max_abs) {
    Mat2 m = Mat2::identity();
    Rational bound(max_abs);
    // 12 attempts keep the walk short while mixing all four entries.
    for (int step = 0; step < 12; ++step) {
        unsigned long r = rng();
        long t = static_cast<long>(r % 4) - 2;  // -2..1
        if (t >= 0) ++t;                        // -2,-1,1,2
        bool upper = (r >> 8) & 1;
        Mat2 e = upper ? Mat2{1, Rational(t), 0, 1} : Mat2{1, 0, Rational(t), 1};
        Mat2 next = m * e;
        if (within(next, bound)) m = next;
    }
    return m;
}

} // namespace skein
