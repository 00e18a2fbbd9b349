#pragma once

#include <mutex>
#include <string>
#include <vector>

#include "skeinalg/sl2.hpp"
#include "skeinalg/sparse_poly.hpp"

namespace skein {

/// Freely reduced word in the free group on a, b. Letters are encoded
/// +1 = a, -1 = a^-1, +2 = b, -2 = b^-1.
class F2Word {
public:
    F2Word() = default;
    explicit F2Word(std::vector<int> letters);

    /// Parses "abA" style strings: lowercase a, b; uppercase = inverse.
    static F2Word parse(const std::string& s);

    const std::vector<int>& letters() const { return letters_; }
    size_t length() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    F2Word inverse() const;
    F2Word cyclically_reduced() const;
    /// Conjugation- and inversion-invariant key: the lexicographically least
    /// rotation of the cyclic reduction of the word or its inverse.
    std::vector<int> canonical_key() const;

    std::string str() const;

    friend bool operator==(const F2Word& x, const F2Word& y) {
        return x.letters_ == y.letters_;
    }

private:
    std::vector<int> letters_;
};

/// Evaluate a word at a pair of SL2 matrices (a -> A, b -> B).
Mat2 evaluate_word(const F2Word& w, const Mat2& A, const Mat2& B);

/// The free ring Q[x, z, y] of the genus-2 handlebody.
const RingPtr& h2_ring();

/// Trace polynomials of free-group words in the ring Q[x, z, y] with
/// x = tr(a), z = tr(b), y = tr(ab), computed by the trace recursion
/// tr(uv) = tr(u)tr(v) - tr(uv^-1). Memoizes on canonical keys; safe for
/// concurrent use.
class TracePolynomials {
public:
    TracePolynomials();

    const RingPtr& ring() const { return ring_; }
    QPoly x() const { return QPoly::variable(ring_, 0); }
    QPoly z() const { return QPoly::variable(ring_, 1); }
    QPoly y() const { return QPoly::variable(ring_, 2); }

    QPoly trace(const F2Word& w);

private:
    QPoly compute(const std::vector<int>& word);
    QPoly cached(const std::vector<int>& word);

    RingPtr ring_;
    std::map<std::vector<int>, QPoly> memo_;
    std::mutex mu_;
};

/// Weighted degree with x, z of weight 1 and y of weight 2.
long xzy_degree(const QPoly& e);

const WeightVector& xzy_weights();

} // namespace skein
