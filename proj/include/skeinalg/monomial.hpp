#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "skeinalg/errors.hpp"

namespace skein {

/// Exponent tuple of a monomial; one non-negative entry per ring variable.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(size_t arity) : exps_(arity, 0) {}
    explicit Monomial(std::vector<long> exps) : exps_(std::move(exps)) {}

    size_t arity() const { return exps_.size(); }
    long operator[](size_t i) const { return exps_[i]; }
    long& operator[](size_t i) { return exps_[i]; }
    const std::vector<long>& exponents() const { return exps_; }

    bool is_constant() const {
        for (long e : exps_)
            if (e != 0) return false;
        return true;
    }

    long total_degree() const {
        return std::accumulate(exps_.begin(), exps_.end(), 0L);
    }

    bool divides(const Monomial& m) const {
        for (size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > m.exps_[i]) return false;
        return true;
    }

    Monomial operator*(const Monomial& b) const {
        Monomial r = *this;
        for (size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += b.exps_[i];
        return r;
    }

    /// Quotient this / b; requires b.divides(*this).
    Monomial operator/(const Monomial& b) const {
        Monomial r = *this;
        for (size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= b.exps_[i];
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.exps_ == b.exps_;
    }
    friend bool operator!=(const Monomial& a, const Monomial& b) {
        return !(a == b);
    }
    /// Plain lexicographic order on exponent vectors (map key order).
    friend bool operator<(const Monomial& a, const Monomial& b) {
        return a.exps_ < b.exps_;
    }

private:
    std::vector<long> exps_;
};

/// Non-negative weight per variable; grades monomials by the inner product.
class WeightVector {
public:
    WeightVector() = default;
    explicit WeightVector(std::vector<long> w) : w_(std::move(w)) {}

    size_t arity() const { return w_.size(); }
    long operator[](size_t i) const { return w_[i]; }
    const std::vector<long>& weights() const { return w_; }

    long degree(const Monomial& m) const {
        long d = 0;
        for (size_t i = 0; i < w_.size(); ++i) d += w_[i] * m[i];
        return d;
    }

    friend bool operator==(const WeightVector& a, const WeightVector& b) {
        return a.w_ == b.w_;
    }

private:
    std::vector<long> w_;
};

/// Total order on monomials given by a lexicographic list of keys, each key
/// either a weighted degree, a single coordinate, or a product of two
/// coordinates. Ties after all keys fall back to plain lex, so the order is
/// always total.
class MonomialOrder {
public:
    struct Key {
        enum class Kind { weight, coord, coord_product };
        Kind kind;
        WeightVector w;  // weight keys
        int i = -1;      // coord / coord_product
        int j = -1;      // coord_product
    };

    MonomialOrder() = default;
    explicit MonomialOrder(std::vector<Key> keys) : keys_(std::move(keys)) {}

    static MonomialOrder graded_lex(const WeightVector& w) {
        return MonomialOrder({Key{Key::Kind::weight, w, -1, -1}});
    }
    static MonomialOrder lex_on_coords(const std::vector<int>& coords) {
        std::vector<Key> ks;
        for (int c : coords) ks.push_back(Key{Key::Kind::coord, WeightVector(), c, -1});
        return MonomialOrder(std::move(ks));
    }

    /// <0 if a precedes b, 0 if equal, >0 otherwise.
    int compare(const Monomial& a, const Monomial& b) const {
        for (const Key& k : keys_) {
            long va = 0, vb = 0;
            switch (k.kind) {
                case Key::Kind::weight:
                    va = k.w.degree(a);
                    vb = k.w.degree(b);
                    break;
                case Key::Kind::coord:
                    va = a[static_cast<size_t>(k.i)];
                    vb = b[static_cast<size_t>(k.i)];
                    break;
                case Key::Kind::coord_product:
                    va = a[static_cast<size_t>(k.i)] * a[static_cast<size_t>(k.j)];
                    vb = b[static_cast<size_t>(k.i)] * b[static_cast<size_t>(k.j)];
                    break;
            }
            if (va != vb) return va < vb ? -1 : 1;
        }
        if (a.exponents() != b.exponents()) return a.exponents() < b.exponents() ? -1 : 1;
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

private:
    std::vector<Key> keys_;
};

} // namespace skein
