#include "skeinalg/trace_poly.hpp"

#include <algorithm>

namespace skein {

namespace {

std::vector<int> freely_reduce(const std::vector<int>& in) {
    std::vector<int> out;
    out.reserve(in.size());
    for (int l : in) {
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

std::vector<int> rotate(const std::vector<int>& w, size_t r) {
    std::vector<int> out;
    out.reserve(w.size());
    out.insert(out.end(), w.begin() + static_cast<long>(r), w.end());
    out.insert(out.end(), w.begin(), w.begin() + static_cast<long>(r));
    return out;
}

std::vector<int> min_rotation(const std::vector<int>& w) {
    std::vector<int> best = w;
    for (size_t r = 1; r < w.size(); ++r) {
        std::vector<int> cand = rotate(w, r);
        if (cand < best) best = cand;
    }
    return best;
}

} // namespace

F2Word::F2Word(std::vector<int> letters) : letters_(freely_reduce(letters)) {
    for (int l : letters_)
        if (l == 0 || l > 2 || l < -2) throw Error("F2Word: invalid letter code");
}

F2Word F2Word::parse(const std::string& s) {
    std::vector<int> ls;
    for (char ch : s) {
        switch (ch) {
            case 'a': ls.push_back(1); break;
            case 'A': ls.push_back(-1); break;
            case 'b': ls.push_back(2); break;
            case 'B': ls.push_back(-2); break;
            case ' ': break;
            default:
                throw Error(std::string("F2Word: unexpected character '") + ch + "'");
        }
    }
    return F2Word(std::move(ls));
}

F2Word F2Word::inverse() const {
    std::vector<int> ls(letters_.rbegin(), letters_.rend());
    for (int& l : ls) l = -l;
    return F2Word(std::move(ls));
}

F2Word F2Word::cyclically_reduced() const {
    std::vector<int> w = letters_;
    while (w.size() >= 2 && w.front() == -w.back()) {
        w.erase(w.begin());
        w.pop_back();
    }
    return F2Word(std::move(w));
}

std::vector<int> F2Word::canonical_key() const {
    F2Word cyc = cyclically_reduced();
    if (cyc.empty()) return {};
    // Prefer the side with fewer inverse letters so that canonicalization
    // never reintroduces them; the trace recursion's termination measure
    // counts them.
    std::vector<int> fwd = cyc.letters_;
    std::vector<int> rev = cyc.inverse().letters_;
    auto negs = [](const std::vector<int>& v) {
        long n = 0;
        for (int l : v)
            if (l < 0) ++n;
        return n;
    };
    long nf = negs(fwd), nr = negs(rev);
    if (nf < nr) return min_rotation(fwd);
    if (nr < nf) return min_rotation(rev);
    return std::min(min_rotation(fwd), min_rotation(rev));
}

std::string F2Word::str() const {
    static const char* names[] = {"B", "A", "", "a", "b"};
    std::string s;
    for (int l : letters_) s += names[l + 2];
    return s;
}

Mat2 evaluate_word(const F2Word& w, const Mat2& A, const Mat2& B) {
    Mat2 m = Mat2::identity();
    Mat2 Ai = A.sl2_inverse();
    Mat2 Bi = B.sl2_inverse();
    for (int l : w.letters()) {
        switch (l) {
            case 1: m = m * A; break;
            case -1: m = m * Ai; break;
            case 2: m = m * B; break;
            case -2: m = m * Bi; break;
        }
    }
    return m;
}

const RingPtr& h2_ring() {
    static const RingPtr r = make_ring({"x", "z", "y"});
    return r;
}

TracePolynomials::TracePolynomials() : ring_(h2_ring()) {}

QPoly TracePolynomials::trace(const F2Word& w) { return cached(w.letters()); }

QPoly TracePolynomials::cached(const std::vector<int>& word) {
    std::vector<int> key = F2Word(word).canonical_key();
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
    }
    QPoly result = compute(key);
    std::lock_guard<std::mutex> lk(mu_);
    memo_.emplace(std::move(key), result);
    return result;
}

// The word here is cyclically reduced. Every branch is an instance of
// tr(uv) = tr(u)tr(v) - tr(uv^-1) together with conjugation invariance.
QPoly TracePolynomials::compute(const std::vector<int>& w) {
    size_t L = w.size();
    if (L == 0) return QPoly::constant(ring_, Rational(2));
    if (L == 1) return std::abs(w[0]) == 1 ? x() : z();

    // Eliminate inverse letters first: rotate one to the end, then
    // tr(u g^-1) = tr(u) tr(g) - tr(u g).
    for (size_t i = L; i-- > 0;) {
        if (w[i] >= 0) continue;
        std::vector<int> rot = rotate(w, (i + 1) % L);
        int g = -rot.back();
        std::vector<int> u(rot.begin(), rot.end() - 1);
        std::vector<int> ug = u;
        ug.push_back(g);
        QPoly trg = std::abs(g) == 1 ? x() : z();
        return cached(u) * trg - cached(ug);
    }

    // Positive power of a single letter: tr(g^n) = tr(g)tr(g^(n-1)) - tr(g^(n-2)).
    bool single = std::all_of(w.begin(), w.end(), [&](int l) { return l == w[0]; });
    if (single) {
        QPoly trg = std::abs(w[0]) == 1 ? x() : z();
        std::vector<int> w1(w.begin(), w.end() - 1);
        std::vector<int> w2(w.begin(), w.end() - 2);
        return trg * cached(w1) - cached(w2);
    }

    // Doubled letter somewhere cyclically: rotate so w = g g rest, then
    // tr(g g rest) = tr(g) tr(g rest) - tr(rest).
    for (size_t i = 0; i < L; ++i) {
        if (w[i] != w[(i + 1) % L]) continue;
        std::vector<int> rot = rotate(w, i);
        QPoly trg = std::abs(rot[0]) == 1 ? x() : z();
        std::vector<int> grest(rot.begin() + 1, rot.end());
        std::vector<int> rest(rot.begin() + 2, rot.end());
        return trg * cached(grest) - cached(rest);
    }

    // Strictly alternating positive word (ab)^n.
    if (L == 2) return y();
    std::vector<int> w1(w.begin(), w.end() - 2);
    std::vector<int> w2(w.begin(), w.end() - 4);
    return y() * cached(w1) - cached(w2);
}

const WeightVector& xzy_weights() {
    static const WeightVector w(std::vector<long>{1, 1, 2});
    return w;
}

long xzy_degree(const QPoly& e) { return e.weighted_degree(xzy_weights()); }

} // namespace skein
