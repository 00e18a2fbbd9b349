#include "skeinalg/dtcoord.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "skeinalg/errors.hpp"
#include "skeinalg/rational.hpp"

namespace skein {

const std::vector<std::array<int, 3>>& pants_table(int genus) {
    // Genus 2: curves C1, C3, C2 from left to right; each handle pants sees
    // its core curve twice and the middle curve once.
    static const std::vector<std::array<int, 3>> g2 = {{0, 0, 2}, {1, 1, 2}};
    // Genus 3: four pants, dual graph the complete graph on them.
    static const std::vector<std::array<int, 3>> g3 = {
        {0, 1, 4}, {0, 3, 5}, {1, 2, 5}, {2, 3, 4}};
    if (genus == 2) return g2;
    if (genus == 3) return g3;
    throw Error("no fixed pants decomposition for genus " + std::to_string(genus));
}

std::string validate_dt_reason(const DTCoord& c) {
    if (c.genus < 2) return "genus must be at least 2";
    if (c.genus > 3)
        return "no fixed pants decomposition for genus " + std::to_string(c.genus);
    size_t len = static_cast<size_t>(3 * c.genus - 3);
    if (c.n.size() != len || c.t.size() != len)
        return "coordinate tuples must have length 3g-3 = " + std::to_string(len);
    for (size_t i = 0; i < len; ++i) {
        if (c.n[i] < 0) return "n" + std::to_string(i + 1) + " is negative";
        if (c.n[i] == 0 && c.t[i] < 0)
            return "n" + std::to_string(i + 1) + " = 0 requires t" +
                   std::to_string(i + 1) + " >= 0";
    }
    for (const auto& pants : pants_table(c.genus)) {
        long sum = c.n[pants[0]] + c.n[pants[1]] + c.n[pants[2]];
        if (sum % 2 != 0)
            return "odd intersection sum " + std::to_string(sum) +
                   " on pants (C" + std::to_string(pants[0] + 1) + ",C" +
                   std::to_string(pants[1] + 1) + ",C" +
                   std::to_string(pants[2] + 1) + ")";
    }
    return "";
}

bool validate_dt(const DTCoord& c) { return validate_dt_reason(c).empty(); }

std::string dt_str(const DTCoord& c) {
    std::ostringstream os;
    os << "g=" << c.genus << ";n=";
    for (size_t i = 0; i < c.n.size(); ++i) os << (i ? "," : "") << c.n[i];
    os << ";t=";
    for (size_t i = 0; i < c.t.size(); ++i) os << (i ? "," : "") << c.t[i];
    return os.str();
}

namespace {

std::vector<long> parse_long_list(const std::string& s) {
    std::vector<long> out;
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, ',')) {
        if (item.empty()) throw Error("empty entry in list \"" + s + "\"");
        out.push_back(std::stol(item));
    }
    return out;
}

} // namespace

DTCoord parse_dt(const std::string& text) {
    DTCoord c;
    bool have_g = false, have_n = false, have_t = false;
    std::istringstream is(text);
    std::string part;
    while (std::getline(is, part, ';')) {
        auto eq = part.find('=');
        if (eq == std::string::npos)
            throw Error("dt: expected key=value in \"" + part + "\"");
        std::string key = part.substr(0, eq);
        std::string val = part.substr(eq + 1);
        if (key == "g") {
            c.genus = std::stoi(val);
            have_g = true;
        } else if (key == "n") {
            c.n = parse_long_list(val);
            have_n = true;
        } else if (key == "t") {
            c.t = parse_long_list(val);
            have_t = true;
        } else {
            throw Error("dt: unknown key \"" + key + "\"");
        }
    }
    if (!have_g || !have_n || !have_t)
        throw Error("dt: need g=..;n=..;t=.. in \"" + text + "\"");
    return c;
}

std::string MVector::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < 6; ++i) os << (i ? "," : "") << m[i];
    os << ")";
    return os.str();
}

const std::array<MVector, 7>& generator_mvectors() {
    static const std::array<MVector, 7> v = {
        MVector{{1, 1, 0, 0, 0, 1}},  // s1
        MVector{{0, 1, 1, 0, 1, 0}},  // s2
        MVector{{0, 0, 1, 1, 0, 1}},  // s3
        MVector{{1, 0, 1, 0, 1, 1}},  // s12
        MVector{{1, 1, 1, 1, 0, 0}},  // s13
        MVector{{0, 1, 0, 1, 1, 1}},  // s23
        MVector{{1, 0, 0, 1, 1, 0}},  // s123
    };
    return v;
}

MVector monomial_mvector(const Monomial& k) {
    if (k.arity() != 7) throw Error("monomial_mvector: arity must be 7");
    MVector r;
    const auto& gens = generator_mvectors();
    for (size_t w = 0; w < 7; ++w) r = r + gens[w].scaled(k[w]);
    return r;
}

namespace {

// Exact rank and kernel of the 6x7 matrix whose columns are the generator
// m-vectors.
void rank_and_kernel(int& rank, std::vector<long>& kernel) {
    const auto& gens = generator_mvectors();
    std::vector<std::vector<Rational>> m(6, std::vector<Rational>(7));
    for (size_t r = 0; r < 6; ++r)
        for (size_t c = 0; c < 7; ++c) m[r][c] = Rational(gens[c].m[r]);

    std::vector<int> pivot_col_of_row;
    size_t row = 0;
    for (size_t col = 0; col < 7 && row < 6; ++col) {
        size_t sel = row;
        while (sel < 6 && m[sel][col].is_zero()) ++sel;
        if (sel == 6) continue;
        std::swap(m[sel], m[row]);
        Rational inv = m[row][col].inverse();
        for (size_t c = col; c < 7; ++c) m[row][c] *= inv;
        for (size_t r = 0; r < 6; ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            Rational f = m[r][col];
            for (size_t c = col; c < 7; ++c) m[r][c] -= f * m[row][c];
        }
        pivot_col_of_row.push_back(static_cast<int>(col));
        ++row;
    }
    rank = static_cast<int>(row);

    // One free column expected; back-substitute a kernel vector.
    std::vector<bool> is_pivot(7, false);
    for (int pc : pivot_col_of_row) is_pivot[static_cast<size_t>(pc)] = true;
    std::vector<Rational> k(7, Rational(0));
    int free_col = -1;
    for (size_t c = 0; c < 7; ++c)
        if (!is_pivot[c]) free_col = static_cast<int>(c);
    kernel.assign(7, 0);
    if (free_col < 0) return;
    k[static_cast<size_t>(free_col)] = Rational(1);
    for (size_t r = 0; r < pivot_col_of_row.size(); ++r)
        k[static_cast<size_t>(pivot_col_of_row[r])] =
            -m[r][static_cast<size_t>(free_col)];

    // Scale to a primitive integer vector with positive first nonzero entry.
    mpz_class lcm = 1;
    for (const auto& q : k)
        if (!q.is_zero()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.den().get_mpz_t());
    std::vector<mpz_class> iv(7);
    for (size_t i = 0; i < 7; ++i) iv[i] = k[i].num() * (lcm / k[i].den());
    mpz_class g = 0;
    for (const auto& z : iv) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.get_mpz_t());
    if (g != 0)
        for (auto& z : iv) z /= g;
    for (const auto& z : iv) {
        if (z == 0) continue;
        if (z < 0)
            for (auto& w : iv) w = -w;
        break;
    }
    for (size_t i = 0; i < 7; ++i) kernel[i] = static_cast<long>(iv[i].get_si());
}

} // namespace

InjectivityReport verify_mvector_injectivity(long bound) {
    if (bound < 1) throw Error("verify_mvector_injectivity: bound must be >= 1");
    InjectivityReport rep;
    rep.bound = bound;
    rank_and_kernel(rep.rank, rep.kernel);
    rep.kernel_ok = rep.kernel == std::vector<long>{1, 1, 1, -1, -1, -1, 1};

    std::map<std::array<long, 6>, Monomial> seen;
    Monomial k(7);
    rep.injective = true;
    // Odometer over {0..bound}^7 restricted to basis tuples.
    while (true) {
        if (k[3] == 0 || k[4] == 0 || k[5] == 0) {
            ++rep.tuples_checked;
            MVector mv = monomial_mvector(k);
            auto [it, fresh] = seen.emplace(mv.m, k);
            if (!fresh) {
                rep.injective = false;
                if (!rep.collision) rep.collision = {it->second, k};
            }
        }
        size_t i = 0;
        while (i < 7 && k[i] == bound) k[i++] = 0;
        if (i == 7) break;
        ++k[i];
    }
    return rep;
}

std::vector<mpz_class> smith_invariant_factors(std::vector<std::vector<mpz_class>> m) {
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    std::vector<mpz_class> factors;
    size_t t = 0;
    while (t < rows && t < cols) {
        // Find a nonzero pivot of minimal absolute value.
        size_t pr = rows, pc = cols;
        mpz_class best = 0;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j) {
                if (m[i][j] == 0) continue;
                mpz_class a = abs(m[i][j]);
                if (pr == rows || a < best) {
                    best = a;
                    pr = i;
                    pc = j;
                }
            }
        if (pr == rows) break;
        std::swap(m[t], m[pr]);
        for (size_t i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pc]);

        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (size_t i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) continue;
                mpz_class q = m[i][t] / m[t][t];
                for (size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
                if (m[i][t] != 0) {  // remainder smaller than pivot: swap up
                    std::swap(m[t], m[i]);
                    dirty = true;
                }
            }
            for (size_t j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) continue;
                mpz_class q = m[t][j] / m[t][t];
                for (size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
                if (m[t][j] != 0) {
                    for (size_t i = t; i < rows; ++i) std::swap(m[i][t], m[i][j]);
                    dirty = true;
                }
            }
        }

        // Divisibility fix-up: pivot must divide the remaining block.
        bool restart = false;
        for (size_t i = t + 1; i < rows && !restart; ++i)
            for (size_t j = t + 1; j < cols && !restart; ++j)
                if (m[i][j] % m[t][t] != 0) {
                    for (size_t jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
                    restart = true;
                }
        if (restart) continue;

        if (m[t][t] < 0) m[t][t] = -m[t][t];
        factors.push_back(m[t][t]);
        ++t;
    }
    return factors;
}

ClosingReport check_closing_hypothesis_report(const AttachingSystemDesc& a) {
    ClosingReport rep;
    if (a.genus < 0) throw Error("attaching system: negative genus");
    std::vector<std::vector<mpz_class>> rows;
    std::vector<int> ids;
    for (size_t i = 0; i < a.curves.size(); ++i) {
        const CurveDesc& c = a.curves[i];
        if (c.homology.size() != static_cast<size_t>(a.genus))
            throw Error("attaching system: homology class has wrong length");
        bool zero = std::all_of(c.homology.begin(), c.homology.end(),
                                [](long v) { return v == 0; });
        if ((c.separating || c.trivial) && !zero)
            throw Error("attaching system: separating/trivial curve with nonzero class");
        if (!c.separating && !c.trivial) ids.push_back(c.isotopy_id);
        rows.emplace_back(c.homology.begin(), c.homology.end());
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    rep.distinct_classes = static_cast<long>(ids.size());
    rep.count_ok = rep.distinct_classes == a.genus;

    rep.invariant_factors = smith_invariant_factors(std::move(rows));
    rep.spans = rep.invariant_factors.size() == static_cast<size_t>(a.genus) &&
                std::all_of(rep.invariant_factors.begin(), rep.invariant_factors.end(),
                            [](const mpz_class& z) { return z == 1; });
    return rep;
}

bool check_closing_hypothesis(const AttachingSystemDesc& a) { return check_closing_hypothesis_report(a).pass(); }

FamilyCase parse_family_case(const std::string& s) {
    if (s == "1a") return FamilyCase::c1a;
    if (s == "1b") return FamilyCase::c1b;
    if (s == "1c") return FamilyCase::c1c;
    if (s == "2a") return FamilyCase::c2a;
    if (s == "2b") return FamilyCase::c2b;
    throw SchemaError("case", "unknown family case \"" + s + "\"");
}

std::string family_case_name(FamilyCase c) {
    switch (c) {
        case FamilyCase::c1a: return "1a";
        case FamilyCase::c1b: return "1b";
        case FamilyCase::c1c: return "1c";
        case FamilyCase::c2a: return "2a";
        case FamilyCase::c2b: return "2b";
    }
    return "?";
}

namespace {

long need(const std::map<std::string, long>& params, const std::string& key) {
    auto it = params.find(key);
    if (it == params.end()) throw SchemaError("params." + key, "missing parameter");
    return it->second;
}

long optional_param(const std::map<std::string, long>& params, const std::string& key,
                    long fallback) {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

} // namespace

DTCoord family_curve(FamilyCase c, const std::map<std::string, long>& params) {
    DTCoord dt;
    switch (c) {
        case FamilyCase::c1a: {
            long n = need(params, "n"), t1 = need(params, "t1"), t2 = need(params, "t2");
            if (n < 1) throw ParamConstraintViolated("n >= 1");
            if (t1 * t2 < 0) throw ParamConstraintViolated("t1*t2 >= 0");
            if (n != std::labs(2 * t2 + t1))
                throw ParamConstraintViolated("n = |2*t2 + t1|");
            dt = {2, {n, n, 2 * n}, {t1, t1, t2}};
            break;
        }
        case FamilyCase::c1b: {
            long n = need(params, "n"), m = need(params, "m"), t = need(params, "t");
            if (n < 1) throw ParamConstraintViolated("n >= 1");
            if (m < 0) throw ParamConstraintViolated("m >= 0");
            if (t != n && t != -n) throw ParamConstraintViolated("t in {n, -n}");
            dt = {2, {n + m, n, 2 * n}, {t, 0, 0}};
            break;
        }
        case FamilyCase::c1c: {
            long n1 = need(params, "n1"), n2 = need(params, "n2");
            long t1 = need(params, "t1"), t2 = need(params, "t2");
            if (n1 < 0 || n2 < 0) throw ParamConstraintViolated("n1, n2 >= 0");
            if (std::labs(t1) != 1 || std::labs(t2) != 1)
                throw ParamConstraintViolated("t1, t2 in {+1, -1}");
            dt = {2, {n1, n2, 2}, {t1, t2, 0}};
            break;
        }
        case FamilyCase::c2a: {
            long n = need(params, "n"), m = need(params, "m");
            long sign = optional_param(params, "sign", 1);
            if (n < 1 || m < 1) throw ParamConstraintViolated("n, m >= 1");
            if (std::labs(sign) != 1) throw ParamConstraintViolated("sign in {+1, -1}");
            dt = {3, {1, n, n + m, m + 1, n + 1, m}, {0, 0, 0, sign, sign, 0}};
            break;
        }
        case FamilyCase::c2b: {
            long n = need(params, "n"), m = need(params, "m"), t = need(params, "t");
            if (n < 1 || m < 1) throw ParamConstraintViolated("n, m >= 1");
            dt = {3, {n + m, m, 0, n, n, m + 2 * n}, {t, 0, 0, 0, 0, 0}};
            break;
        }
    }
    std::string reason = validate_dt_reason(dt);
    if (!reason.empty()) throw ParamConstraintViolated(reason);
    return dt;
}

} // namespace skein
