#include "skeinalg/spanning.hpp"

#include <algorithm>
#include <sstream>

namespace skein {

const MonomialOrder& s4_leading_order() {
    using Key = MonomialOrder::Key;
    static const MonomialOrder ord(std::vector<Key>{
        Key{Key::Kind::coord_product, WeightVector(), 4, 5},
        Key{Key::Kind::coord, WeightVector(), 6, -1},
        Key{Key::Kind::coord, WeightVector(), 5, -1},
        Key{Key::Kind::coord, WeightVector(), 4, -1},
        Key{Key::Kind::coord, WeightVector(), 3, -1},
        Key{Key::Kind::coord, WeightVector(), 2, -1},
        Key{Key::Kind::coord, WeightVector(), 1, -1},
        Key{Key::Kind::coord, WeightVector(), 0, -1},
    });
    return ord;
}

const RingPtr& SpanProblem::ring() const {
    return ring_kind == AmbientRing::h2 ? h2_ring() : S4Ring::instance().ring();
}

QPoly SpanProblem::reduce(const QPoly& e) const {
    return ring_kind == AmbientRing::h2 ? e : S4Ring::instance().normal_form(e);
}

bool SpanProblem::basis_monomial(const Monomial& m) const {
    return ring_kind == AmbientRing::h2 || lambda_basis_member(m);
}

std::string SpanProblem::canonical_text() const {
    std::ostringstream os;
    os << "ring=" << (ring_kind == AmbientRing::h2 ? "h2" : "s4") << "\n";
    os << "weight=";
    for (size_t i = 0; i < weight.arity(); ++i) os << (i ? "," : "") << weight[i];
    os << "\ncutoff=" << cutoff << "\ncap=" << generator_weight_cap << "\n";
    for (const auto& [name, g] : generators)
        os << "generator " << name << " = " << g.str() << "\n";
    for (const auto& x : module_gens) os << "x = " << x.str() << "\n";
    return os.str();
}

namespace {

void validate_problem(const SpanProblem& p) {
    if (p.weight.arity() != p.ring()->arity())
        throw Error("span problem: weight arity mismatch");
    for (size_t i = 0; i < p.weight.arity(); ++i)
        if (p.weight[i] < 1)
            throw Error("span problem: weights must be positive");
    if (p.cutoff < 0) throw Error("span problem: cutoff must be >= 0");
    if (p.generators.empty()) throw Error("span problem: no generators");
    for (const auto& [name, g] : p.generators) {
        check_same_ring(g.ring(), p.ring());
        if (g.is_zero()) throw Error("span problem: generator " + name + " is zero");
        if (p.ring_kind == AmbientRing::s4 && !S4Ring::instance().is_reduced(g))
            throw Error("span problem: generator " + name + " is not reduced");
    }
    for (const auto& x : p.module_gens) {
        check_same_ring(x.ring(), p.ring());
        if (p.ring_kind == AmbientRing::s4 && !S4Ring::instance().is_reduced(x))
            throw Error("span problem: module generator is not reduced");
    }
    if (p.module_gens.empty()) throw Error("span problem: X is empty");
}

// Basis monomials of weight in [0, max_d], grouped by weight, each group in
// ascending lex order.
std::map<long, std::vector<Monomial>> enumerate_basis(const SpanProblem& p,
                                                      long max_d) {
    std::map<long, std::vector<Monomial>> out;
    size_t arity = p.ring()->arity();
    Monomial m(arity);
    // Odometer bounded per coordinate by weight budget.
    std::vector<long> caps(arity);
    for (size_t i = 0; i < arity; ++i) caps[i] = max_d / p.weight[i];
    while (true) {
        long d = p.weight.degree(m);
        if (d <= max_d && p.basis_monomial(m)) out[d].push_back(m);
        size_t i = arity;
        while (i-- > 0) {
            if (m[i] < caps[i]) {
                ++m[i];
                break;
            }
            m[i] = 0;
            if (i == 0) {
                for (auto& [deg, v] : out) std::sort(v.begin(), v.end());
                return out;
            }
        }
    }
}

struct ProductInfo {
    std::vector<long> exps;
    size_t x_index = 0;
    QPoly reduced;
    long degree = -1;  // -1 for the zero product
};

// All products g^a * x with sum a_i * w(g_i) <= cap, in deterministic order
// (exponent tuples ascending lex, then X index).
std::vector<ProductInfo> enumerate_products(const SpanProblem& p,
                                            const std::vector<long>& gen_weights) {
    size_t r = p.generators.size();
    // Reduced powers of each generator, computed incrementally.
    std::vector<std::vector<QPoly>> pows(r);
    for (size_t i = 0; i < r; ++i) {
        long max_e = p.generator_weight_cap / gen_weights[i];
        pows[i].push_back(QPoly::constant(p.ring(), Rational(1)));
        for (long e = 1; e <= max_e; ++e)
            pows[i].push_back(p.reduce(pows[i].back() * p.generators[i].second));
    }

    std::vector<ProductInfo> out;
    std::vector<long> a(r, 0);
    auto rec = [&](auto&& self, size_t i, long budget, const QPoly& acc) -> void {
        if (i == r) {
            for (size_t j = 0; j < p.module_gens.size(); ++j) {
                if (p.module_gens[j].is_zero()) continue;
                ProductInfo info;
                info.exps = a;
                info.x_index = j;
                info.reduced = p.reduce(acc * p.module_gens[j]);
                info.degree = info.reduced.is_zero()
                                  ? -1
                                  : info.reduced.weighted_degree(p.weight);
                out.push_back(std::move(info));
            }
            return;
        }
        for (long e = 0; e * gen_weights[i] <= budget; ++e) {
            a[i] = e;
            self(self, i + 1, budget - e * gen_weights[i],
                 e == 0 ? acc : p.reduce(acc * pows[i][static_cast<size_t>(e)]));
        }
        a[i] = 0;
    };
    rec(rec, 0, p.generator_weight_cap, QPoly::constant(p.ring(), Rational(1)));
    return out;
}

using Combo = std::map<size_t, Rational>;  // product index -> coefficient

void combo_add(Combo& dst, const Combo& src, const Rational& f) {
    for (const auto& [i, c] : src) {
        auto it = dst.find(i);
        if (it == dst.end()) {
            Rational v = c * f;
            if (!v.is_zero()) dst.emplace(i, v);
            continue;
        }
        it->second += c * f;
        if (it->second.is_zero()) dst.erase(it);
    }
}

struct EchelonRow {
    QPoly poly;
    Combo combo;
};

// Echelon table with deterministic pivots. lead() picks the pivot monomial
// of a row; lower-degree corrections come from lex-least pivots inside a
// homogeneous slice, the cross-degree solve pivots on the heaviest monomial.
class Echelon {
public:
    explicit Echelon(bool pivot_least) : pivot_least_(pivot_least) {}

    const Monomial* lead(const QPoly& v) const {
        if (v.is_zero()) return nullptr;
        if (pivot_least_) return &v.terms().begin()->first;
        const Monomial* best = nullptr;
        long best_w = 0;
        for (const auto& [m, c] : v.terms()) {
            long w = weight_ ? weight_->degree(m) : 0;
            if (!best || w > best_w || (w == best_w && best->exponents() < m.exponents())) {
                best = &m;
                best_w = w;
            }
        }
        return best;
    }

    void set_weight(const WeightVector* w) { weight_ = w; }

    // Reduce v/combo against the table in place; returns the surviving lead
    // or null when v vanishes.
    const Monomial* reduce(QPoly& v, Combo& combo) const {
        while (const Monomial* m = lead(v)) {
            auto it = rows_.find(*m);
            if (it == rows_.end()) return m;
            Rational c = v.coeff(*m);
            v -= it->second.poly.scaled(c);
            combo_add(combo, it->second.combo, -c);
        }
        return nullptr;
    }

    void insert(QPoly v, Combo combo) {
        while (const Monomial* m = lead(v)) {
            auto it = rows_.find(*m);
            if (it == rows_.end()) {
                Rational inv = v.coeff(*m).inverse();
                rows_.emplace(*m, EchelonRow{v.scaled(inv), scale_combo(combo, inv)});
                return;
            }
            Rational c = v.coeff(*m);
            v -= it->second.poly.scaled(c);
            combo_add(combo, it->second.combo, -c);
        }
    }

    size_t size() const { return rows_.size(); }

private:
    static Combo scale_combo(const Combo& c, const Rational& f) {
        Combo out;
        for (const auto& [i, v] : c) out.emplace(i, v * f);
        return out;
    }

    bool pivot_least_;
    const WeightVector* weight_ = nullptr;
    std::map<Monomial, EchelonRow> rows_;
};

} // namespace

QPoly product_poly(const SpanProblem& p, const std::vector<long>& exps,
                   size_t x_index) {
    QPoly acc = QPoly::constant(p.ring(), Rational(1));
    for (size_t i = 0; i < exps.size(); ++i)
        for (long e = 0; e < exps[i]; ++e)
            acc = p.reduce(acc * p.generators[i].second);
    return p.reduce(acc * p.module_gens[x_index]);
}

QPoly replay_witness(const SpanProblem& p, const WitnessExpr& e) {
    QPoly v(p.ring());
    for (const WitnessTerm& t : e.products)
        v += product_poly(p, t.gen_exponents, t.x_index).scaled(t.coeff);
    for (const CorrectionTerm& c : e.corrections)
        v -= QPoly::from_monomial(p.ring(), c.monomial, c.coeff);
    return p.reduce(v);
}

std::string witness_str(const SpanProblem& p, const WitnessExpr& e) {
    std::ostringstream os;
    bool first = true;
    for (const WitnessTerm& t : e.products) {
        if (!first) os << " + ";
        first = false;
        os << "(" << t.coeff.str() << ")*";
        bool any = false;
        for (size_t i = 0; i < t.gen_exponents.size(); ++i) {
            if (t.gen_exponents[i] == 0) continue;
            if (any) os << " ";
            any = true;
            os << p.generators[i].first;
            if (t.gen_exponents[i] != 1) os << "^" << t.gen_exponents[i];
        }
        if (!any) os << "1";
        os << "*X" << t.x_index;
    }
    for (const CorrectionTerm& c : e.corrections) {
        os << " - (" << c.coeff.str() << ")*["
           << QPoly::from_monomial(p.ring(), c.monomial, Rational(1)).str() << "]";
    }
    return os.str();
}

std::vector<Monomial> basis_monomials_of_weight(const SpanProblem& p, long d) {
    auto all = enumerate_basis(p, d);
    auto it = all.find(d);
    return it == all.end() ? std::vector<Monomial>() : it->second;
}

SpanOutcome certify_spanning(const SpanProblem& p) {
    validate_problem(p);

    std::vector<long> gen_weights;
    long max_gen_weight = 0;
    for (const auto& [name, g] : p.generators) {
        long w = g.weighted_degree(p.weight);
        if (w < 1)
            throw Error("span problem: generator " + name + " has weight 0");
        gen_weights.push_back(w);
        max_gen_weight = std::max(max_gen_weight, w);
    }

    std::vector<ProductInfo> products = enumerate_products(p, gen_weights);
    std::map<long, std::vector<size_t>> bucket;
    for (size_t i = 0; i < products.size(); ++i)
        if (products[i].degree >= 0)
            bucket[products[i].degree].push_back(i);

    std::map<long, std::vector<Monomial>> basis = enumerate_basis(p, p.cutoff);

    SpanCertificate cert;
    std::vector<Monomial> pending;

    // Degree-by-degree induction: cover weight-d monomials with the top
    // components of weight-d products; push their tails down as corrections
    // to already-covered monomials.
    for (long d = 0; d <= p.cutoff; ++d) {
        const auto bit = basis.find(d);
        long required = bit == basis.end() ? 0 : static_cast<long>(bit->second.size());
        long achieved = 0;
        Echelon ech(/*pivot_least=*/true);
        auto pit = bucket.find(d);
        if (pit != bucket.end()) {
            for (size_t idx : pit->second) {
                QPoly top = products[idx].reduced.graded_component(d, p.weight);
                ech.insert(std::move(top), Combo{{idx, Rational(1)}});
            }
        }
        if (bit != basis.end()) {
            for (const Monomial& m : bit->second) {
                QPoly v = QPoly::from_monomial(p.ring(), m, Rational(1));
                Combo combo;
                if (ech.reduce(v, combo) != nullptr) {
                    pending.push_back(m);
                    continue;
                }
                // m = sum(-combo) * tops; corrections are the matching tails.
                WitnessExpr expr;
                QPoly corr(p.ring());
                bool ok = true;
                for (const auto& [idx, c] : combo) {
                    Rational coeff = -c;
                    expr.products.push_back(
                        WitnessTerm{coeff, products[idx].exps, products[idx].x_index});
                    corr += (products[idx].reduced -
                             products[idx].reduced.graded_component(d, p.weight))
                                .scaled(coeff);
                }
                for (const auto& [mm, cc] : corr.terms()) {
                    if (!cert.covered.count(mm)) {
                        ok = false;
                        break;
                    }
                    expr.corrections.push_back(CorrectionTerm{cc, mm});
                }
                if (!ok) {
                    pending.push_back(m);
                    continue;
                }
                cert.covered.emplace(m, std::move(expr));
                ++achieved;
            }
        }
        cert.frontier[d] = {achieved, required};
    }

    if (!pending.empty()) {
        // Cross-degree solve over the full reduced products.
        Echelon global(/*pivot_least=*/false);
        global.set_weight(&p.weight);
        for (size_t i = 0; i < products.size(); ++i) {
            if (products[i].degree < 0) continue;
            global.insert(products[i].reduced, Combo{{i, Rational(1)}});
        }
        std::sort(pending.begin(), pending.end(), [&](const Monomial& a, const Monomial& b) {
            long wa = p.weight.degree(a), wb = p.weight.degree(b);
            return wa != wb ? wa < wb : a < b;
        });
        for (const Monomial& m : pending) {
            QPoly v = QPoly::from_monomial(p.ring(), m, Rational(1));
            Combo combo;
            if (global.reduce(v, combo) != nullptr) {
                long d = p.weight.degree(m);
                SpanFailure fail;
                fail.monomial = m;
                fail.degree = d;
                fail.achievedDim = cert.frontier.count(d) ? cert.frontier[d].first : 0;
                fail.requiredDim = cert.frontier.count(d) ? cert.frontier[d].second : 0;
                fail.refuted = p.generator_weight_cap >= p.cutoff + max_gen_weight;
                fail.frontier = cert.frontier;
                return fail;
            }
            WitnessExpr expr;
            expr.direct = true;
            for (const auto& [idx, c] : combo)
                expr.products.push_back(
                    WitnessTerm{-c, products[idx].exps, products[idx].x_index});
            cert.covered.emplace(m, std::move(expr));
            ++cert.frontier[p.weight.degree(m)].first;
        }
    }

    return cert;
}

LeadingMatrixReport leading_matrix_report(const SpanProblem& p, long degree,
                                          const MonomialOrder& order) {
    validate_problem(p);
    if (degree > p.cutoff) throw std::invalid_argument("degree exceeds cutoff");
    size_t arity = p.ring()->arity();

    // Assign each generator the variable whose pure power leads its top
    // component; the assignment must be injective and weight preserving.
    std::vector<int> var_of_gen(p.generators.size(), -1);
    std::vector<int> gen_of_var(arity, -1);
    for (size_t i = 0; i < p.generators.size(); ++i) {
        const QPoly& g = p.generators[i].second;
        long d = g.weighted_degree(p.weight);
        QPoly top = g.graded_component(d, p.weight);
        int found = -1;
        for (size_t v = 0; v < arity; ++v) {
            if (d % p.weight[v] != 0) continue;
            Monomial pure(arity);
            pure[v] = d / p.weight[v];
            if (top.coeff(pure).is_zero()) continue;
            if (found >= 0)
                throw std::invalid_argument(
                    "generator " + p.generators[i].first +
                    " has no unique pure-power leading variable");
            found = static_cast<int>(v);
        }
        if (found < 0 || gen_of_var[static_cast<size_t>(found)] >= 0)
            throw std::invalid_argument("generators are not in bijection with variables");
        var_of_gen[i] = found;
        gen_of_var[static_cast<size_t>(found)] = static_cast<int>(i);
    }

    // X elements must be unit monomials in the unassigned variables.
    std::vector<Monomial> x_monomials;
    for (const QPoly& x : p.module_gens) {
        if (x.term_count() != 1 || !x.terms().begin()->second.is_one())
            throw std::invalid_argument("X elements must be unit monomials");
        x_monomials.push_back(x.terms().begin()->first);
    }

    LeadingMatrixReport rep;
    rep.degree = degree;
    rep.labels = basis_monomials_of_weight(p, degree);
    // Ascending by the order: row r may only hit columns <= r, i.e. the
    // matrix is lower triangular exactly when each product leads with its
    // own label.
    std::sort(rep.labels.begin(), rep.labels.end(),
              [&](const Monomial& a, const Monomial& b) { return order.compare(a, b) < 0; });

    std::vector<QPoly> tops;
    for (const Monomial& v : rep.labels) {
        // Split v into the generator exponents and the X part.
        Monomial xpart(arity);
        std::vector<long> exps(p.generators.size(), 0);
        for (size_t c = 0; c < arity; ++c) {
            if (gen_of_var[c] >= 0)
                exps[static_cast<size_t>(gen_of_var[c])] = v[c];
            else
                xpart[c] = v[c];
        }
        auto xit = std::find(x_monomials.begin(), x_monomials.end(), xpart);
        if (xit == x_monomials.end()) {
            rep.note = "no X element supplies " +
                       QPoly::from_monomial(p.ring(), xpart, Rational(1)).str() +
                       " for row " +
                       QPoly::from_monomial(p.ring(), v, Rational(1)).str();
            rep.triangular_unit_diagonal = false;
            return rep;
        }
        QPoly prod = product_poly(p, exps, static_cast<size_t>(xit - x_monomials.begin()));
        tops.push_back(prod.graded_component(degree, p.weight));
    }

    rep.matrix.assign(rep.labels.size(), {});
    rep.triangular_unit_diagonal = true;
    rep.identity = true;
    for (size_t r = 0; r < rep.labels.size(); ++r) {
        rep.matrix[r].reserve(rep.labels.size());
        for (size_t c = 0; c < rep.labels.size(); ++c) {
            Rational entry = tops[r].coeff(rep.labels[c]);
            rep.matrix[r].push_back(entry);
            if (c == r && !entry.is_one()) {
                rep.triangular_unit_diagonal = false;
                rep.identity = false;
                if (rep.note.empty())
                    rep.note = "diagonal entry != 1 at row " +
                               QPoly::from_monomial(p.ring(), rep.labels[r], Rational(1)).str();
            }
            if (c > r && !entry.is_zero()) {
                rep.triangular_unit_diagonal = false;
                rep.identity = false;
                if (rep.note.empty())
                    rep.note = "entry above the diagonal at row " +
                               QPoly::from_monomial(p.ring(), rep.labels[r], Rational(1)).str();
            }
            if (c < r && !entry.is_zero()) rep.identity = false;
        }
    }
    return rep;
}

} // namespace skein
