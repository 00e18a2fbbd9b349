#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "skeinalg/s4ring.hpp"
#include "skeinalg/sparse_poly.hpp"
#include "skeinalg/trace_poly.hpp"

namespace skein {

/// Which ambient ring a spanning problem lives in. h2 is free; s4 reduces to
/// the seven-generator basis.
enum class AmbientRing { h2, s4 };

/// Graded spanning problem: do the products g1^a1...gr^ar * x (x in X) span
/// every basis monomial of weight <= cutoff over Q?
struct SpanProblem {
    AmbientRing ring_kind = AmbientRing::h2;
    WeightVector weight;
    std::vector<std::pair<std::string, QPoly>> generators;
    std::vector<QPoly> module_gens;  // the set X
    long cutoff = 0;
    long generator_weight_cap = 0;  // bound on sum a_i * weight(g_i)

    const RingPtr& ring() const;
    QPoly reduce(const QPoly& e) const;
    bool basis_monomial(const Monomial& m) const;
    /// Canonical text rendering used for digests and determinism checks.
    std::string canonical_text() const;
};

/// One product referenced by a witness: coeff * g1^e1...gr^er * X[x_index].
struct WitnessTerm {
    Rational coeff;
    std::vector<long> gen_exponents;
    size_t x_index = 0;
};

/// coeff * (previously covered basis monomial), subtracted from the product
/// combination to isolate the target monomial.
struct CorrectionTerm {
    Rational coeff;
    Monomial monomial;
};

/// Expression record: monomial = sum(products) - sum(corrections).
struct WitnessExpr {
    std::vector<WitnessTerm> products;
    std::vector<CorrectionTerm> corrections;
    bool direct = false;  // true when found by the cross-degree solve
};

struct SpanCertificate {
    std::map<Monomial, WitnessExpr> covered;
    /// degree -> (achieved dimension, required dimension)
    std::map<long, std::pair<long, long>> frontier;
};

struct SpanFailure {
    Monomial monomial;  // least-weight uncovered basis monomial
    long degree = 0;
    long achievedDim = 0;
    long requiredDim = 0;
    /// True only when generator_weight_cap >= cutoff + max generator weight;
    /// otherwise the failure is merely inconclusive.
    bool refuted = false;
    std::map<long, std::pair<long, long>> frontier;
};

using SpanOutcome = std::variant<SpanCertificate, SpanFailure>;

/// Exact, deterministic certifier. Produces per-monomial witnesses extracted
/// from the per-degree row reduction; monomials reachable only through
/// cross-degree cancellation are witnessed by a direct combination instead.
SpanOutcome certify_spanning(const SpanProblem& p);

/// Rebuild and reduce the product g^exps * X[x_index].
QPoly product_poly(const SpanProblem& p, const std::vector<long>& exps,
                   size_t x_index);

/// Expand a witness: sum of its products minus its corrections, reduced.
/// Equals the covered monomial exactly for a sound certificate.
QPoly replay_witness(const SpanProblem& p, const WitnessExpr& e);

std::string witness_str(const SpanProblem& p, const WitnessExpr& e);

/// Basis monomials of the ambient ring with weight exactly d, ascending lex.
std::vector<Monomial> basis_monomials_of_weight(const SpanProblem& p, long d);

struct LeadingMatrixReport {
    long degree = 0;
    std::vector<Monomial> labels;  // row = column labels, ascending in the order
    std::vector<std::vector<Rational>> matrix;
    bool triangular_unit_diagonal = false;
    bool identity = false;
    std::string note;  // first defect found, when any
};

/// Matrix of top-degree coefficients of the diagonal generator products
/// against the basis monomials of the given degree, rows/columns sorted by
/// the supplied order. Requires generators in a weight-preserving bijection
/// with ring variables (up to variables supplied by X monomials).
LeadingMatrixReport leading_matrix_report(const SpanProblem& p, long degree,
                                          const MonomialOrder& order);

/// Total order used in the genus-3 leading-term analysis: lexicographic on
/// (k13*k23, k123, k23, k13, k12, k3, k2, k1).
const MonomialOrder& s4_leading_order();

} // namespace skein
