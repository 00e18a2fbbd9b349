#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "skeinalg/monomial.hpp"

namespace skein {

/// Dehn-Thurston coordinate of a multicurve: intersection numbers n and
/// twists t against the fixed pants decomposition of the genus-2 or genus-3
/// surface. Both tuples have length 3*genus - 3.
struct DTCoord {
    int genus = 2;
    std::vector<long> n;
    std::vector<long> t;
};

/// True iff the tuple lengths are 3g-3, all n_i >= 0, t_i >= 0 wherever
/// n_i = 0, and each pair of pants of the fixed decomposition meets the
/// multicurve an even number of times. Supported for genus 2 and 3 (the
/// genera with a fixed decomposition here).
bool validate_dt(const DTCoord& c);

/// Optional failure clause for reporting; empty when valid.
std::string validate_dt_reason(const DTCoord& c);

/// Pants incidence table: per pair of pants, the three (0-based) curve
/// indices its boundary circles attach to, with multiplicity.
const std::vector<std::array<int, 3>>& pants_table(int genus);

std::string dt_str(const DTCoord& c);            // "g=2;n=1,1,2;t=1,1,0"
DTCoord parse_dt(const std::string& text);

/// Intersection counts of a curve with the six triangulation edges of the
/// four-holed sphere.
struct MVector {
    std::array<long, 6> m{};

    long sum() const {
        long s = 0;
        for (long v : m) s += v;
        return s;
    }
    friend MVector operator+(const MVector& a, const MVector& b) {
        MVector r;
        for (size_t i = 0; i < 6; ++i) r.m[i] = a.m[i] + b.m[i];
        return r;
    }
    MVector scaled(long k) const {
        MVector r;
        for (size_t i = 0; i < 6; ++i) r.m[i] = k * m[i];
        return r;
    }
    friend bool operator==(const MVector& a, const MVector& b) { return a.m == b.m; }
    friend bool operator<(const MVector& a, const MVector& b) { return a.m < b.m; }
    std::string str() const;
};

/// Edge-intersection vectors of the seven generators s1..s123, in generator
/// order.
const std::array<MVector, 7>& generator_mvectors();

/// Sum over generators of k_w * m(s_w) for an arity-7 exponent tuple.
MVector monomial_mvector(const Monomial& k);

struct InjectivityReport {
    int rank = 0;
    std::vector<long> kernel;  // primitive integer kernel vector, length 7
    bool kernel_ok = false;    // kernel == (1,1,1,-1,-1,-1,1)
    long bound = 0;
    long tuples_checked = 0;
    bool injective = false;
    std::optional<std::pair<Monomial, Monomial>> collision;
    bool pass() const { return rank == 6 && kernel_ok && injective; }
};

/// Exact rank/kernel of the seven m-vectors plus brute-force injectivity of
/// the monomial -> m-vector map over basis tuples with entries <= bound.
InjectivityReport verify_mvector_injectivity(long bound);

struct CurveDesc {
    std::vector<long> homology;  // class in Z^genus
    bool separating = false;
    bool trivial = false;
    int isotopy_id = 0;
};

struct AttachingSystemDesc {
    int genus = 0;
    std::vector<CurveDesc> curves;
};

struct ClosingReport {
    long distinct_classes = 0;  // pairwise non-isotopic, non-trivial, non-separating
    bool count_ok = false;      // equals the boundary genus
    std::vector<mpz_class> invariant_factors;
    bool spans = false;  // homology classes generate Z^genus
    bool pass() const { return count_ok && spans; }
};

/// True iff attaching 2-handles along the described curves closes the
/// boundary up to spheres: the count of pairwise non-isotopic, non-trivial,
/// non-separating curves equals the boundary genus, and the homology classes
/// generate Z^genus (all Smith invariant factors 1).
ClosingReport check_closing_hypothesis_report(const AttachingSystemDesc& a);
bool check_closing_hypothesis(const AttachingSystemDesc& a);

/// Smith normal form invariant factors (non-negative, divisibility chain) of
/// an integer matrix.
std::vector<mpz_class> smith_invariant_factors(std::vector<std::vector<mpz_class>> m);

enum class FamilyCase { c1a, c1b, c1c, c2a, c2b };

FamilyCase parse_family_case(const std::string& s);  // "1a".."2b"
std::string family_case_name(FamilyCase c);

/// Builds the gluing-curve coordinate of the named family after checking the
/// family's parameter constraints. Throws ParamConstraintViolated with the
/// violated clause, SchemaError for missing parameters.
DTCoord family_curve(FamilyCase c, const std::map<std::string, long>& params);

} // namespace skein
