#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "skeinalg/dtcoord.hpp"
#include "skeinalg/jobfile.hpp"
#include "skeinalg/report.hpp"
#include "skeinalg/sampling.hpp"
#include "skeinalg/sliding.hpp"
#include "skeinalg/spanning.hpp"

using namespace skein;

namespace {

// Exit codes: 0 pass, 1 fail, 2 inconclusive, 3 input error.
enum { kPass = 0, kFail = 1, kInconclusive = 2, kInputError = 3 };

std::string join_longs(const std::vector<long>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

std::string monomial_str(const RingPtr& ring, const Monomial& m) {
    return QPoly::from_monomial(ring, m, Rational(1)).str();
}

void header(Report& rep, const std::string& command, const std::string& params,
            std::optional<uint64_t> seed) {
    rep.kv("command", command);
    std::string canonical = "command=" + command + ";" + params;
    if (seed) canonical += ";seed=" + std::to_string(*seed);
    rep.kv("input-digest", input_digest(canonical));
    if (seed) rep.kv("seed", static_cast<long>(*seed));
    append_conventions(rep);
    rep.blank();
}

int run_verify_inde(Report& rep, long bound) {
    header(rep, "verify-inde", "bound=" + std::to_string(bound), std::nullopt);
    InjectivityReport r = verify_mvector_injectivity(bound);
    rep.kv("bound", r.bound);
    rep.kv("rank", r.rank);
    rep.kv("kernel", "(" + join_longs(r.kernel) + ")");
    rep.kv("kernel-ok", r.kernel_ok);
    rep.kv("tuples-checked", r.tuples_checked);
    rep.kv("injective", r.injective);
    if (r.collision) {
        rep.kv("collision-a", monomial_str(S4Ring::instance().ring(), r.collision->first));
        rep.kv("collision-b", monomial_str(S4Ring::instance().ring(), r.collision->second));
    }
    rep.kv("verdict", r.pass() ? std::string("pass") : std::string("fail"));
    return r.pass() ? kPass : kFail;
}

int run_verify_degree_bounds(Report& rep, long max_exp, uint64_t seed, long pairs) {
    header(rep, "verify-degree-bounds",
           "max-exp=" + std::to_string(max_exp) + ";pairs=" + std::to_string(pairs),
           seed);
    const S4Ring& R = S4Ring::instance();
    DegreeBoundReport r = verify_product_degree_bounds(max_exp);
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : r.rows) {
        rows.push_back({std::to_string(row.k12), std::to_string(row.k13),
                        std::to_string(row.k23), std::to_string(row.bound),
                        std::to_string(row.max_sprime), row.degree_ok ? "yes" : "no",
                        row.top_ok ? "yes" : "no",
                        row.violation ? monomial_str(R.ring(), *row.violation) : "-"});
    }
    rep.table("reduced products s12^a s13^b s23^c",
              {"k12", "k13", "k23", "bound", "max-s'", "degree-ok", "top-ok", "violation"},
              rows);
    rep.blank();

    // s'-degree subadditivity on random reduced pairs.
    std::mt19937_64 rng(seed);
    bool subadd_ok = true;
    std::string counterexample;
    for (long i = 0; i < pairs; ++i) {
        QPoly u = random_s4_reduced(rng, 3, 2);
        QPoly v = random_s4_reduced(rng, 3, 2);
        long du = u.weighted_degree(R.sprime_weights());
        long dv = v.weighted_degree(R.sprime_weights());
        QPoly uv = R.normal_form(u * v);
        if (!uv.is_zero() && uv.weighted_degree(R.sprime_weights()) > du + dv) {
            subadd_ok = false;
            counterexample = "(" + u.str() + ") * (" + v.str() + ")";
            break;
        }
    }
    rep.kv("subadditivity-pairs", pairs);
    rep.kv("subadditivity-ok", subadd_ok);
    if (!subadd_ok) rep.kv("subadditivity-counterexample", counterexample);

    bool pass = r.pass && subadd_ok;
    rep.kv("verdict", pass ? std::string("pass") : std::string("fail"));
    return pass ? kPass : kFail;
}

int run_verify_oracle(Report& rep, uint64_t seed, long triples, long elements,
                      long words, long pairs, const std::string& word_text) {
    header(rep, "verify-oracle",
           "triples=" + std::to_string(triples) + ";elements=" + std::to_string(elements) +
               ";words=" + std::to_string(words) + ";pairs=" + std::to_string(pairs) +
               ";word=" + word_text,
           seed);
    const S4Ring& R = S4Ring::instance();
    std::mt19937_64 rng(seed);
    bool pass = true;

    // Relation vanishes on SL2 triples.
    QPoly rel = R.relation_element();
    long rel_bad = 0;
    for (long i = 0; i < triples; ++i) {
        Mat2 a = random_sl2(rng), b = random_sl2(rng), c = random_sl2(rng);
        if (!sl2_oracle_eval(rel, a, b, c).is_zero()) ++rel_bad;
    }
    rep.kv("relation-triples", triples);
    rep.kv("relation-violations", rel_bad);
    pass = pass && rel_bad == 0;

    // Normal form preserves the oracle value.
    long nf_bad = 0;
    for (long i = 0; i < elements; ++i) {
        QPoly e = random_s4_poly(rng, 4, 2);
        QPoly nf = R.normal_form(e);
        Mat2 a = random_sl2(rng), b = random_sl2(rng), c = random_sl2(rng);
        if (sl2_oracle_eval(e, a, b, c) != sl2_oracle_eval(nf, a, b, c)) ++nf_bad;
    }
    rep.kv("normal-form-elements", elements);
    rep.kv("normal-form-violations", nf_bad);
    pass = pass && nf_bad == 0;

    // Trace polynomials against direct SL2 evaluation, plus conjugation and
    // inversion invariance.
    TracePolynomials tp;
    long trace_bad = 0, conj_bad = 0, inv_bad = 0;
    for (long i = 0; i < words; ++i) {
        F2Word w = random_word(rng, 8);
        QPoly t = tp.trace(w);
        for (long j = 0; j < pairs; ++j) {
            Mat2 A = random_sl2(rng), B = random_sl2(rng);
            Rational expect = evaluate_word(w, A, B).trace();
            Rational xv = A.trace(), zv = B.trace(), yv = (A * B).trace();
            Rational got(0);
            for (const auto& [m, c] : t.terms()) {
                Rational v = c;
                for (long k = 0; k < m[0]; ++k) v *= xv;
                for (long k = 0; k < m[1]; ++k) v *= zv;
                for (long k = 0; k < m[2]; ++k) v *= yv;
                got += v;
            }
            if (got != expect) ++trace_bad;
        }
        F2Word u = random_word(rng, 3);
        std::vector<int> conj = u.letters();
        conj.insert(conj.end(), w.letters().begin(), w.letters().end());
        std::vector<int> ui = u.inverse().letters();
        conj.insert(conj.end(), ui.begin(), ui.end());
        if (tp.trace(F2Word(conj)) != t) ++conj_bad;
        if (tp.trace(w.inverse()) != t) ++inv_bad;
    }
    rep.kv("trace-words", words);
    rep.kv("trace-pairs", pairs);
    rep.kv("trace-violations", trace_bad);
    rep.kv("conjugation-violations", conj_bad);
    rep.kv("inversion-violations", inv_bad);
    pass = pass && trace_bad == 0 && conj_bad == 0 && inv_bad == 0;

    if (!word_text.empty()) {
        F2Word w = F2Word::parse(word_text);
        rep.blank();
        rep.kv("word", word_text);
        rep.kv("word-trace",
               tp.trace(w).str_ordered(MonomialOrder::graded_lex(xzy_weights())));
    }
    rep.kv("verdict", pass ? std::string("pass") : std::string("fail"));
    return pass ? kPass : kFail;
}

int run_certify(Report& rep, const std::string& job_path, std::optional<long> cutoff_override) {
    SpanJob job = load_span_job(job_path);
    if (cutoff_override) {
        job.problem.cutoff = *cutoff_override;
        if (job.problem.generator_weight_cap < *cutoff_override)
            job.problem.generator_weight_cap = *cutoff_override;
    }
    const SpanProblem& p = job.problem;
    header(rep, "certify", p.canonical_text(), std::nullopt);
    rep.kv("ring", p.ring_kind == AmbientRing::h2 ? "h2" : "s4");
    rep.kv("cutoff", p.cutoff);
    rep.kv("generator-weight-cap", p.generator_weight_cap);
    MonomialOrder grlex = MonomialOrder::graded_lex(p.weight);
    for (const auto& [name, g] : p.generators)
        rep.kv("generator " + name, g.str_ordered(grlex));
    for (size_t j = 0; j < p.module_gens.size(); ++j)
        rep.kv("X" + std::to_string(j), p.module_gens[j].str_ordered(grlex));
    if (p.generator_weight_cap < p.cutoff)
        rep.kv("warning", "generator weight cap below cutoff: failures are inconclusive");
    rep.blank();

    SpanOutcome outcome = certify_spanning(p);
    if (const SpanFailure* fail = std::get_if<SpanFailure>(&outcome)) {
        rep.kv("result", fail->refuted ? "failure" : "inconclusive");
        rep.kv("uncovered-monomial", monomial_str(p.ring(), fail->monomial));
        rep.kv("degree", fail->degree);
        rep.kv("achieved-dim", fail->achievedDim);
        rep.kv("required-dim", fail->requiredDim);
        rep.kv("verdict", fail->refuted ? std::string("fail") : std::string("inconclusive"));
        return fail->refuted ? kFail : kInconclusive;
    }

    const SpanCertificate& cert = std::get<SpanCertificate>(outcome);
    rep.kv("result", "certificate");
    rep.kv("covered-monomials", static_cast<long>(cert.covered.size()));
    std::vector<std::vector<std::string>> fr;
    for (const auto& [d, dims] : cert.frontier)
        fr.push_back({std::to_string(d), std::to_string(dims.first),
                      std::to_string(dims.second)});
    rep.table("per-degree dimensions", {"degree", "achieved", "required"}, fr);
    rep.blank();

    long replay_bad = 0;
    std::vector<std::vector<std::string>> wit;
    for (const auto& [m, expr] : cert.covered) {
        QPoly target = QPoly::from_monomial(p.ring(), m, Rational(1));
        if (replay_witness(p, expr) != target) ++replay_bad;
        wit.push_back({monomial_str(p.ring(), m), witness_str(p, expr)});
    }
    rep.table("witnesses", {"monomial", "expression"}, wit);
    rep.blank();
    rep.kv("witnesses-replayed", static_cast<long>(cert.covered.size()));
    rep.kv("replay-failures", replay_bad);

    bool pass = replay_bad == 0;
    if (job.leading_order) {
        rep.blank();
        rep.kv("leading-order", job.leading_order_name);
        std::vector<std::vector<std::string>> lm;
        for (long d = 0; d <= p.cutoff; ++d) {
            LeadingMatrixReport r = leading_matrix_report(p, d, *job.leading_order);
            lm.push_back({std::to_string(d), r.triangular_unit_diagonal ? "yes" : "no",
                          r.identity ? "yes" : "no", r.note.empty() ? "-" : r.note});
            pass = pass && r.triangular_unit_diagonal;
        }
        rep.table("leading matrices", {"degree", "triangular-unit-diagonal", "identity", "note"},
                  lm);
    }
    rep.kv("verdict", pass ? std::string("pass") : std::string("fail"));
    return pass ? kPass : kFail;
}

int run_validate_dt(Report& rep, const DTCoord& c) {
    header(rep, "validate-dt", dt_str(c), std::nullopt);
    rep.kv("dt", dt_str(c));
    std::string reason = validate_dt_reason(c);
    rep.kv("valid", reason.empty());
    if (!reason.empty()) rep.kv("reason", reason);
    rep.kv("verdict", reason.empty() ? std::string("pass") : std::string("fail"));
    return reason.empty() ? kPass : kFail;
}

int run_family(Report& rep, const std::string& case_name,
               const std::map<std::string, long>& params) {
    std::string param_text;
    for (const auto& [k, v] : params) param_text += k + "=" + std::to_string(v) + ";";
    header(rep, "family", "case=" + case_name + ";" + param_text, std::nullopt);
    DTCoord c = family_curve(parse_family_case(case_name), params);
    rep.kv("case", case_name);
    for (const auto& [k, v] : params) rep.kv("param " + k, v);
    rep.kv("dt", dt_str(c));
    rep.kv("valid", validate_dt(c));
    rep.kv("verdict", "pass");
    return kPass;
}

int run_sliding(Report& rep, long n) {
    header(rep, "sliding", "n=" + std::to_string(n), std::nullopt);
    SlideCoeff c = degree_reduction_coeff(n);
    rep.kv("n", n);
    rep.kv("denominator q^n - q^(-n-6)", slide_denominator(n).str());
    rep.kv("coefficient", c.value.str());
    rep.kv("kink-coefficient", kink_coeff().str());
    rep.kv("denominator-at-q1",
           slide_denominator(n).eval_q1().str() +
               " (division must happen in Q(q) before q = 1)");
    std::vector<std::vector<std::string>> chain;
    for (const SlideStep& s : reduction_chain(n))
        chain.push_back({std::to_string(s.from_degree), s.coeff.value.str(),
                         std::to_string(s.remainder_degree)});
    rep.table("degree reduction chain", {"degree", "coefficient", "remainder-degree"}, chain);
    rep.kv("verdict", "pass");
    return kPass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact skein-algebra verifiers and spanning certifier"};
    app.require_subcommand(1);
    app.fallthrough();  // --seed / --out may follow the subcommand name

    std::string out_path;
    app.add_option("--out", out_path, "write the report to FILE instead of stdout");
    uint64_t seed = 0;
    app.add_option("--seed", seed, "seed for the randomized suites");

    long bound = 4;
    CLI::App* inde = app.add_subcommand("verify-inde", "m-vector rank, kernel, injectivity");
    inde->add_option("--bound", bound, "max exponent for the injectivity scan");

    long max_exp = 3, subadd_pairs = 200;
    CLI::App* degb = app.add_subcommand("verify-degree-bounds",
                                        "degree bounds of reduced s12^a s13^b s23^c");
    degb->add_option("--max-exp", max_exp, "max exponent per factor");
    degb->add_option("--pairs", subadd_pairs, "random pairs for subadditivity");

    long triples = 1000, elements = 200, words = 50, pairs = 100;
    std::string word_text;
    CLI::App* oracle = app.add_subcommand("verify-oracle",
                                          "SL2 oracle checks for the relation and traces");
    oracle->add_option("--triples", triples, "SL2 triples for the relation check");
    oracle->add_option("--elements", elements, "random elements for normal-form check");
    oracle->add_option("--words", words, "random words for the trace check");
    oracle->add_option("--pairs", pairs, "SL2 pairs per word");
    oracle->add_option("--word", word_text, "also print the trace polynomial of WORD");

    std::string job_path;
    long cutoff_override = -1;
    CLI::App* certify = app.add_subcommand("certify", "graded spanning certificate");
    certify->add_option("--job", job_path, "spanning job file")->required();
    certify->add_option("--cutoff", cutoff_override, "override the job cutoff");

    std::string dt_text;
    long g_opt = 0;
    std::string n_text, t_text;
    CLI::App* vdt = app.add_subcommand("validate-dt", "validate a Dehn-Thurston tuple");
    vdt->add_option("--dt", dt_text, "tuple as g=2;n=1,1,2;t=1,1,0");
    vdt->add_option("--g", g_opt, "genus");
    vdt->add_option("--n", n_text, "comma-separated intersection numbers");
    vdt->add_option("--t", t_text, "comma-separated twists");

    std::string case_name;
    std::map<std::string, long> fam_params;
    long fp_n = 0, fp_m = 0, fp_t = 0, fp_t1 = 0, fp_t2 = 0, fp_n1 = 0, fp_n2 = 0,
         fp_sign = 1;
    CLI::App* family = app.add_subcommand("family", "gluing-curve family coordinates");
    family->add_option("--case", case_name, "1a | 1b | 1c | 2a | 2b")->required();
    auto* on = family->add_option("--n", fp_n);
    auto* om = family->add_option("--m", fp_m);
    auto* ot = family->add_option("--t", fp_t);
    auto* ot1 = family->add_option("--t1", fp_t1);
    auto* ot2 = family->add_option("--t2", fp_t2);
    auto* on1 = family->add_option("--n1", fp_n1);
    auto* on2 = family->add_option("--n2", fp_n2);
    auto* osign = family->add_option("--sign", fp_sign);

    long slide_n = 0;
    CLI::App* sliding = app.add_subcommand("sliding", "sphere-sliding coefficient");
    sliding->add_option("--n", slide_n, "even degree through the sphere")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kInputError;
    }

    Report rep;
    int code = kInputError;
    auto start = std::chrono::steady_clock::now();
    try {
        if (inde->parsed()) {
            code = run_verify_inde(rep, bound);
        } else if (degb->parsed()) {
            code = run_verify_degree_bounds(rep, max_exp, seed, subadd_pairs);
        } else if (oracle->parsed()) {
            code = run_verify_oracle(rep, seed, triples, elements, words, pairs, word_text);
        } else if (certify->parsed()) {
            code = run_certify(rep, job_path,
                               cutoff_override >= 0 ? std::optional<long>(cutoff_override)
                                                    : std::nullopt);
        } else if (vdt->parsed()) {
            DTCoord c;
            if (!dt_text.empty()) {
                c = parse_dt(dt_text);
            } else {
                c.genus = static_cast<int>(g_opt);
                std::istringstream ns(n_text), ts(t_text);
                std::string item;
                while (std::getline(ns, item, ',')) c.n.push_back(std::stol(item));
                while (std::getline(ts, item, ',')) c.t.push_back(std::stol(item));
            }
            code = run_validate_dt(rep, c);
        } else if (family->parsed()) {
            if (on->count()) fam_params["n"] = fp_n;
            if (om->count()) fam_params["m"] = fp_m;
            if (ot->count()) fam_params["t"] = fp_t;
            if (ot1->count()) fam_params["t1"] = fp_t1;
            if (ot2->count()) fam_params["t2"] = fp_t2;
            if (on1->count()) fam_params["n1"] = fp_n1;
            if (on2->count()) fam_params["n2"] = fp_n2;
            if (osign->count()) fam_params["sign"] = fp_sign;
            code = run_family(rep, case_name, fam_params);
        } else if (sliding->parsed()) {
            code = run_sliding(rep, slide_n);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    std::cerr << "elapsed: " << elapsed.count() << " ms\n";

    std::string text = rep.render();
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return kInputError;
        }
        f << text;
    }
    return code;
}
