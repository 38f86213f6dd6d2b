// btlab: workbench CLI for Brun-Titchmarsh constants, arithmetic exponent
// pairs, linear-sieve functions and the exponential/character-sum checks
// behind them. Data goes to stdout; diagnostics to stderr. Exit codes:
// 0 success, 1 a hard check failed, 2 usage error.

#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "btlab/bt_constants.hpp"
#include "btlab/characters.hpp"
#include "btlab/congruence.hpp"
#include "btlab/exponent_pairs.hpp"
#include "btlab/kloosterman.hpp"
#include "btlab/modarith.hpp"
#include "btlab/prime_counts.hpp"
#include "btlab/rng.hpp"
#include "btlab/sieve_functions.hpp"
#include "btlab/thresholds.hpp"

using json = nlohmann::json;
using namespace btlab;

namespace {

std::string fmt(double v, const char* f = "%.12g") {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

std::string fmt10(double v) { return fmt(v, "%.10g"); }

// Words may be written with repeat counts: "A2BA2B" == "AABAAB".
std::string parse_word(const std::string& in) {
    std::string out;
    char last = 0;
    for (size_t i = 0; i < in.size(); ++i) {
        char c = in[i];
        if (c == 'A' || c == 'B') {
            out += c;
            last = c;
        } else if (c >= '0' && c <= '9' && last) {
            size_t j = i;
            while (j < in.size() && in[j] >= '0' && in[j] <= '9') ++j;
            long k = std::stol(in.substr(i, j - i));
            if (k < 1) throw CLI::ValidationError("word", "repeat count must be >= 1");
            out.append((size_t)(k - 1), last);
            i = j - 1;
        } else {
            throw CLI::ValidationError("word", "expected letters A/B with optional repeat counts");
        }
    }
    return out;
}

struct Check {
    std::string name;
    double value;
    std::optional<double> threshold;
    std::optional<bool> pass;
};

struct Report {
    std::string command;
    std::optional<uint64_t> seed;
    json inputs = json::object();
    json results = json::object();
    std::vector<Check> checks;

    void check(const std::string& name, double value, double threshold, bool ok) {
        checks.push_back({name, value, threshold, ok});
    }
    void note(const std::string& name, double value) {
        checks.push_back({name, value, std::nullopt, std::nullopt});
    }

    // Prints JSON and returns the exit code (1 if any hard check failed).
    int emit() const {
        json r;
        r["command"] = command;
        if (seed) r["seed"] = *seed;
        r["inputs"] = inputs;
        r["results"] = results;
        r["checks"] = json::array();
        bool all_ok = true;
        for (const auto& c : checks) {
            json jc;
            jc["name"] = c.name;
            jc["value"] = c.value;
            if (c.threshold) jc["threshold"] = *c.threshold;
            if (c.pass) {
                jc["pass"] = *c.pass;
                all_ok = all_ok && *c.pass;
            } else {
                jc["status"] = "report-only";
            }
            r["checks"].push_back(std::move(jc));
        }
        std::cout << r.dump(2) << "\n";
        return all_ok ? 0 : 1;
    }
};

HypothesisSet parse_assumptions(const std::vector<std::string>& names) {
    HypothesisSet set;
    for (const auto& n : names) {
        auto h = hypothesis_from_name(n);
        if (!h) throw CLI::ValidationError("--assume", "unknown hypothesis '" + n + "'");
        set.insert(*h);
    }
    return set;
}

CurveParams make_params(const std::optional<std::string>& theta,
                        const std::optional<std::string>& delta,
                        const std::optional<std::string>& pair_word) {
    CurveParams p;
    if (theta) p.theta = Rational::parse(*theta);
    if (delta) p.delta = Rational::parse(*delta);
    if (pair_word) p.pair = eval_word(parse_word(*pair_word));
    return p;
}

// ---------------------------------------------------------------- exppairs

int cmd_exppairs(const std::string& word, unsigned akb, bool enumerate_all,
                 const std::string& objective, unsigned depth,
                 const std::optional<std::string>& varpi, const std::string& format) {
    if (!objective.empty()) {
        Objective obj;
        if (objective == "min-sum") obj = Objective::MinSum;
        else if (objective == "max-f") obj = Objective::MaxF;
        else if (objective == "max-g") obj = Objective::MaxG;
        else throw CLI::ValidationError("--optimize", "expected min-sum, max-f or max-g");
        std::optional<Rational> w;
        if (varpi) w = Rational::parse(*varpi);
        auto r = optimize(obj, w, depth);
        if (format == "json") {
            json j;
            j["command"] = "exppairs";
            j["inputs"] = {{"objective", objective}, {"depth", depth}};
            if (varpi) j["inputs"]["varpi"] = *varpi;
            j["results"] = {{"word", r.word.empty() ? "(empty)" : r.word},
                            {"kappa", r.pair.kappa.str()},
                            {"lambda", r.pair.lambda.str()},
                            {"nu", r.pair.nu.str()},
                            {"value", r.value.str()},
                            {"value_decimal", r.value.to_double()}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "word " << (r.word.empty() ? "(empty)" : r.word)
                      << "\npair " << r.pair.kappa << " " << r.pair.lambda << " " << r.pair.nu
                      << "\nvalue " << r.value << " = " << fmt(r.value.to_double()) << "\n";
        }
        return 0;
    }
    if (enumerate_all) {
        auto pairs = enumerate_pairs(depth);
        if (format == "json") {
            json arr = json::array();
            for (const auto& [w, p] : pairs)
                arr.push_back({{"word", w}, {"kappa", p.kappa.str()},
                               {"lambda", p.lambda.str()}, {"nu", p.nu.str()}});
            json j;
            j["command"] = "exppairs";
            j["inputs"] = {{"depth", depth}};
            j["results"] = {{"count", pairs.size()}, {"pairs", std::move(arr)}};
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "word,kappa,lambda,nu\n";
            for (const auto& [w, p] : pairs)
                std::cout << w << "," << p.kappa << "," << p.lambda << "," << p.nu << "\n";
        }
        return 0;
    }
    ExponentPair p = akb ? akb_formula(akb) : eval_word(parse_word(word));
    std::cout << p.kappa << " " << p.lambda << " " << p.nu << "\n";
    return 0;
}

// --------------------------------------------------------------- sieve-fns

int cmd_sieve_fns(double smax, double step, const std::vector<double>& at) {
    SieveTable t(smax, step);
    if (at.empty()) {
        t.write_csv(std::cout);
    } else {
        std::cout << "s,F,f\n";
        for (double s : at)
            std::cout << fmt(s) << "," << fmt(t.F_of(s)) << "," << fmt(t.f_of(s)) << "\n";
    }
    return 0;
}

// --------------------------------------------------------------- constants

int cmd_constants(const std::optional<std::string>& varpi, bool list_only, bool catalog,
                  const std::vector<std::string>& assume,
                  const std::optional<std::string>& theta,
                  const std::optional<std::string>& delta,
                  const std::optional<std::string>& pair_word,
                  unsigned depth, const std::string& format) {
    if (catalog) {
        std::cout << catalog_json() << "\n";
        return 0;
    }
    HypothesisSet set = parse_assumptions(assume);
    if (list_only) {
        for (const auto& id : list_curves(set)) std::cout << id << "\n";
        return 0;
    }
    if (!varpi) throw CLI::ValidationError("--varpi", "required unless --list/--catalog");
    Rational w = Rational::parse(*varpi);
    EnvelopeOptions opts;
    opts.params = make_params(theta, delta, pair_word);
    opts.pair_search_depth = depth;
    Envelope env = envelope(w, set, opts);
    if (format == "json") {
        json j;
        j["command"] = "constants";
        j["inputs"] = {{"varpi", w.str()}, {"depth", depth}};
        json adm = json::array();
        for (const auto& [id, v] : env.admissible)
            adm.push_back({{"curve", id}, {"value", v.str()},
                           {"value_decimal", v.to_double()}});
        j["results"] = {{"admissible", std::move(adm)},
                        {"best_value", env.best_value.str()},
                        {"best_value_decimal", env.best_value.to_double()},
                        {"best_curves", env.best_ids}};
        if (!env.best_pair_word.empty()) j["results"]["best_pair_word"] = env.best_pair_word;
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "varpi,curve_id,value\n";
        for (const auto& [id, v] : env.admissible)
            std::cout << w << "," << id << "," << fmt10(v.to_double()) << "\n";
        std::cout << w << ",ENVELOPE," << fmt10(env.best_value.to_double()) << "\n";
    } else {
        std::cout << "C(" << w << ") candidates:\n";
        for (const auto& [id, v] : env.admissible)
            std::cout << "  " << id << "  " << fmt10(v.to_double()) << "  (" << v << ")\n";
        std::cout << "best: " << fmt10(env.best_value.to_double()) << " (" << env.best_value << ") via";
        for (const auto& id : env.best_ids) std::cout << " " << id;
        if (!env.best_pair_word.empty())
            std::cout << " [pair word " << env.best_pair_word << "]";
        std::cout << "\n";
    }
    return 0;
}

// ------------------------------------------------------------------ table1

int cmd_table1(const std::string& format) {
    auto rows = table1();
    if (format == "json") {
        json arr = json::array();
        for (const auto& r : rows)
            arr.push_back({{"varpi", r.varpi.str()},
                           {"ours", r.ours.decimal_str(4)},
                           {"iwaniec", r.iwaniec.decimal_str(4)},
                           {"improvement_percent",
                            (r.improvement * Rational(100)).trunc_decimal(1).decimal_str(1)},
                           {"improvement_exact", r.improvement.str()}});
        json j;
        j["command"] = "table1";
        j["results"] = {{"rows", std::move(arr)}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "varpi,ours,iwaniec,improvement\n";
        for (const auto& r : rows)
            std::cout << r.varpi << "," << r.ours.decimal_str(4) << ","
                      << r.iwaniec.decimal_str(4) << ","
                      << (r.improvement * Rational(100)).trunc_decimal(1).decimal_str(1) << "%\n";
    }
    return 0;
}

// ----------------------------------------------------------------- figures

int cmd_figures(const std::string& lo, const std::string& hi, const std::string& step,
                const std::vector<std::string>& assume,
                const std::optional<std::string>& theta,
                const std::optional<std::string>& delta, unsigned depth) {
    EnvelopeOptions opts;
    opts.params = make_params(theta, delta, std::nullopt);
    opts.pair_search_depth = depth;
    auto rows = figure_data(Rational::parse(lo), Rational::parse(hi),
                            Rational::parse(step), parse_assumptions(assume), opts);
    std::cout << "varpi,curve_id,value\n";
    for (const auto& r : rows)
        std::cout << fmt10(r.varpi.to_double()) << "," << r.curve_id << ","
                  << fmt10(r.value.to_double()) << "\n";
    return 0;
}

// -------------------------------------------------------------------- sums

int sums_kloosterman(int64_t m, int64_t n, uint64_t q) {
    Report rep;
    rep.command = "sums kloosterman";
    rep.inputs = {{"m", m}, {"n", n}, {"q", q}};
    cplx s = kloosterman_sum(m, n, q);
    rep.results = {{"re", s.real()}, {"im", s.imag()}, {"abs", std::abs(s)}};
    rep.check("weil", std::abs(s), weil_bound(m, n, q), std::abs(s) <= weil_bound(m, n, q));
    rep.check("imag_residue", std::abs(s.imag()), 1e-9, std::abs(s.imag()) < 1e-9);
    return rep.emit();
}

int sums_kl_table(uint64_t p, unsigned samples, uint64_t seed) {
    Report rep;
    rep.command = "sums kl-table";
    rep.seed = seed;
    rep.inputs = {{"p", p}, {"samples", samples}};
    auto t = kloosterman_table(p);
    double maxv = 0;
    for (uint64_t x = 1; x < p; ++x) maxv = std::max(maxv, std::abs(t.values[x]));
    Rng rng(seed);
    double oracle_err = 0;
    for (unsigned i = 0; i < samples; ++i) {
        uint64_t x = rng.below(p);
        double direct = kloosterman_sum((int64_t)x, 1, p).real() / std::sqrt((double)p);
        oracle_err = std::max(oracle_err, std::abs(direct - t.at(x)));
    }
    rep.results = {{"max_abs", maxv}, {"kl_zero", t.at(0)}};
    rep.check("weil_normalized", maxv, 2.0, maxv <= 2.0);
    rep.check("direct_oracle_agreement", oracle_err, 1e-9, oracle_err < 1e-9);
    rep.check("imag_residue", t.max_imag_residue, 1e-9, t.max_imag_residue < 1e-9);
    return rep.emit();
}

int sums_vp(uint64_t p, uint64_t a, uint64_t b) {
    Report rep;
    rep.command = "sums vp";
    rep.inputs = {{"p", p}, {"a", a}, {"b", b}};
    auto t = kloosterman_table(p);
    auto V = vp_transform(t, a, b);
    double maxv = 0, lhs = 0, rhs = 0;
    for (const auto& v : V) { maxv = std::max(maxv, std::abs(v)); lhs += std::norm(v); }
    for (uint64_t x = 0; x < p; ++x) {
        double r = t.values[mulmod(a, x, p)] * t.values[mulmod(b, x, p)];
        rhs += r * r;
    }
    rep.results = {{"max_abs", maxv}, {"v_at_zero", std::abs(V[0])},
                   {"sqrt_p", std::sqrt((double)p)}};
    rep.check("plancherel", std::abs(lhs - rhs), 1e-8, std::abs(lhs - rhs) < 1e-8);
    if (a % p == b % p)
        rep.check("diagonal_sqrtp_growth", std::abs(V[0]) / std::sqrt((double)p),
                  thresholds::kVpDiagonalMinRatio,
                  std::abs(V[0]) >= thresholds::kVpDiagonalMinRatio * std::sqrt((double)p));
    else
        rep.check("offdiagonal_bounded", maxv, thresholds::kVpOffDiagonalMax,
                  maxv < thresholds::kVpOffDiagonalMax);
    return rep.emit();
}

int sums_vp_scan(uint64_t pmax) {
    Report rep;
    rep.command = "sums vp-scan";
    rep.inputs = {{"pmax", pmax}};
    double global = 0;
    json per = json::array();
    for (uint64_t p = 3; p <= pmax; ++p) {
        if (!is_prime_u64(p)) continue;
        auto t = kloosterman_table(p);
        double mx = 0;
        for (uint64_t a = 1; a < p; ++a)
            for (uint64_t b = 1; b < p; ++b) {
                if (a == b) continue;
                auto V = vp_transform(t, a, b);
                for (const auto& v : V) mx = std::max(mx, std::abs(v));
            }
        per.push_back({{"p", p}, {"max_offdiag", mx}});
        global = std::max(global, mx);
    }
    rep.results = {{"per_prime", std::move(per)}, {"max_offdiag", global}};
    rep.check("offdiagonal_bounded", global, thresholds::kVpOffDiagonalMax,
              global < thresholds::kVpOffDiagonalMax);
    return rep.emit();
}

int sums_moments(uint64_t p, unsigned nu, unsigned subset_size, unsigned reps, uint64_t seed) {
    Report rep;
    rep.command = "sums moments";
    rep.seed = seed;
    rep.inputs = {{"p", p}, {"nu", nu}, {"subset_size", subset_size}, {"reps", reps}};
    auto t = kloosterman_table(p);
    Rng rng(seed);
    double worst = 0;
    for (unsigned r = 0; r < reps; ++r) {
        std::vector<uint32_t> subset;
        std::vector<double> beta;
        while (subset.size() < subset_size) {
            uint32_t n = (uint32_t)rng.below(p);
            if (n == 0) continue;
            subset.push_back(n);
            beta.push_back(rng.coin() ? 1.0 : -1.0);
        }
        worst = std::max(worst, kl_moment(t, nu, subset, beta).ratio);
    }
    rep.results = {{"max_ratio", worst}};
    double thr = nu == 1 ? thresholds::kKlMomentNu1Ratio : thresholds::kKlMomentNu2Ratio;
    rep.check("moment_ratio", worst, thr, worst <= thr);
    return rep.emit();
}

int sums_large_sieve(unsigned cases, uint64_t seed) {
    Report rep;
    rep.command = "sums large-sieve";
    rep.seed = seed;
    rep.inputs = {{"cases", cases}};
    Rng rng(seed);
    bool all = true;
    double worst_gap = 0, worst_ident = 0;
    for (unsigned i = 0; i < cases; ++i) {
        uint64_t q = 1 + rng.below(100);
        size_t N = 1 + rng.below(300);
        int64_t first = rng.range(-50, 1000);
        std::vector<cplx> alpha(N);
        for (auto& a : alpha) a = cplx(2 * rng.real() - 1, 2 * rng.real() - 1);
        auto r = large_sieve_check(q, first, alpha);
        all = all && r.pass;
        worst_gap = std::max(worst_gap, r.lhs / r.rhs);
        double scale = std::max(1.0, std::abs(r.lhs));
        worst_ident = std::max(worst_ident, std::abs(r.lhs - r.lhs_identity) / scale);
    }
    rep.results = {{"max_lhs_over_rhs", worst_gap}};
    rep.check("constant_one", worst_gap, 1.0, all);
    rep.check("identity_agreement", worst_ident, 1e-9, worst_ident < 1e-9);
    return rep.emit();
}

int sums_char_sum(uint64_t q, std::optional<uint64_t> chi_index, int64_t first, uint64_t length) {
    Report rep;
    rep.command = "sums char-sum";
    rep.inputs = {{"q", q}, {"first", first}, {"length", length}};
    CharacterGroup g(q);
    uint64_t idx;
    if (chi_index) {
        idx = *chi_index;
    } else {
        auto quad = g.quadratic_character();
        if (!quad) throw std::domain_error("no quadratic character mod q");
        idx = *quad;
    }
    rep.inputs["chi_index"] = idx;
    auto d = incomplete_char_sum(g, idx, first, length);
    rep.results = {{"re", d.sum.real()}, {"im", d.sum.imag()}, {"abs", std::abs(d.sum)},
                   {"burgess_r1", d.burgess_ratio[0]},
                   {"burgess_r2", d.burgess_ratio[1]},
                   {"burgess_r3", d.burgess_ratio[2]},
                   {"character_order", g.character_order(idx)}};
    double pv = polya_vinogradov_bound(q);
    rep.check("polya_vinogradov", std::abs(d.sum), pv, std::abs(d.sum) <= pv);
    return rep.emit();
}

int sums_inc_kloosterman(int64_t h, uint64_t q, int64_t first, uint64_t length,
                         const std::optional<std::string>& pair_word) {
    Report rep;
    rep.command = "sums inc-kloosterman";
    rep.inputs = {{"h", h}, {"q", q}, {"first", first}, {"length", length}};
    std::optional<ExponentPair> pair;
    if (pair_word) {
        pair = eval_word(parse_word(*pair_word));
        rep.inputs["pair"] = parse_word(*pair_word);
    }
    auto r = incomplete_kloosterman(h, q, first, length, pair);
    rep.results = {{"re", r.sum.real()}, {"im", r.sum.imag()}, {"abs", std::abs(r.sum)},
                   {"rstar_ratio", r.rstar_ratio}, {"smooth_ratio", r.smooth_ratio}};
    double cb = completion_bound(q);
    rep.check("completion_bound", std::abs(r.sum), cb, std::abs(r.sum) <= cb);
    rep.note("rstar_ratio", r.rstar_ratio);
    return rep.emit();
}

int sums_rstar_scan(uint64_t q, unsigned cases, uint64_t seed,
                    const std::optional<std::string>& pair_word) {
    std::optional<ExponentPair> pair = pair_word
        ? std::optional<ExponentPair>(eval_word(parse_word(*pair_word)))
        : std::optional<ExponentPair>(eval_word("AB"));
    Rng rng(seed);
    std::cout << "q,h,interval_start,interval_len,abs_sum,rstar_ratio,smooth_ratio\n";
    double worst = 0;
    for (unsigned i = 0; i < cases; ++i) {
        int64_t h = rng.range(-(int64_t)q, (int64_t)q);
        if (h == 0) h = 1;
        uint64_t len = 2 + rng.below(q - 2);
        int64_t first = (int64_t)rng.below(q);
        auto r = incomplete_kloosterman(h, q, first, len, pair);
        worst = std::max(worst, r.rstar_ratio);
        std::cout << q << "," << h << "," << first << "," << len << ","
                  << fmt(std::abs(r.sum)) << "," << fmt(r.rstar_ratio) << ","
                  << fmt(r.smooth_ratio) << "\n";
    }
    std::cerr << "max rstar_ratio " << fmt(worst) << " (threshold "
              << thresholds::kRStarRatioMax << ")\n";
    return worst <= thresholds::kRStarRatioMax ? 0 : 1;
}

int sums_congruence(uint64_t q, uint64_t M, uint64_t N) {
    Report rep;
    rep.command = "sums congruence";
    rep.inputs = {{"q", q}, {"M", M}, {"N", N}};
    ProductBump F((double)N);
    std::vector<double> alpha(M, 1.0), beta(M, 1.0);
    auto c = congruence_count(q, M, N, alpha, beta, F);
    rep.results = {{"r_exact", c.r_exact}, {"main_term", c.main_term},
                   {"error", c.error}, {"rel_error", c.rel_error()}};
    // The frozen ceiling was calibrated at q=53, M=20, N in {200, 400};
    // other configurations are reported without a verdict.
    if (q == 53 && M == 20 && N >= 200)
        rep.check("relative_error", c.rel_error(), thresholds::kCongruenceRelError,
                  c.rel_error() <= thresholds::kCongruenceRelError);
    else
        rep.note("relative_error", c.rel_error());
    return rep.emit();
}

int sums_weil_sweep(unsigned prime_cases, unsigned composite_cases, uint64_t seed) {
    Report rep;
    rep.command = "sums weil-sweep";
    rep.seed = seed;
    rep.inputs = {{"prime_cases", prime_cases}, {"composite_cases", composite_cases}};
    Rng rng(seed);
    auto primes = primes_up_to(2003);
    bool all = true;
    double worst_usage = 0;
    for (unsigned i = 0; i < prime_cases; ++i) {
        uint64_t p = primes[2 + rng.below(primes.size() - 2)];
        int64_t m = rng.range(1, (int64_t)p - 1), n = rng.range(1, (int64_t)p - 1);
        double s = std::abs(kloosterman_sum(m, n, p));
        double bound = 2.0 * std::sqrt((double)p);
        all = all && s <= bound;
        worst_usage = std::max(worst_usage, s / bound);
    }
    unsigned done = 0;
    while (done < composite_cases) {
        uint64_t q = 4 + rng.below(4997);
        auto fs = factorize(q);
        bool squarefree = true;
        for (auto [p, e] : fs) squarefree = squarefree && e == 1;
        if (!squarefree || fs.size() < 2) continue;
        ++done;
        int64_t m = rng.range(0, (int64_t)q - 1), n = rng.range(0, (int64_t)q - 1);
        double s = std::abs(kloosterman_sum(m, n, q));
        all = all && s <= weil_bound(m, n, q) + 1e-6;
    }
    bool ram_ok = true;
    for (unsigned i = 0; i < 100; ++i) {
        uint64_t q = 1 + rng.below(3000);
        int64_t m = rng.range(0, 3000);
        uint64_t mm = (uint64_t)(((m % (int64_t)q) + (int64_t)q) % (int64_t)q);
        double g = (double)gcd_u64(mm == 0 ? q : mm, q);
        ram_ok = ram_ok && std::abs(ramanujan_sum(m, q)) <= g + 1e-9;
    }
    rep.results = {{"worst_prime_usage", worst_usage}};
    rep.check("weil_all_cases", worst_usage, 1.0, all);
    rep.check("ramanujan_gcd_bound", ram_ok ? 0.0 : 1.0, 0.5, ram_ok);
    return rep.emit();
}

// --------------------------------------------------------------- verify-bt

int cmd_verify_bt(uint64_t x, std::optional<uint64_t> q,
                  std::optional<uint64_t> qlo, std::optional<uint64_t> qhi,
                  const std::optional<std::string>& curve_id,
                  const std::optional<std::string>& theta,
                  const std::optional<std::string>& delta,
                  const std::optional<std::string>& pair_word,
                  bool per_residue) {
    if (qlo && qhi) {
        auto checks = mv_grid(x, *qlo, *qhi);
        std::cout << "x,q,max_count,mv_bound,pass\n";
        bool all = true;
        for (uint64_t i = 0; i < checks.size(); ++i) {
            const auto& c = checks[i];
            all = all && c.pass;
            std::cout << x << "," << (*qlo + i) << "," << c.max_count << ","
                      << fmt(c.bound) << "," << (c.pass ? 1 : 0) << "\n";
        }
        if (!all) std::cerr << "Montgomery-Vaughan bound violated: bug\n";
        return all ? 0 : 1;
    }
    if (!q) throw CLI::ValidationError("--q", "required unless --qlo/--qhi given");
    auto rc = pi_in_ap(x, *q);
    if (per_residue) {
        std::cout << "x,q,a,count\n";
        for (const auto& [a, c] : rc.counts)
            std::cout << x << "," << *q << "," << a << "," << c << "\n";
        return 0;
    }
    auto mv = mv_check(rc);
    std::cout << "x,q,max_a,max_count,mv_bound,ratio";
    std::optional<BTEmpirical> bt;
    if (curve_id) {
        const BTCurve* c = find_curve(*curve_id);
        if (!c) throw CLI::ValidationError("--curve", "unknown curve id '" + *curve_id + "'");
        bt = bt_empirical(rc, *c, make_params(theta, delta, pair_word));
        std::cout << ",varpi,c_value";
    }
    std::cout << "\n";
    double ratio = (double)mv.max_count * (double)rc.phi_q * std::log((double)x) / (double)x;
    std::cout << x << "," << *q << "," << rc.argmax() << "," << mv.max_count << ","
              << fmt(mv.bound) << "," << fmt(ratio);
    if (bt) {
        std::cout << "," << fmt(bt->varpi) << ",";
        std::cout << (bt->c_value ? fmt(*bt->c_value) : std::string("undefined"));
    }
    std::cout << "\n";
    return mv.pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"analytic workbench: Brun-Titchmarsh constants, exponent pairs, "
                 "sieve functions, exponential-sum experiments"};
    app.require_subcommand(1);
    uint64_t seed = 1;
    app.add_option("--seed", seed, "seed for randomized sweeps")->capture_default_str();

    // exppairs
    auto* ep = app.add_subcommand("exppairs", "exact exponent-pair calculus");
    std::string ep_word;
    unsigned ep_akb = 0;
    bool ep_enum = false;
    std::string ep_opt;
    unsigned ep_depth = 16;
    std::optional<std::string> ep_varpi;
    std::string ep_format = "table";
    ep->add_option("--word", ep_word, "evaluate a word, e.g. AB or A2BA2B");
    ep->add_option("--akb", ep_akb, "closed-form A^kB triple (k >= 2)");
    ep->add_flag("--enumerate", ep_enum, "list all distinct pairs up to --depth");
    ep->add_option("--optimize", ep_opt, "min-sum | max-f | max-g");
    ep->add_option("--depth", ep_depth, "maximum word length")->capture_default_str();
    ep->add_option("--varpi", ep_varpi, "varpi for max-g (rational or decimal)");
    ep->add_option("--format", ep_format, "table | csv | json")->capture_default_str();

    // sieve-fns
    auto* sf = app.add_subcommand("sieve-fns", "tabulate the linear-sieve functions F, f");
    double sf_smax = 10.0, sf_step = 0.001;
    std::vector<double> sf_at;
    sf->add_option("--smax", sf_smax, "right end of the table")->capture_default_str();
    sf->add_option("--step", sf_step, "grid step (<= 0.01)")->capture_default_str();
    sf->add_option("--at", sf_at, "evaluate at these s instead of dumping the table");

    // constants
    auto* ct = app.add_subcommand("constants", "evaluate C(varpi) curves and envelopes");
    std::optional<std::string> ct_varpi, ct_theta, ct_delta, ct_pair;
    std::vector<std::string> ct_assume;
    bool ct_list = false, ct_catalog = false;
    unsigned ct_depth = 16;
    std::string ct_format = "table";
    ct->add_option("--varpi", ct_varpi, "evaluation point (rational or decimal)");
    ct->add_option("--assume", ct_assume,
                   "hypothesis flags: prime, smooth, rp, moment, rstar (repeatable)");
    ct->add_option("--theta", ct_theta, "Ramanujan-Petersson exponent for parametric curves");
    ct->add_option("--delta", ct_delta, "moment-conjecture parameter in [0, 16/45)");
    ct->add_option("--pair", ct_pair, "explicit exponent-pair word");
    ct->add_option("--depth", ct_depth, "exponent-pair search depth")->capture_default_str();
    ct->add_flag("--list", ct_list, "list curve ids applicable under --assume");
    ct->add_flag("--catalog", ct_catalog, "dump the full curve catalog as JSON");
    ct->add_option("--format", ct_format, "table | csv | json")->capture_default_str();

    // table1
    auto* t1 = app.add_subcommand("table1", "prime-modulus improvement table");
    std::string t1_format = "csv";
    t1->add_option("--format", t1_format, "csv | json")->capture_default_str();

    // figures
    auto* fg = app.add_subcommand("figures", "C(varpi) curve/envelope grid as CSV");
    std::string fg_lo = "1/100", fg_hi = "99/100", fg_step = "1/100";
    std::vector<std::string> fg_assume;
    std::optional<std::string> fg_theta, fg_delta;
    unsigned fg_depth = 16;
    fg->add_option("--min", fg_lo, "grid start")->capture_default_str();
    fg->add_option("--max", fg_hi, "grid end")->capture_default_str();
    fg->add_option("--step", fg_step, "grid step")->capture_default_str();
    fg->add_option("--assume", fg_assume, "hypothesis flags (repeatable)");
    fg->add_option("--theta", fg_theta, "Ramanujan-Petersson exponent");
    fg->add_option("--delta", fg_delta, "moment-conjecture parameter");
    fg->add_option("--depth", fg_depth, "exponent-pair search depth")->capture_default_str();

    // sums + subcommands
    auto* sm = app.add_subcommand("sums", "exponential/character-sum experiments");
    sm->require_subcommand(1);

    auto* sk = sm->add_subcommand("kloosterman", "single S(m,n;q) with Weil check");
    int64_t sk_m = 1, sk_n = 1;
    uint64_t sk_q = 5;
    sk->add_option("--m", sk_m)->capture_default_str();
    sk->add_option("--n", sk_n)->capture_default_str();
    sk->add_option("--q", sk_q)->capture_default_str();

    auto* st = sm->add_subcommand("kl-table", "bulk normalized table vs direct oracle");
    uint64_t st_p = 1009;
    unsigned st_samples = 10;
    st->add_option("--p", st_p)->capture_default_str();
    st->add_option("--samples", st_samples)->capture_default_str();

    auto* sv = sm->add_subcommand("vp", "V_p(y;a,b) transform diagnostics");
    uint64_t sv_p = 101, sv_a = 1, sv_b = 2;
    sv->add_option("--p", sv_p)->capture_default_str();
    sv->add_option("--a", sv_a)->capture_default_str();
    sv->add_option("--b", sv_b)->capture_default_str();

    auto* svs = sm->add_subcommand("vp-scan", "full off-diagonal |V_p| scan up to pmax");
    uint64_t svs_pmax = 101;
    svs->add_option("--pmax", svs_pmax)->capture_default_str();

    auto* smo = sm->add_subcommand("moments", "2nu-th moments of Kloosterman averages");
    uint64_t smo_p = 499;
    unsigned smo_nu = 2, smo_size = 20, smo_reps = 40;
    smo->add_option("--p", smo_p)->capture_default_str();
    smo->add_option("--nu", smo_nu)->capture_default_str();
    smo->add_option("--size", smo_size)->capture_default_str();
    smo->add_option("--reps", smo_reps)->capture_default_str();

    auto* sls = sm->add_subcommand("large-sieve", "multiplicative large sieve, constant 1");
    unsigned sls_cases = 200;
    sls->add_option("--cases", sls_cases)->capture_default_str();

    auto* scs = sm->add_subcommand("char-sum", "incomplete character sum diagnostics");
    uint64_t scs_q = 1009;
    std::optional<uint64_t> scs_chi;
    int64_t scs_first = 1;
    uint64_t scs_len = 100;
    scs->add_option("--q", scs_q)->capture_default_str();
    scs->add_option("--chi", scs_chi, "character index (default: quadratic)");
    scs->add_option("--start", scs_first)->capture_default_str();
    scs->add_option("--len", scs_len)->capture_default_str();

    auto* sik = sm->add_subcommand("inc-kloosterman", "incomplete Kloosterman sum");
    sik->set_help_flag("--help", "print help");
    int64_t sik_h = 1;
    uint64_t sik_q = 30030;
    int64_t sik_first = 1;
    uint64_t sik_len = 3000;
    std::optional<std::string> sik_pair;
    sik->add_option("--h", sik_h)->capture_default_str();
    sik->add_option("--q", sik_q)->capture_default_str();
    sik->add_option("--start", sik_first)->capture_default_str();
    sik->add_option("--len", sik_len)->capture_default_str();
    sik->add_option("--pair", sik_pair, "exponent-pair word for the smooth ratio");

    auto* srs = sm->add_subcommand("rstar-scan", "random-interval ratio scan as CSV");
    uint64_t srs_q = 30030;
    unsigned srs_cases = 500;
    std::optional<std::string> srs_pair;
    srs->add_option("--q", srs_q)->capture_default_str();
    srs->add_option("--cases", srs_cases)->capture_default_str();
    srs->add_option("--pair", srs_pair, "exponent-pair word (default AB)");

    auto* scc = sm->add_subcommand("congruence", "four-fold congruence count vs main term");
    uint64_t scc_q = 53, scc_M = 20, scc_N = 200;
    scc->add_option("--q", scc_q)->capture_default_str();
    scc->add_option("--M", scc_M)->capture_default_str();
    scc->add_option("--N", scc_N)->capture_default_str();

    auto* sw = sm->add_subcommand("weil-sweep", "random Weil/Ramanujan bound checks");
    unsigned sw_prime = 300, sw_comp = 100;
    sw->add_option("--prime-cases", sw_prime)->capture_default_str();
    sw->add_option("--composite-cases", sw_comp)->capture_default_str();

    // verify-bt
    auto* vb = app.add_subcommand("verify-bt", "pi(x;q,a), Montgomery-Vaughan, empirical ratios");
    uint64_t vb_x = 1000000;
    std::optional<uint64_t> vb_q, vb_qlo, vb_qhi;
    std::optional<std::string> vb_curve, vb_theta, vb_delta, vb_pair;
    bool vb_residues = false;
    vb->add_option("--x", vb_x)->capture_default_str();
    vb->add_option("--q", vb_q, "single modulus");
    vb->add_option("--qlo", vb_qlo, "modulus range start (grid mode)");
    vb->add_option("--qhi", vb_qhi, "modulus range end (grid mode)");
    vb->add_option("--curve", vb_curve, "catalog curve id for the C(varpi) column");
    vb->add_option("--theta", vb_theta);
    vb->add_option("--delta", vb_delta);
    vb->add_option("--pair", vb_pair);
    vb->add_flag("--per-residue", vb_residues, "emit x,q,a,count rows");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {   // --help
            std::cout << app.help();
            return 0;
        }
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (ep->parsed())
            return cmd_exppairs(ep_word, ep_akb, ep_enum, ep_opt, ep_depth, ep_varpi, ep_format);
        if (sf->parsed()) return cmd_sieve_fns(sf_smax, sf_step, sf_at);
        if (ct->parsed())
            return cmd_constants(ct_varpi, ct_list, ct_catalog, ct_assume, ct_theta,
                                 ct_delta, ct_pair, ct_depth, ct_format);
        if (t1->parsed()) return cmd_table1(t1_format);
        if (fg->parsed())
            return cmd_figures(fg_lo, fg_hi, fg_step, fg_assume, fg_theta, fg_delta, fg_depth);
        if (sm->parsed()) {
            if (sk->parsed()) return sums_kloosterman(sk_m, sk_n, sk_q);
            if (st->parsed()) return sums_kl_table(st_p, st_samples, seed);
            if (sv->parsed()) return sums_vp(sv_p, sv_a, sv_b);
            if (svs->parsed()) return sums_vp_scan(svs_pmax);
            if (smo->parsed()) return sums_moments(smo_p, smo_nu, smo_size, smo_reps, seed);
            if (sls->parsed()) return sums_large_sieve(sls_cases, seed);
            if (scs->parsed()) return sums_char_sum(scs_q, scs_chi, scs_first, scs_len);
            if (sik->parsed()) return sums_inc_kloosterman(sik_h, sik_q, sik_first, sik_len, sik_pair);
            if (srs->parsed()) return sums_rstar_scan(srs_q, srs_cases, seed, srs_pair);
            if (scc->parsed()) return sums_congruence(scc_q, scc_M, scc_N);
            if (sw->parsed()) return sums_weil_sweep(sw_prime, sw_comp, seed);
        }
        if (vb->parsed())
            return cmd_verify_bt(vb_x, vb_q, vb_qlo, vb_qhi, vb_curve, vb_theta,
                                 vb_delta, vb_pair, vb_residues);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
