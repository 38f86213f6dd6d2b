#include "btlab/bt_constants.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace btlab {

namespace {

const Rational kZero(0), kOne(1), kTwo(2);

Rational rat(long n, long d = 1) { return Rational(n, d); }

}  // namespace

std::string hypothesis_name(Hypothesis h) {
    switch (h) {
        case Hypothesis::PrimeModulus: return "prime-modulus";
        case Hypothesis::SmoothSquarefreeModulus: return "smooth-squarefree-modulus";
        case Hypothesis::RamanujanPetersson: return "ramanujan-petersson";
        case Hypothesis::MomentConjecture: return "moment-conjecture";
        case Hypothesis::HypothesisRStar: return "hypothesis-rstar";
    }
    return "?";
}

std::optional<Hypothesis> hypothesis_from_name(const std::string& s) {
    for (Hypothesis h : {Hypothesis::PrimeModulus, Hypothesis::SmoothSquarefreeModulus,
                         Hypothesis::RamanujanPetersson, Hypothesis::MomentConjecture,
                         Hypothesis::HypothesisRStar}) {
        if (hypothesis_name(h) == s) return h;
    }
    // accepted shorthands for the CLI
    if (s == "prime") return Hypothesis::PrimeModulus;
    if (s == "smooth") return Hypothesis::SmoothSquarefreeModulus;
    if (s == "rp") return Hypothesis::RamanujanPetersson;
    if (s == "moment") return Hypothesis::MomentConjecture;
    if (s == "rstar") return Hypothesis::HypothesisRStar;
    return std::nullopt;
}

bool Interval::contains(const Rational& w) const {
    if (lo_open ? !(w > lo) : !(w >= lo)) return false;
    if (hi_open ? !(w < hi) : !(w <= hi)) return false;
    return true;
}

std::string Interval::str() const {
    return std::string(lo_open ? "(" : "[") + lo.str() + ", " + hi.str()
         + (hi_open ? ")" : "]");
}

namespace {

using ValueFn = std::function<Rational(const Rational&, const CurveParams&)>;

CurvePiece fixed_piece(Rational lo, bool lo_open, Rational hi, bool hi_open,
                       std::string formula, ValueFn fn) {
    Interval iv{std::move(lo), std::move(hi), lo_open, hi_open};
    CurvePiece p;
    p.domain = [iv](const CurveParams&) -> std::optional<Interval> { return iv; };
    p.value = std::move(fn);
    p.formula = std::move(formula);
    p.domain_text = iv.str();
    return p;
}

// a / (b - c*w)
ValueFn linfrac(long a, long b, long c) {
    return [a, b, c](const Rational& w, const CurveParams&) {
        return rat(a) / (rat(b) - rat(c) * w);
    };
}

ValueFn constant(long v) {
    return [v](const Rational&, const CurveParams&) { return rat(v); };
}

void validate_params(const BTCurve& c, const CurveParams& p) {
    for (const auto& rp : c.required_params) {
        if (rp == "theta") {
            if (!p.theta) throw std::invalid_argument(c.id + ": requires parameter theta");
            if (p.theta->sign() < 0 || *p.theta > rat(1, 2))
                throw std::invalid_argument("theta must lie in [0, 1/2]");
        } else if (rp == "delta") {
            if (!p.delta) throw std::invalid_argument(c.id + ": requires parameter delta");
            if (p.delta->sign() < 0 || !(*p.delta < rat(16, 45)))
                throw std::invalid_argument("delta must lie in [0, 16/45)");
        } else if (rp == "pair") {
            if (!p.pair) throw std::invalid_argument(c.id + ": requires an exponent pair");
            if (!p.pair->in_band())
                throw std::invalid_argument("exponent pair outside the admissible band");
        }
    }
}

// Validity interval of the parametric smooth-modulus curve:
//   [ (1+k-l)/(2+2k-l), (1+k-l)/(1+2k-l) ].
std::optional<Interval> pair_domain(const ExponentPair& p) {
    Rational num = kOne + p.kappa - p.lambda;
    Rational d1 = kTwo + kTwo * p.kappa - p.lambda;
    Rational d2 = kOne + kTwo * p.kappa - p.lambda;
    if (d2.is_zero()) return std::nullopt;   // only at the trivial pair (0,1)
    return Interval{num / d1, num / d2, false, false};
}

Rational pair_value(const ExponentPair& p, const Rational& w) {
    Rational den = (rat(3) + p.kappa - p.lambda)
                 - (rat(3) + kTwo * p.kappa - p.lambda) * w;
    return rat(4) / den;
}

std::vector<BTCurve> build_catalog() {
    std::vector<BTCurve> cat;

    {
        BTCurve c;
        c.id = "van-lint-richert";
        c.source = "van Lint & Richert (1965); Montgomery & Vaughan (1973); Selberg (1991)";
        c.pieces.push_back(fixed_piece(kZero, true, kOne, true, "2/(1-w)",
            [](const Rational& w, const CurveParams&) { return kTwo / (kOne - w); }));
        cat.push_back(std::move(c));
    }
    {
        BTCurve c;
        c.id = "motohashi";
        c.source = "Motohashi (1973, 1974)";
        c.pieces.push_back(fixed_piece(kZero, true, rat(1, 3), true, "16/(8-3w)", linfrac(16, 8, 3)));
        c.pieces.push_back(fixed_piece(rat(1, 3), false, rat(2, 5), false, "4/(2-w)", linfrac(4, 2, 1)));
        c.pieces.push_back(fixed_piece(rat(2, 5), true, rat(1, 2), false, "2/(2-3w)", linfrac(2, 2, 3)));
        cat.push_back(std::move(c));
    }
    {
        BTCurve c;
        c.id = "goldfeld";
        c.source = "Goldfeld (1975)";
        c.pieces.push_back(fixed_piece(kZero, true, rat(24, 71), true, "16/(8-3w)", linfrac(16, 8, 3)));
        cat.push_back(std::move(c));
    }
    {
        BTCurve c;
        c.id = "iwaniec-burgess";
        c.source = "Iwaniec (1982), Theorem 3";
        c.pieces.push_back(fixed_piece(kZero, true, rat(9, 20), true, "16/(8-3w)", linfrac(16, 8, 3)));
        cat.push_back(std::move(c));
    }
    {
        BTCurve c;
        c.id = "iwaniec-bilinear";
        c.source = "Iwaniec (1982), Theorem 6";
        c.pieces.push_back(fixed_piece(rat(9, 20), false, rat(2, 3), false, "8/(6-7w)", linfrac(8, 6, 7)));
        cat.push_back(std::move(c));
    }
    {
        BTCurve c;
        c.id = "friedlander-iwaniec";
        c.source = "Friedlander & Iwaniec (1997), Theorem 1";
        c.pieces.push_back(fixed_piece(rat(6, 11), false, kOne, true, "(2-((1-w)/4)^6)/(1-w)",
            [](const Rational& w, const CurveParams&) {
                Rational t = (kOne - w) / rat(4);
                return (kTwo - t.pow(6)) / (kOne - w);
            }));
        cat.push_back(std::move(c));
    }
    {
        // Unspecified constants c0, delta0: kept in the catalog for
        // completeness, never evaluated numerically.
        BTCurve c;
        c.id = "bourgain-garaev";
        c.source = "Bourgain & Garaev (2014), Theorem 4";
        c.numeric = false;
        CurvePiece p;
        p.domain = [](const CurveParams&) -> std::optional<Interval> { return std::nullopt; };
        p.value = [](const Rational&, const CurveParams&) -> Rational {
            throw std::logic_error("bourgain-garaev carries unspecified constants");
        };
        p.formula = "(2-c0*(1-w)^2)/(1-w)";
        p.domain_text = "[1-delta0, 1)";
        c.pieces.push_back(std::move(p));
        cat.push_back(std::move(c));
    }
    {
        BTCurve c;
        c.id = "maynard";
        c.source = "Maynard (2013)";
        c.pieces.push_back(fixed_piece(kZero, true, rat(1, 8), true, "2", constant(2)));
        cat.push_back(std::move(c));
    }

    // Burgess-range constant 16/(8-(3+2*theta)w) on (9/20, 1/2), with theta
    // the exponent toward Ramanujan-Petersson for GL2.
    {
        BTCurve c;
        c.id = "burgess-rp";
        c.source = "this toolkit's catalog; parametric Burgess-range constant";
        c.hypotheses = {Hypothesis::RamanujanPetersson};
        c.required_params = {"theta"};
        CurvePiece p = fixed_piece(rat(9, 20), true, rat(1, 2), true,
            "16/(8-(3+2*theta)*w)",
            [](const Rational& w, const CurveParams& pr) {
                return rat(16) / (rat(8) - (rat(3) + kTwo * *pr.theta) * w);
            });
        c.pieces.push_back(std::move(p));
        cat.push_back(std::move(c));
    }
    {
        // theta = 7/64 (Kim-Sarnak) is a proven exponent: unconditional.
        BTCurve c;
        c.id = "burgess-ks";
        c.source = "Burgess-range constant at the Kim-Sarnak exponent 7/64";
        c.pieces.push_back(fixed_piece(rat(9, 20), true, rat(1, 2), true,
            "16/(8-(3+7/32)*w)",
            [](const Rational& w, const CurveParams&) {
                return rat(16) / (rat(8) - rat(103, 32) * w);
            }));
        cat.push_back(std::move(c));
    }
    {
        // For prime moduli the same constant holds with theta = 0.
        BTCurve c;
        c.id = "burgess-prime";
        c.source = "Burgess-range constant, prime moduli (theta = 0)";
        c.hypotheses = {Hypothesis::PrimeModulus};
        c.pieces.push_back(fixed_piece(rat(9, 20), true, rat(1, 2), true,
                                       "16/(8-3w)", linfrac(16, 8, 3)));
        cat.push_back(std::move(c));
    }
    {
        BTCurve c;
        c.id = "prime-sixpiece";
        c.source = "six-piece prime-modulus constant beyond w = 1/2";
        c.hypotheses = {Hypothesis::PrimeModulus};
        c.pieces.push_back(fixed_piece(rat(1, 2), false, rat(12, 23), true, "8/(5-5w)", linfrac(8, 5, 5)));
        c.pieces.push_back(fixed_piece(rat(12, 23), false, rat(32, 61), true, "32/(32-43w)", linfrac(32, 32, 43)));
        c.pieces.push_back(fixed_piece(rat(32, 61), false, rat(8, 15), true, "24/(16-17w)", linfrac(24, 16, 17)));
        c.pieces.push_back(fixed_piece(rat(8, 15), false, rat(7, 13), true, "48/(40-49w)", linfrac(48, 40, 49)));
        c.pieces.push_back(fixed_piece(rat(7, 13), false, rat(6, 11), true, "16/(11-12w)", linfrac(16, 11, 12)));
        c.pieces.push_back(fixed_piece(rat(6, 11), false, rat(4, 7), true, "32/(28-35w)", linfrac(32, 28, 35)));
        cat.push_back(std::move(c));
    }
    {
        BTCurve c;
        c.id = "smooth-pair";
        c.source = "parametric constant from one arithmetic exponent pair, smooth squarefree moduli";
        c.hypotheses = {Hypothesis::SmoothSquarefreeModulus};
        c.required_params = {"pair"};
        CurvePiece p;
        p.domain = [](const CurveParams& pr) -> std::optional<Interval> {
            if (!pr.pair) return std::nullopt;
            return pair_domain(*pr.pair);
        };
        p.value = [](const Rational& w, const CurveParams& pr) {
            return pair_value(*pr.pair, w);
        };
        p.formula = "4/((3+k-l)-(3+2k-l)*w)";
        p.domain_text = "[(1+k-l)/(2+2k-l), (1+k-l)/(1+2k-l)]";
        c.pieces.push_back(std::move(p));
        cat.push_back(std::move(c));
    }
    {
        // Specialization of smooth-pair at (1/20, 33/40), kept as its own
        // entry because of its wide range reaching past 2/3.
        BTCurve c;
        c.id = "smooth-a2ba2b";
        c.source = "smooth-pair specialized at the pair generated by A^2BA^2B";
        c.hypotheses = {Hypothesis::SmoothSquarefreeModulus};
        c.pieces.push_back(fixed_piece(rat(9, 51), false, rat(9, 11), false,
                                       "160/(89-91w)", linfrac(160, 89, 91)));
        cat.push_back(std::move(c));
    }
    {
        BTCurve c;
        c.id = "smooth-subhalf";
        c.source = "smooth squarefree moduli below w = 1/2";
        c.hypotheses = {Hypothesis::SmoothSquarefreeModulus};
        c.pieces.push_back(fixed_piece(rat(1, 8), false, rat(5, 12), true, "2", constant(2)));
        c.pieces.push_back(fixed_piece(rat(5, 12), false, rat(9, 20), true, "5/(5-6w)", linfrac(5, 5, 6)));
        cat.push_back(std::move(c));
    }
    {
        BTCurve c;
        c.id = "smooth-moment";
        c.source = "smooth squarefree moduli under the twisted fourth-moment bound";
        c.hypotheses = {Hypothesis::SmoothSquarefreeModulus, Hypothesis::MomentConjecture};
        c.required_params = {"delta"};
        CurvePiece p1;
        p1.domain = [](const CurveParams& pr) -> std::optional<Interval> {
            if (!pr.delta) return std::nullopt;
            Rational brk = rat(10) / (rat(24) - rat(5) * *pr.delta);
            return Interval{rat(1, 8), brk, false, true};
        };
        p1.value = [](const Rational&, const CurveParams&) { return kTwo; };
        p1.formula = "2";
        p1.domain_text = "[1/8, 10/(24-5*delta))";
        c.pieces.push_back(std::move(p1));
        CurvePiece p2;
        p2.domain = [](const CurveParams& pr) -> std::optional<Interval> {
            if (!pr.delta) return std::nullopt;
            Rational brk = rat(10) / (rat(24) - rat(5) * *pr.delta);
            return Interval{brk, rat(9, 20), false, true};
        };
        p2.value = [](const Rational& w, const CurveParams& pr) {
            return rat(20) / (rat(20) - (rat(24) - rat(5) * *pr.delta) * w);
        };
        p2.formula = "20/(20-(24-5*delta)*w)";
        p2.domain_text = "[10/(24-5*delta), 9/20)";
        c.pieces.push_back(std::move(p2));
        cat.push_back(std::move(c));
    }
    {
        BTCurve c;
        c.id = "moment-general";
        c.source = "general moduli under the twisted fourth-moment bound";
        c.hypotheses = {Hypothesis::MomentConjecture};
        c.required_params = {"delta"};
        CurvePiece p = fixed_piece(rat(9, 20), false, rat(1, 2), false,
            "4/(2-(1-delta)*w)",
            [](const Rational& w, const CurveParams& pr) {
                return rat(4) / (kTwo - (kOne - *pr.delta) * w);
            });
        c.pieces.push_back(std::move(p));
        cat.push_back(std::move(c));
    }
    {
        BTCurve c;
        c.id = "rstar-iwaniec";
        c.source = "Iwaniec (1982), Theorems 8-9, under Hooley's Hypothesis R*";
        c.hypotheses = {Hypothesis::HypothesisRStar};
        c.pieces.push_back(fixed_piece(rat(4, 9), true, rat(7, 12), true, "6/(5-6w)", linfrac(6, 5, 6)));
        c.pieces.push_back(fixed_piece(rat(7, 12), true, kOne, true, "5/(3-3w)", linfrac(5, 3, 3)));
        cat.push_back(std::move(c));
    }

    return cat;
}

}  // namespace

const std::vector<BTCurve>& curve_catalog() {
    static const std::vector<BTCurve> cat = build_catalog();
    return cat;
}

const BTCurve* find_curve(const std::string& id) {
    for (const auto& c : curve_catalog())
        if (c.id == id) return &c;
    return nullptr;
}

std::optional<Rational> BTCurve::eval(const Rational& varpi, const CurveParams& params) const {
    if (!numeric)
        throw std::invalid_argument("curve '" + id + "' has unspecified constants and cannot be evaluated");
    validate_params(*this, params);
    for (const auto& piece : pieces) {
        auto dom = piece.domain(params);
        if (dom && dom->contains(varpi)) return piece.value(varpi, params);
    }
    return std::nullopt;
}

std::vector<std::string> list_curves(const HypothesisSet& assume) {
    std::vector<std::string> out;
    for (const auto& c : curve_catalog()) {
        if (std::includes(assume.begin(), assume.end(),
                          c.hypotheses.begin(), c.hypotheses.end()))
            out.push_back(c.id);
    }
    return out;
}

namespace {

// Enumerations are deterministic and depth is small; cache per depth.
const std::vector<EnumeratedPair>& cached_pairs(unsigned depth) {
    static std::map<unsigned, std::vector<EnumeratedPair>> cache;
    auto it = cache.find(depth);
    if (it == cache.end())
        it = cache.emplace(depth, enumerate_pairs(depth)).first;
    return it->second;
}

}  // namespace

Envelope envelope(const Rational& varpi, const HypothesisSet& assume,
                  const EnvelopeOptions& opts) {
    if (!(varpi > kZero) || !(varpi < kOne))
        throw std::invalid_argument("envelope: varpi must lie in (0, 1)");
    Envelope env;
    env.varpi = varpi;
    for (const auto& c : curve_catalog()) {
        if (!c.numeric) continue;
        if (!std::includes(assume.begin(), assume.end(),
                           c.hypotheses.begin(), c.hypotheses.end()))
            continue;
        if (c.id == "smooth-pair") {
            // Search the enumerated pair family (or use the explicit pair).
            std::optional<Rational> best;
            std::string best_word;
            if (opts.params.pair) {
                best = c.eval(varpi, opts.params);
            } else if (opts.pair_search_depth > 0) {
                for (const auto& ep : cached_pairs(opts.pair_search_depth)) {
                    auto dom = pair_domain(ep.pair);
                    if (!dom || !dom->contains(varpi)) continue;
                    Rational v = pair_value(ep.pair, varpi);
                    if (!best || v < *best) { best = v; best_word = ep.word; }
                }
            }
            if (best) {
                env.admissible.push_back({c.id, *best});
                env.best_pair_word = best_word;
            }
            continue;
        }
        bool missing_param = false;
        for (const auto& rp : c.required_params) {
            if ((rp == "theta" && !opts.params.theta) ||
                (rp == "delta" && !opts.params.delta) ||
                (rp == "pair" && !opts.params.pair))
                missing_param = true;
        }
        if (missing_param) continue;
        auto v = c.eval(varpi, opts.params);
        if (v) env.admissible.push_back({c.id, *v});
    }
    if (env.admissible.empty())
        throw std::domain_error("envelope: no curve applies at varpi = " + varpi.str());
    env.best_value = env.admissible.front().second;
    for (const auto& [id, v] : env.admissible)
        if (v < env.best_value) env.best_value = v;
    for (const auto& [id, v] : env.admissible)
        if (v == env.best_value) env.best_ids.push_back(id);
    return env;
}

std::vector<Table1Row> table1() {
    const BTCurve* ours = find_curve("prime-sixpiece");
    const BTCurve* iw = find_curve("iwaniec-bilinear");
    std::vector<Table1Row> rows;
    for (auto [n, d] : {std::pair<long, long>{16, 31}, {12, 23}, {32, 61},
                        {8, 15}, {7, 13}, {6, 11}}) {
        Rational w(n, d);
        Rational a = *ours->eval(w);
        Rational b = *iw->eval(w);
        rows.push_back({w, a, b, (b - a) / b});
    }
    return rows;
}

std::vector<FigureRow> figure_data(const Rational& varpi_min, const Rational& varpi_max,
                                   const Rational& step, const HypothesisSet& assume,
                                   const EnvelopeOptions& opts) {
    if (!(kZero < varpi_min) || !(varpi_min < varpi_max) || !(varpi_max < kOne))
        throw std::invalid_argument("figure_data: need 0 < varpi_min < varpi_max < 1");
    if (!(step > kZero)) throw std::invalid_argument("figure_data: step must be positive");
    std::vector<FigureRow> rows;
    auto ids = list_curves(assume);
    for (Rational w = varpi_min; w <= varpi_max; w += step) {
        bool any = false;
        for (const auto& id : ids) {
            const BTCurve* c = find_curve(id);
            if (!c->numeric) continue;
            if (c->id == "smooth-pair") continue;   // covered via the envelope search
            bool missing_param = false;
            for (const auto& rp : c->required_params) {
                if ((rp == "theta" && !opts.params.theta) ||
                    (rp == "delta" && !opts.params.delta) ||
                    (rp == "pair" && !opts.params.pair))
                    missing_param = true;
            }
            if (missing_param) continue;
            auto v = c->eval(w, opts.params);
            if (v) { rows.push_back({w, c->id, *v}); any = true; }
        }
        if (assume.count(Hypothesis::SmoothSquarefreeModulus) && opts.pair_search_depth > 0) {
            std::optional<Rational> best;
            for (const auto& ep : cached_pairs(opts.pair_search_depth)) {
                auto dom = pair_domain(ep.pair);
                if (!dom || !dom->contains(w)) continue;
                Rational v = pair_value(ep.pair, w);
                if (!best || v < *best) best = v;
            }
            if (best) { rows.push_back({w, "smooth-pair", *best}); any = true; }
        }
        if (any) {
            Envelope env = envelope(w, assume, opts);
            rows.push_back({w, "ENVELOPE", env.best_value});
        }
    }
    return rows;
}

std::string catalog_json() {
    nlohmann::json root;
    root["curves"] = nlohmann::json::array();
    for (const auto& c : curve_catalog()) {
        nlohmann::json jc;
        jc["id"] = c.id;
        jc["source"] = c.source;
        jc["numeric"] = c.numeric;
        jc["hypotheses"] = nlohmann::json::array();
        for (auto h : c.hypotheses) jc["hypotheses"].push_back(hypothesis_name(h));
        jc["required_params"] = c.required_params;
        jc["pieces"] = nlohmann::json::array();
        for (const auto& p : c.pieces) {
            nlohmann::json jp;
            jp["formula"] = p.formula;
            jp["domain"] = p.domain_text;
            if (auto dom = p.domain(CurveParams{})) {
                jp["lo"] = dom->lo.str();
                jp["hi"] = dom->hi.str();
                jp["lo_open"] = dom->lo_open;
                jp["hi_open"] = dom->hi_open;
            }
            jc["pieces"].push_back(std::move(jp));
        }
        root["curves"].push_back(std::move(jc));
    }
    return root.dump(2);
}

}  // namespace btlab
