#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "btlab/exponent_pairs.hpp"
#include "btlab/rational.hpp"

// Catalog of admissible Brun-Titchmarsh constants C(varpi): for q ~ x^varpi,
//   max_{(a,q)=1} pi(x; q, a) <= (C(varpi) + eps) x / (phi(q) log x).
// Every curve is evaluated exactly as printed in its source, on exactly the
// printed validity interval; no extrapolation, no continuity smoothing.

namespace btlab {

enum class Hypothesis {
    PrimeModulus,             // q prime
    SmoothSquarefreeModulus,  // q squarefree with only small prime factors
    RamanujanPetersson,       // caller-chosen exponent theta
    MomentConjecture,         // conjectured twisted fourth-moment bound, parameter delta
    HypothesisRStar,          // square-root cancellation in incomplete Kloosterman sums
};

using HypothesisSet = std::set<Hypothesis>;

std::string hypothesis_name(Hypothesis h);
std::optional<Hypothesis> hypothesis_from_name(const std::string& s);

struct CurveParams {
    std::optional<Rational> theta;       // Ramanujan-Petersson exponent
    std::optional<Rational> delta;       // moment-conjecture length exponent, [0, 16/45)
    std::optional<ExponentPair> pair;    // exponent pair for the parametric smooth curve
};

struct Interval {
    Rational lo, hi;
    bool lo_open = false, hi_open = false;
    bool contains(const Rational& w) const;
    std::string str() const;
};

struct CurvePiece {
    // Validity interval; may depend on parameters (nullopt if they are
    // missing or invalid).
    std::function<std::optional<Interval>(const CurveParams&)> domain;
    std::function<Rational(const Rational&, const CurveParams&)> value;
    std::string formula;       // human-readable, 'w' stands for varpi
    std::string domain_text;   // printed interval, possibly symbolic
};

struct BTCurve {
    std::string id;
    std::string source;                  // citation
    HypothesisSet hypotheses;            // required assumption flags; empty = unconditional
    std::vector<std::string> required_params;   // subset of {"theta","delta","pair"}
    std::vector<CurvePiece> pieces;
    bool numeric = true;                 // false: symbolic-only entry, never evaluated

    // Exact value at varpi, or nullopt if varpi lies in no piece.
    // Throws std::invalid_argument when required parameters are missing or
    // out of range.
    std::optional<Rational> eval(const Rational& varpi, const CurveParams& params = {}) const;
};

const std::vector<BTCurve>& curve_catalog();
const BTCurve* find_curve(const std::string& id);

// Curves whose hypothesis set is contained in `assume`. Unconditional curves
// are always included.
std::vector<std::string> list_curves(const HypothesisSet& assume);

struct EnvelopeOptions {
    CurveParams params;
    unsigned pair_search_depth = 16;    // 0 disables the exponent-pair family
};

struct Envelope {
    Rational varpi;
    std::vector<std::pair<std::string, Rational>> admissible;  // (curve id, value)
    Rational best_value;
    std::vector<std::string> best_ids;  // all minimizers
    std::string best_pair_word;         // witness word when smooth-pair participates
};

// Evaluates every applicable numeric curve at varpi under the given
// assumptions; parametric curves participate only when their parameters are
// available (the exponent-pair family searches words up to
// pair_search_depth when the smooth-squarefree flag is set).
Envelope envelope(const Rational& varpi, const HypothesisSet& assume,
                  const EnvelopeOptions& opts = {});

struct Table1Row {
    Rational varpi;
    Rational ours;         // six-piece prime-modulus curve
    Rational iwaniec;      // 8/(6-7w)
    Rational improvement;  // (iwaniec - ours)/iwaniec, exact
};

// The six reference points of the prime-modulus improvement table.
std::vector<Table1Row> table1();

struct FigureRow {
    Rational varpi;
    std::string curve_id;
    Rational value;
};

// Grid scan emitting one row per (grid point, applicable curve) plus an
// ENVELOPE row per grid point.
std::vector<FigureRow> figure_data(const Rational& varpi_min, const Rational& varpi_max,
                                   const Rational& step, const HypothesisSet& assume,
                                   const EnvelopeOptions& opts = {});

// Full catalog as JSON (exact rationals rendered as "p/q" strings).
std::string catalog_json();

}  // namespace btlab
