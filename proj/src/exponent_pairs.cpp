#include "btlab/exponent_pairs.hpp"

#include <map>
#include <stdexcept>

namespace btlab {

std::strong_ordering ExponentPair::operator<=>(const ExponentPair& o) const {
    if (auto c = kappa <=> o.kappa; c != 0) return c;
    if (auto c = lambda <=> o.lambda; c != 0) return c;
    return nu <=> o.nu;
}

bool ExponentPair::in_band() const {
    static const Rational half(1, 2), one(1);
    return kappa.sign() >= 0 && kappa <= half && half <= lambda && lambda <= one
        && nu.sign() >= 0 && nu <= one;
}

std::string ExponentPair::str() const {
    return "(" + kappa.str() + ", " + lambda.str() + ", " + nu.str() + ")";
}

ExponentPair initial_pair() {
    return {Rational(0), Rational(1), Rational(0)};
}

ExponentPair apply_A(const ExponentPair& p) {
    Rational d = (p.kappa + Rational(1)) * Rational(2);
    Rational k = p.kappa / d;
    return {k, (p.kappa + p.lambda + Rational(1)) / d, k};
}

ExponentPair apply_B(const ExponentPair& p) {
    static const Rational half(1, 2);
    return {p.lambda - half, p.kappa + half, p.lambda + p.nu - p.kappa};
}

bool is_valid_word(std::string_view w) {
    for (char c : w)
        if (c != 'A' && c != 'B') return false;
    return true;
}

ExponentPair eval_word(std::string_view w) {
    if (!is_valid_word(w))
        throw std::invalid_argument("eval_word: word must consist of 'A' and 'B'");
    ExponentPair p = initial_pair();
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        p = (*it == 'A') ? apply_A(p) : apply_B(p);
    return p;
}

ExponentPair akb_formula(unsigned k) {
    if (k < 2) throw std::invalid_argument("akb_formula: requires k >= 2");
    // 2^{k+1} - 2 stays exact in mpz for any reasonable k.
    Rational two_pow = Rational(2).pow(k + 1) - Rational(2);
    Rational inv = Rational(1) / two_pow;
    return {inv, Rational(1) - Rational((long)k) / two_pow, inv};
}

std::vector<EnumeratedPair> enumerate_pairs(unsigned max_length) {
    std::vector<EnumeratedPair> out;
    std::map<ExponentPair, std::string> seen;

    ExponentPair start = initial_pair();
    seen.emplace(start, "");
    out.push_back({"", start});

    // BFS over pair values. Both maps depend only on the value, so expanding
    // one witness per value is complete. Generating the A-extensions of the
    // whole frontier before the B-extensions keeps each level in (length,
    // lexicographic) order, which makes the stored witness the tie-break
    // winner. Values with nu > 1 (possible once a B^2 acts on nu > 0) are
    // pruned: their B-successors stay out of band and their A-successors are
    // reachable from an in-band value with the same (kappa, lambda).
    std::vector<EnumeratedPair> frontier = out;
    for (unsigned len = 1; len <= max_length && !frontier.empty(); ++len) {
        std::vector<EnumeratedPair> next;
        for (char letter : {'A', 'B'}) {
            for (const auto& node : frontier) {
                ExponentPair np = (letter == 'A') ? apply_A(node.pair) : apply_B(node.pair);
                if (!np.in_band()) continue;
                std::string w = letter + node.word;
                if (seen.emplace(np, w).second) next.push_back({std::move(w), np});
            }
        }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

std::optional<Rational> objective_f(const ExponentPair& p) {
    Rational den = Rational(1) + p.kappa * Rational(2) - p.lambda;
    if (den.is_zero()) return std::nullopt;
    return (Rational(1) + p.kappa - p.lambda) / den;
}

Rational objective_g(const Rational& varpi, const ExponentPair& p) {
    return (Rational(3) + p.kappa - p.lambda)
         - (Rational(3) + p.kappa * Rational(2) - p.lambda) * varpi;
}

OptimizeResult optimize(Objective obj, const std::optional<Rational>& varpi,
                        unsigned max_length) {
    if (obj == Objective::MaxG && !varpi)
        throw std::invalid_argument("optimize: objective g requires varpi");
    if (obj != Objective::MaxG && varpi)
        throw std::invalid_argument("optimize: varpi only applies to objective g");

    std::optional<OptimizeResult> best;
    for (const auto& [word, pair] : enumerate_pairs(max_length)) {
        std::optional<Rational> val;
        switch (obj) {
            case Objective::MinSum: val = pair.sum(); break;
            case Objective::MaxF:   val = objective_f(pair); break;
            case Objective::MaxG:   val = objective_g(*varpi, pair); break;
        }
        if (!val) continue;
        bool better = !best;
        if (best) {
            if (obj == Objective::MinSum)
                better = *val < best->value;
            else
                better = *val > best->value;
            // enumerate_pairs is sorted by (length, word): on exact ties the
            // incumbent already carries the preferred witness.
        }
        if (better) best = OptimizeResult{word, pair, *val};
    }
    if (!best) throw std::logic_error("optimize: empty search space");
    return *best;
}

}  // namespace btlab
