#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "btlab/rational.hpp"

// Arithmetic exponent pairs (kappa, lambda, nu) generated from (0, 1, 0) by
// the A- and B-process maps of the q-analogue van der Corput method. All
// arithmetic is exact.

namespace btlab {

struct ExponentPair {
    Rational kappa, lambda, nu;

    bool operator==(const ExponentPair& o) const {
        return kappa == o.kappa && lambda == o.lambda && nu == o.nu;
    }
    std::strong_ordering operator<=>(const ExponentPair& o) const;

    // 0 <= kappa <= 1/2 <= lambda <= 1 and 0 <= nu <= 1.
    bool in_band() const;
    Rational sum() const { return kappa + lambda; }
    std::string str() const;
};

// The trivial pair (0, 1, 0), the seed of the whole calculus.
ExponentPair initial_pair();

ExponentPair apply_A(const ExponentPair& p);
ExponentPair apply_B(const ExponentPair& p);

// A word over {A, B}; the rightmost letter acts on (0,1,0) first.
// eval_word("") is the initial pair.
bool is_valid_word(std::string_view w);
ExponentPair eval_word(std::string_view w);

// The closed form printed for A^k B (k >= 2):
//   ( 1/(2^{k+1}-2), 1 - k/(2^{k+1}-2), 1/(2^{k+1}-2) ).
// Direct composition shifts the index: eval_word(A^k B) == akb_formula(k+1).
ExponentPair akb_formula(unsigned k);

struct EnumeratedPair {
    std::string word;   // shortest witness; ties broken lexicographically (A < B)
    ExponentPair pair;
};

// All distinct pair values reachable by words of length <= max_length,
// deduplicated by exact value and restricted to the admissible band
// (values with nu > 1 exist for some unreduced words and are dropped).
// Sorted by (word length, word).
std::vector<EnumeratedPair> enumerate_pairs(unsigned max_length);

// Objectives of the constant-optimization step.
//   f(kappa, lambda)       = (1 + kappa - lambda) / (1 + 2 kappa - lambda)
//   g_varpi(kappa, lambda) = (3 + kappa - lambda) - (3 + 2 kappa - lambda) varpi
// f is undefined when its denominator vanishes (only at (0,1)).
std::optional<Rational> objective_f(const ExponentPair& p);
Rational objective_g(const Rational& varpi, const ExponentPair& p);

enum class Objective { MinSum, MaxF, MaxG };

struct OptimizeResult {
    std::string word;
    ExponentPair pair;
    Rational value;
};

// Exhaustive search over enumerate_pairs(max_length). Ties broken by
// shorter word, then lexicographic order. MaxG requires varpi.
OptimizeResult optimize(Objective obj, const std::optional<Rational>& varpi,
                        unsigned max_length);

}  // namespace btlab
