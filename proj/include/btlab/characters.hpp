#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "btlab/dft.hpp"

namespace btlab {

// The full group of Dirichlet characters mod q. Prime-power components are
// handled through primitive roots and discrete-log tables (the two-generator
// decomposition for 2^k, k >= 3), so every character value is an exact root
// of unity indexed by integer arithmetic; floating point enters only in the
// final exp(2 pi i t / L).
class CharacterGroup {
public:
    explicit CharacterGroup(uint64_t q);

    uint64_t modulus() const { return q_; }
    uint64_t phi() const { return phi_; }
    uint64_t size() const { return phi_; }   // number of characters

    // chi_index in [0, phi); index 0 is the principal character.
    // Returns 0 on residues not coprime to q.
    cplx chi(uint64_t index, int64_t n) const;
    bool is_principal(uint64_t index) const { return index == 0; }
    bool is_coprime(int64_t n) const;
    uint64_t character_order(uint64_t index) const;
    // First real non-principal character, if any (unique for odd prime q).
    std::optional<uint64_t> quadratic_character() const;

    // sum_{n in [first, first+length)} chi(n); rejects the principal character.
    cplx incomplete_sum(uint64_t index, int64_t first, uint64_t length) const;

private:
    struct Component {
        uint64_t pe;                 // prime power
        uint64_t p;
        uint64_t ord1, ord2;         // ord2 > 1 only for 2^k, k >= 3
        std::vector<uint32_t> log1, log2;
    };
    uint64_t q_, phi_, lcm_ord_;
    std::vector<Component> comps_;
};

struct CharSumDiagnostics {
    cplx sum;
    // |sum| / (N^{1-1/r} q^{(r+1)/(4 r^2)}) for r = 1, 2, 3.
    std::array<double, 3> burgess_ratio;
};

CharSumDiagnostics incomplete_char_sum(const CharacterGroup& g, uint64_t index,
                                       int64_t first, uint64_t length);

inline double polya_vinogradov_bound(uint64_t q);

struct LargeSieveResult {
    double lhs;            // sum over all chi mod q of |sum alpha_n chi(n)|^2
    double lhs_identity;   // same value via the orthogonality identity
    double rhs;            // (N + q) ||alpha||^2
    bool pass;             // lhs <= rhs
};

// Implied constant 1: the inequality follows from orthogonality alone, so a
// failure here is a bug, not a tight case.
LargeSieveResult large_sieve_check(uint64_t q, int64_t first,
                                   const std::vector<cplx>& alpha);

inline double polya_vinogradov_bound(uint64_t q) {
    return std::sqrt((double)q) * std::log((double)q);
}

}  // namespace btlab
