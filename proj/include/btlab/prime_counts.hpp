#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "btlab/bt_constants.hpp"

namespace btlab {

// Worker count for parallel scans: BTLAB_THREADS, else hardware concurrency.
unsigned worker_threads();

// Segmented sieve of Eratosthenes, wheel-2 (odd numbers only), byte-per-odd
// segments sized for cache residency. Memory O(sqrt(limit) + segment).
// Visits primes in increasing order.
void for_each_prime(uint64_t limit, const std::function<void(uint64_t)>& fn);

uint64_t count_primes(uint64_t limit);
std::vector<uint64_t> primes_up_to(uint64_t limit);

// pi(x; q, a) for every residue a coprime to q.
struct ResidueCounts {
    uint64_t x = 0, q = 0;
    uint64_t phi_q = 0;
    std::map<uint64_t, uint64_t> counts;   // exactly phi(q) keys
    uint64_t pi_x = 0;                     // total primes <= x
    uint64_t primes_dividing_q = 0;        // primes p | q with p <= x

    uint64_t max_count() const;
    uint64_t argmax() const;               // smallest residue attaining the max
};

ResidueCounts pi_in_ap(uint64_t x, uint64_t q);

// Montgomery-Vaughan: max_a pi(x;q,a) <= 2x / (phi(q) log(x/q)), valid
// unconditionally for all 1 <= q < x.
struct MVCheck {
    uint64_t max_count;
    double bound;
    bool pass;
};

MVCheck mv_check(const ResidueCounts& rc);
MVCheck mv_check(uint64_t x, uint64_t q);

// One prime pass, all moduli in [q_lo, q_hi] at once; returns per-q results
// indexed q - q_lo.
std::vector<MVCheck> mv_grid(uint64_t x, uint64_t q_lo, uint64_t q_hi);

// Empirical Brun-Titchmarsh ratio max_a pi(x;q,a) * phi(q) * log(x) / x,
// reported against a catalog curve at varpi = log q / log x when the curve
// applies there. Report-only: the catalog constants are asymptotic.
struct BTEmpirical {
    double ratio;
    double varpi;
    std::optional<double> c_value;
};

BTEmpirical bt_empirical(const ResidueCounts& rc, const BTCurve& curve,
                         const CurveParams& params = {});

}  // namespace btlab
