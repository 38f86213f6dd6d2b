#pragma once

#include <cstdint>
#include <vector>

// 64-bit modular arithmetic with 128-bit intermediates. Moduli are assumed
// to stay below 2^61 so that products never overflow the unsigned 128-bit
// wide type.

namespace btlab {

inline uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
    return (uint64_t)((__uint128_t)a * b % m);
}

uint64_t powmod(uint64_t base, uint64_t exp, uint64_t m);

// Extended Euclid. Returns x with a*x == gcd(a,m) (mod m).
uint64_t invmod(uint64_t a, uint64_t m);

uint64_t gcd_u64(uint64_t a, uint64_t b);

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(uint64_t n);

// Trial division + Pollard rho; returns (prime, exponent) pairs sorted by prime.
std::vector<std::pair<uint64_t, int>> factorize(uint64_t n);

uint64_t euler_phi(uint64_t n);
int mobius(uint64_t n);
uint64_t divisor_count(uint64_t n);   // tau(n)

// Smallest primitive root mod p^e (p odd prime) or mod 2, 4.
uint64_t primitive_root(uint64_t pe);

}  // namespace btlab
