#include "btlab/modarith.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace btlab {

uint64_t powmod(uint64_t base, uint64_t exp, uint64_t m) {
    if (m == 1) return 0;
    uint64_t r = 1;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

uint64_t gcd_u64(uint64_t a, uint64_t b) {
    while (b) { uint64_t t = a % b; a = b; b = t; }
    return a;
}

uint64_t invmod(uint64_t a, uint64_t m) {
    a %= m;
    int64_t t = 0, nt = 1;
    int64_t r = (int64_t)m, nr = (int64_t)a;
    while (nr != 0) {
        int64_t qt = r / nr;
        int64_t tmp = t - qt * nt; t = nt; nt = tmp;
        tmp = r - qt * nr; r = nr; nr = tmp;
    }
    if (r != 1) throw std::domain_error("invmod: argument not invertible");
    if (t < 0) t += (int64_t)m;
    return (uint64_t)t;
}

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // Sprp bases covering the full 64-bit range (Sinclair).
    for (uint64_t a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
        uint64_t x = powmod(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

uint64_t pollard_rho(uint64_t n) {
    if ((n & 1) == 0) return 2;
    uint64_t c = 1;
    for (;;) {
        uint64_t x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (mulmod(x, x, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            d = gcd_u64(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
        ++c;
    }
}

void factor_rec(uint64_t n, std::vector<uint64_t>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) { out.push_back(n); return; }
    uint64_t d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

std::vector<std::pair<uint64_t, int>> factorize(uint64_t n) {
    std::vector<uint64_t> fs;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
        while (n % p == 0) { fs.push_back(p); n /= p; }
    }
    factor_rec(n, fs);
    std::sort(fs.begin(), fs.end());
    std::vector<std::pair<uint64_t, int>> out;
    for (uint64_t p : fs) {
        if (!out.empty() && out.back().first == p)
            out.back().second++;
        else
            out.push_back({p, 1});
    }
    return out;
}

uint64_t euler_phi(uint64_t n) {
    uint64_t r = n;
    for (auto [p, e] : factorize(n)) r = r / p * (p - 1);
    return r;
}

int mobius(uint64_t n) {
    auto fs = factorize(n);
    for (auto [p, e] : fs)
        if (e > 1) return 0;
    return (fs.size() % 2 == 0) ? 1 : -1;
}

uint64_t divisor_count(uint64_t n) {
    uint64_t r = 1;
    for (auto [p, e] : factorize(n)) r *= (uint64_t)(e + 1);
    return r;
}

uint64_t primitive_root(uint64_t pe) {
    if (pe == 2) return 1;
    if (pe == 4) return 3;
    auto fs = factorize(pe);
    if (fs.size() != 1 || fs[0].first == 2)
        throw std::domain_error("primitive_root: modulus must be an odd prime power (or 2, 4)");
    uint64_t p = fs[0].first;
    uint64_t phi = euler_phi(pe);
    auto phi_fs = factorize(phi);
    for (uint64_t g = 2; g < pe; ++g) {
        if (g % p == 0) continue;
        bool ok = true;
        for (auto [f, e] : phi_fs) {
            if (powmod(g, phi / f, pe) == 1) { ok = false; break; }
        }
        if (ok) return g;
    }
    throw std::logic_error("primitive_root: none found");
}

}  // namespace btlab
