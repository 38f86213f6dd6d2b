#include "btlab/prime_counts.hpp"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <future>
#include <stdexcept>
#include <thread>

#include "btlab/modarith.hpp"

namespace btlab {

unsigned worker_threads() {
    if (const char* env = std::getenv("BTLAB_THREADS")) {
        long v = std::atol(env);
        if (v >= 1) return (unsigned)v;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

namespace {

// Odd numbers per segment; 1 MiB of flags.
constexpr uint64_t kSegmentOdds = 1ull << 20;

std::vector<uint32_t> base_primes(uint64_t limit_sqrt) {
    std::vector<uint8_t> comp(limit_sqrt + 1, 0);
    std::vector<uint32_t> ps;
    for (uint64_t i = 2; i <= limit_sqrt; ++i) {
        if (comp[i]) continue;
        ps.push_back((uint32_t)i);
        for (uint64_t j = i * i; j <= limit_sqrt; j += i) comp[j] = 1;
    }
    return ps;
}

}  // namespace

void for_each_prime(uint64_t limit, const std::function<void(uint64_t)>& fn) {
    if (limit < 2) throw std::invalid_argument("for_each_prime: limit must be >= 2");
    fn(2);
    if (limit < 3) return;
    uint64_t r = (uint64_t)std::sqrt((double)limit);
    while ((r + 1) * (r + 1) <= limit) ++r;
    while (r * r > limit) --r;
    auto ps = base_primes(r);

    std::vector<uint8_t> seg(kSegmentOdds);
    // Segment covers odd values lo, lo+2, ..., lo + 2*(kSegmentOdds-1).
    for (uint64_t lo = 3; lo <= limit; lo += 2 * kSegmentOdds) {
        uint64_t hi = std::min(limit, lo + 2 * (kSegmentOdds - 1));
        uint64_t count = (hi - lo) / 2 + 1;
        std::memset(seg.data(), 0, count);
        for (uint32_t p : ps) {
            if (p == 2) continue;
            uint64_t pp = (uint64_t)p * p;
            if (pp > hi) break;
            uint64_t start = pp;
            if (start < lo) {
                uint64_t k = (lo - start + 2 * p - 1) / (2 * p);
                start += 2 * p * k;
            }
            for (uint64_t v = start; v <= hi; v += 2 * p) seg[(v - lo) / 2] = 1;
        }
        for (uint64_t i = 0; i < count; ++i)
            if (!seg[i]) fn(lo + 2 * i);
    }
}

uint64_t count_primes(uint64_t limit) {
    uint64_t n = 0;
    for_each_prime(limit, [&](uint64_t) { ++n; });
    return n;
}

std::vector<uint64_t> primes_up_to(uint64_t limit) {
    std::vector<uint64_t> out;
    for_each_prime(limit, [&](uint64_t p) { out.push_back(p); });
    return out;
}

uint64_t ResidueCounts::max_count() const {
    uint64_t m = 0;
    for (const auto& [a, c] : counts) m = std::max(m, c);
    return m;
}

uint64_t ResidueCounts::argmax() const {
    uint64_t m = 0, arg = 0;
    for (const auto& [a, c] : counts)
        if (c > m) { m = c; arg = a; }
    return arg;
}

ResidueCounts pi_in_ap(uint64_t x, uint64_t q) {
    if (q < 2 || q >= x) throw std::invalid_argument("pi_in_ap: requires 2 <= q < x");
    ResidueCounts rc;
    rc.x = x;
    rc.q = q;
    rc.phi_q = euler_phi(q);
    std::vector<uint64_t> by_residue(q, 0);
    for_each_prime(x, [&](uint64_t p) {
        ++rc.pi_x;
        if (q % p == 0) { ++rc.primes_dividing_q; return; }
        ++by_residue[p % q];
    });
    for (uint64_t a = 0; a < q; ++a)
        if (gcd_u64(a == 0 ? q : a, q) == 1) rc.counts[a] = by_residue[a];
    return rc;
}

MVCheck mv_check(const ResidueCounts& rc) {
    double logxq = std::log((double)rc.x / (double)rc.q);
    if (!(logxq > 0)) throw std::domain_error("mv_check: requires q < x");
    MVCheck out;
    out.max_count = rc.max_count();
    out.bound = 2.0 * (double)rc.x / ((double)rc.phi_q * logxq);
    out.pass = (double)out.max_count <= out.bound;
    return out;
}

MVCheck mv_check(uint64_t x, uint64_t q) {
    return mv_check(pi_in_ap(x, q));
}

std::vector<MVCheck> mv_grid(uint64_t x, uint64_t q_lo, uint64_t q_hi) {
    if (q_lo < 2 || q_hi < q_lo || q_hi >= x)
        throw std::invalid_argument("mv_grid: requires 2 <= q_lo <= q_hi < x");
    auto primes = primes_up_to(x);

    auto run = [&](uint64_t lo, uint64_t hi) {
        std::vector<MVCheck> part;
        part.reserve(hi - lo + 1);
        std::vector<uint64_t> by_residue;
        for (uint64_t q = lo; q <= hi; ++q) {
            by_residue.assign(q, 0);
            for (uint64_t p : primes) {
                if (p <= q && q % p == 0) continue;
                ++by_residue[p % q];
            }
            uint64_t maxc = 0;
            for (uint64_t a = 1; a < q; ++a)
                if (gcd_u64(a, q) == 1) maxc = std::max(maxc, by_residue[a]);
            double bound = 2.0 * (double)x / ((double)euler_phi(q) * std::log((double)x / (double)q));
            part.push_back({maxc, bound, (double)maxc <= bound});
        }
        return part;
    };

    // Chunks are independent; results concatenate in q order, so the output
    // is identical for any thread count.
    unsigned nt = std::min<uint64_t>(worker_threads(), q_hi - q_lo + 1);
    if (nt <= 1) return run(q_lo, q_hi);
    std::vector<std::future<std::vector<MVCheck>>> futs;
    uint64_t total = q_hi - q_lo + 1, chunk = (total + nt - 1) / nt;
    for (uint64_t lo = q_lo; lo <= q_hi; lo += chunk)
        futs.push_back(std::async(std::launch::async, run, lo,
                                  std::min(q_hi, lo + chunk - 1)));
    std::vector<MVCheck> out;
    out.reserve(total);
    for (auto& f : futs) {
        auto part = f.get();
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

BTEmpirical bt_empirical(const ResidueCounts& rc, const BTCurve& curve,
                         const CurveParams& params) {
    BTEmpirical out;
    out.ratio = (double)rc.max_count() * (double)rc.phi_q * std::log((double)rc.x)
              / (double)rc.x;
    out.varpi = std::log((double)rc.q) / std::log((double)rc.x);
    // varpi only enters curve lookup; a double-precision rational stand-in
    // keeps the catalog evaluation exact from here on.
    Rational w = Rational::parse(std::to_string(out.varpi));
    auto v = curve.eval(w, params);
    if (v) out.c_value = v->to_double();
    return out;
}

}  // namespace btlab
