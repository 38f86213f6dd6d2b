#include "btlab/kloosterman.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "btlab/modarith.hpp"

namespace btlab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

inline uint64_t umod(int64_t v, uint64_t q) {
    int64_t r = v % (int64_t)q;
    return (uint64_t)(r < 0 ? r + (int64_t)q : r);
}

}  // namespace

cplx kloosterman_sum(int64_t m, int64_t n, uint64_t q) {
    if (q < 1) throw std::invalid_argument("kloosterman_sum: q must be >= 1");
    if (q == 1) return cplx(1.0);
    uint64_t mm = umod(m, q), nn = umod(n, q);
    cplx s(0.0);
    for (uint64_t a = 1; a < q; ++a) {
        if (gcd_u64(a, q) != 1) continue;
        uint64_t abar = invmod(a, q);
        uint64_t num = (mulmod(mm, a, q) + mulmod(nn, abar, q)) % q;
        double ang = kTwoPi * (double)num / (double)q;
        s += cplx(std::cos(ang), std::sin(ang));
    }
    return s;
}

double ramanujan_sum(int64_t m, uint64_t q) {
    if (q < 1) throw std::invalid_argument("ramanujan_sum: q must be >= 1");
    if (q == 1) return 1.0;
    uint64_t mm = umod(m, q);
    double s = 0.0;
    for (uint64_t a = 1; a < q; ++a) {
        if (gcd_u64(a, q) != 1) continue;
        s += std::cos(kTwoPi * (double)mulmod(mm, a, q) / (double)q);
    }
    return s;
}

double weil_bound(int64_t m, int64_t n, uint64_t q) {
    uint64_t g = gcd_u64(gcd_u64(umod(m, q), umod(n, q)), q);
    if (g == 0) g = q;   // m = n = 0 mod q
    return std::sqrt((double)q) * std::sqrt((double)g) * (double)divisor_count(q);
}

KloostermanTable kloosterman_table(uint64_t p) {
    if (p < 3 || !is_prime_u64(p))
        throw std::invalid_argument("kloosterman_table: p must be an odd prime");
    if (p > (1u << 28))
        throw std::invalid_argument("kloosterman_table: p too large for a desk-scale table");

    // Inverse table in O(p): inv[a] = -(p/a) inv[p mod a].
    std::vector<uint32_t> inv(p);
    inv[1] = 1;
    for (uint64_t a = 2; a < p; ++a)
        inv[a] = (uint32_t)(p - (p / a) * inv[p % a] % p);

    std::vector<cplx> g(p, cplx(0.0));
    for (uint64_t a = 1; a < p; ++a) {
        double ang = kTwoPi * (double)inv[a] / (double)p;
        g[a] = cplx(std::cos(ang), std::sin(ang));
    }
    // S(x,1;p) = sum_a e(abar/p) e(ax/p): one forward transform.
    std::vector<cplx> X = dft_any(g, +1);

    KloostermanTable t;
    t.p = p;
    t.values.resize(p);
    double rp = std::sqrt((double)p);
    for (uint64_t x = 0; x < p; ++x) {
        t.values[x] = X[x].real() / rp;
        t.max_imag_residue = std::max(t.max_imag_residue, std::abs(X[x].imag()) / rp);
    }
    return t;
}

std::vector<cplx> vp_transform(const KloostermanTable& t, uint64_t a, uint64_t b) {
    uint64_t p = t.p;
    if (a % p == 0 || b % p == 0)
        throw std::invalid_argument("vp_transform: a, b must be nonzero mod p");
    std::vector<cplx> r(p);
    for (uint64_t x = 0; x < p; ++x)
        r[x] = t.values[mulmod(a, x, p)] * t.values[mulmod(b, x, p)];
    std::vector<cplx> V = dft_any(r, -1);
    double rp = std::sqrt((double)p);
    for (auto& v : V) v /= rp;
    return V;
}

KlMoment kl_moment(const KloostermanTable& t, unsigned nu,
                   const std::vector<uint32_t>& subset,
                   const std::vector<double>& beta) {
    if (nu < 1) throw std::invalid_argument("kl_moment: nu must be >= 1");
    if (subset.size() != beta.size())
        throw std::invalid_argument("kl_moment: subset/beta size mismatch");
    KlMoment out;
    if (subset.empty()) return out;
    uint64_t p = t.p;
    for (uint64_t m = 0; m < p; ++m) {
        double inner = 0.0;
        for (size_t i = 0; i < subset.size(); ++i)
            inner += beta[i] * t.values[mulmod(m, subset[i], p)];
        double sq = inner * inner;
        double term = sq;
        for (unsigned k = 1; k < nu; ++k) term *= sq;
        out.moment += term;
    }
    double Ns = (double)subset.size();
    double denom = std::pow(Ns, (double)nu) * (double)p
                 + std::pow(Ns, 2.0 * nu) * std::sqrt((double)p);
    out.ratio = out.moment / denom;
    return out;
}

IncompleteKl incomplete_kloosterman(int64_t h, uint64_t q, int64_t first, uint64_t length,
                                    const std::optional<ExponentPair>& pair) {
    if (q < 1) throw std::invalid_argument("incomplete_kloosterman: q must be >= 1");
    if (length <= 1 || length > q)
        throw std::invalid_argument("incomplete_kloosterman: need 1 < |I| <= q");
    uint64_t hh = umod(h, q);
    cplx s(0.0);
    for (uint64_t i = 0; i < length; ++i) {
        uint64_t n = umod(first + (int64_t)i, q);
        if (n == 0 || gcd_u64(n, q) != 1) continue;
        uint64_t nbar = invmod(n, q);
        double ang = kTwoPi * (double)mulmod(hh, nbar, q) / (double)q;
        s += cplx(std::cos(ang), std::sin(ang));
    }
    uint64_t g = gcd_u64(hh == 0 ? q : hh, q);
    IncompleteKl out;
    out.sum = s;
    out.rstar_ratio = std::abs(s) / (std::sqrt((double)length) * std::sqrt((double)g));
    out.smooth_ratio = 0.0;
    if (pair) {
        double k = pair->kappa.to_double();
        double l = pair->lambda.to_double();
        double v = pair->nu.to_double();
        double denom = std::pow((double)q, k) * std::pow((double)length, l - k)
                     * std::pow((double)g, v);
        out.smooth_ratio = std::abs(s) / denom;
    }
    return out;
}

double completion_bound(uint64_t q) {
    return (double)divisor_count(q) * std::sqrt((double)q) * (2.0 + std::log((double)q));
}

}  // namespace btlab
