#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "btlab/dft.hpp"
#include "btlab/exponent_pairs.hpp"

namespace btlab {

// S(m,n;q) = sum over units a mod q of e((ma + n*abar)/q), by direct
// summation with exact modular inverses. O(q log q).
cplx kloosterman_sum(int64_t m, int64_t n, uint64_t q);

// Ramanujan sum S(m,0;q), real by symmetry a <-> q-a.
double ramanujan_sum(int64_t m, uint64_t q);

// Weil's bound sqrt(q) * gcd(m,n,q)^(1/2) * tau(q).
double weil_bound(int64_t m, int64_t n, uint64_t q);

// Normalized values Kl(x,p) = S(x,1;p)/sqrt(p) for x = 0..p-1, computed in
// bulk with one length-p transform of a |-> e(abar/p) (O(p log p), not p^2).
struct KloostermanTable {
    uint64_t p = 0;
    std::vector<double> values;
    double max_imag_residue = 0.0;   // largest |Im| discarded; ~1e-12 expected

    double at(uint64_t x) const { return values[x % p]; }
};

KloostermanTable kloosterman_table(uint64_t p);

// V_p(y;a,b) = p^{-1/2} sum_x Kl(ax) Kl(bx) e(-yx/p), all y at once via one
// transform. Complex-valued in general; bounded uniformly in p for a != b,
// while V_p(0;a,a) grows like sqrt(p).
std::vector<cplx> vp_transform(const KloostermanTable& t, uint64_t a, uint64_t b);

struct KlMoment {
    double moment = 0.0;   // sum_m |sum_{n in subset} beta_n Kl(mn,p)|^(2 nu)
    double ratio = 0.0;    // moment / (|N|^nu p + |N|^(2 nu) sqrt(p))
};

KlMoment kl_moment(const KloostermanTable& t, unsigned nu,
                   const std::vector<uint32_t>& subset,
                   const std::vector<double>& beta);

// Incomplete Kloosterman sum over an integer interval [first, first+length):
//   sum_{n, (n,q)=1} e(h nbar / q).
struct IncompleteKl {
    cplx sum;
    double rstar_ratio;    // |sum| / (|I|^(1/2) gcd(h,q)^(1/2))
    double smooth_ratio;   // |sum| / (q^kappa |I|^(lambda-kappa) gcd(h,q)^nu); 0 if no pair given
};

IncompleteKl incomplete_kloosterman(int64_t h, uint64_t q, int64_t first, uint64_t length,
                                    const std::optional<ExponentPair>& pair = std::nullopt);

// tau(q) sqrt(q) (2 + log q): completion bound used as an unconditional
// ceiling in tests and scans.
double completion_bound(uint64_t q);

}  // namespace btlab
