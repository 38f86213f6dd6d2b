#include "btlab/congruence.hpp"

#include <cmath>
#include <stdexcept>

#include "btlab/modarith.hpp"

namespace btlab {

ProductBump::ProductBump(double n) : n_(n) {
    if (!(n > 0)) throw std::invalid_argument("ProductBump: N must be positive");
    // exp(4 - 1/(u(1-u))) on (0,1); trapezoid is spectrally accurate here.
    const int k = 1 << 14;
    double s = 0.0;
    for (int i = 1; i < k; ++i) {
        double u = (double)i / k;
        s += std::exp(4.0 - 1.0 / (u * (1.0 - u)));
    }
    line_integral_ = s * n_ / k;
}

double ProductBump::bump(double t) const {
    double u = (t - n_) / n_;
    if (u <= 0.0 || u >= 1.0) return 0.0;
    return std::exp(4.0 - 1.0 / (u * (1.0 - u)));
}

double ProductBump::operator()(double y, double z) const {
    return bump(y) * bump(z);
}

double ProductBump::integral() const {
    return line_integral_ * line_integral_;
}

CongruenceCount congruence_count(uint64_t q, uint64_t M, uint64_t N,
                                 const std::vector<double>& alpha,
                                 const std::vector<double>& beta,
                                 const Weight2D& F) {
    if (q < 1) throw std::invalid_argument("congruence_count: q must be >= 1");
    if (alpha.size() != M || beta.size() != M)
        throw std::invalid_argument("congruence_count: coefficients must cover ]M,2M]");
    if (M * N <= q)
        throw std::invalid_argument("congruence_count: requires M*N > q");

    // (m, n) pairs with (mn, q) = 1 bucketed by m*n mod q, separately
    // weighted by alpha (left side) and beta (right side).
    struct Entry { uint32_t n; double w; };
    std::vector<std::vector<Entry>> left(q), right(q);
    for (uint64_t m = M + 1; m <= 2 * M; ++m) {
        if (gcd_u64(m % q, q) != 1 && q > 1) continue;
        double am = alpha[m - M - 1], bm = beta[m - M - 1];
        for (uint64_t n = N + 1; n <= 2 * N; ++n) {
            if (q > 1 && gcd_u64(n % q, q) != 1) continue;
            uint64_t r = mulmod(m % q, n % q, q);
            left[r].push_back({(uint32_t)n, am});
            right[r].push_back({(uint32_t)n, bm});
        }
    }

    double R = 0.0;
    for (uint64_t r = 0; r < q; ++r) {
        for (const auto& e1 : left[r])
            for (const auto& e2 : right[r])
                R += e1.w * e2.w * F((double)e1.n, (double)e2.n);
    }

    double coeff_sum = 0.0;
    for (uint64_t m1 = M + 1; m1 <= 2 * M; ++m1) {
        if (q > 1 && gcd_u64(m1 % q, q) != 1) continue;
        for (uint64_t m2 = M + 1; m2 <= 2 * M; ++m2) {
            if (q > 1 && gcd_u64(m2 % q, q) != 1) continue;
            coeff_sum += alpha[m1 - M - 1] * beta[m2 - M - 1];
        }
    }
    double main = (double)euler_phi(q) / ((double)q * (double)q) * coeff_sum * F.integral();

    CongruenceCount out;
    out.q = q; out.M = M; out.N = N;
    out.r_exact = R;
    out.main_term = main;
    out.error = R - main;
    return out;
}

}  // namespace btlab
