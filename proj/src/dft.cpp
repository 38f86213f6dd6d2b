#include "btlab/dft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace btlab {

void fft_pow2(std::vector<cplx>& a, int sign) {
    size_t n = a.size();
    if (n == 0 || (n & (n - 1)))
        throw std::invalid_argument("fft_pow2: size must be a power of two");
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (size_t len = 2; len <= n; len <<= 1) {
        double ang = sign * 2.0 * std::numbers::pi / (double)len;
        cplx wl(std::cos(ang), std::sin(ang));
        for (size_t i = 0; i < n; i += len) {
            cplx w(1.0);
            for (size_t k = 0; k < len / 2; ++k) {
                cplx u = a[i + k];
                cplx v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

namespace {

// Chirp factors c_j = exp(sign * pi * i * j^2 / n); j^2 is reduced mod 2n
// before touching floating point so the angle never loses precision.
cplx chirp(uint64_t j, uint64_t n, int sign) {
    uint64_t j2 = (uint64_t)((__uint128_t)j * j % (2 * n));
    double ang = sign * std::numbers::pi * (double)j2 / (double)n;
    return {std::cos(ang), std::sin(ang)};
}

}  // namespace

std::vector<cplx> dft_any(const std::vector<cplx>& a, int sign) {
    size_t n = a.size();
    if (n == 0) return {};
    if ((n & (n - 1)) == 0) {
        std::vector<cplx> out = a;
        fft_pow2(out, sign);
        return out;
    }
    // jk = (j^2 + k^2 - (k-j)^2) / 2 turns the transform into a linear
    // convolution of a_j c_j against conj(c), done in a padded power of two.
    size_t m = 1;
    while (m < 2 * n - 1) m <<= 1;
    std::vector<cplx> x(m, cplx(0)), y(m, cplx(0));
    for (size_t j = 0; j < n; ++j) x[j] = a[j] * chirp(j, n, sign);
    for (size_t j = 0; j < n; ++j) {
        cplx c = chirp(j, n, -sign);
        y[j] = c;
        if (j) y[m - j] = c;
    }
    fft_pow2(x, -1);
    fft_pow2(y, -1);
    for (size_t i = 0; i < m; ++i) x[i] *= y[i];
    fft_pow2(x, +1);
    std::vector<cplx> out(n);
    for (size_t k = 0; k < n; ++k) out[k] = x[k] * chirp(k, n, sign) / (double)m;
    return out;
}

}  // namespace btlab
