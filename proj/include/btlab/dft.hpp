#pragma once

#include <complex>
#include <vector>

namespace btlab {

using cplx = std::complex<double>;

// In-place iterative radix-2 transform; size must be a power of two.
// sign = -1: X_k = sum a_j exp(-2*pi*i*jk/n); sign = +1: the adjoint
// (no 1/n normalization).
void fft_pow2(std::vector<cplx>& a, int sign);

// Discrete Fourier transform of arbitrary length via the chirp-z
// (Bluestein) factorization: X_k = sum_j a_j exp(sign * 2*pi*i*jk/n).
// O(n log n) for every n, prime lengths included.
std::vector<cplx> dft_any(const std::vector<cplx>& a, int sign);

}  // namespace btlab
