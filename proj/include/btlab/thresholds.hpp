#pragma once

// Frozen empirical ceilings for the "bounded up to a constant" checks.
// Each value was fixed from a brute-force sweep run before the test suite
// was written (the CLI can reproduce every sweep; see README). They encode
// observed maxima with headroom, not proved constants; hard mathematical
// bounds (Weil, Ramanujan, large sieve, completion) are asserted directly
// and never use this file.

namespace btlab::thresholds {

// max_y |V_p(y;a,b)| over all a != b, full scan p in {11,...,101}
// (observed 2.078) and 200-pair samples at p in {211, 401, 809}
// (observed <= 2.064).
inline constexpr double kVpOffDiagonalMax = 2.6;

// Lower bar for the degenerate direction: V_p(0;a,a)/sqrt(p) observed
// >= 0.990 for p >= 101.
inline constexpr double kVpDiagonalMinRatio = 0.8;

// Moment ratio for nu=2, |subset|=20, +-1 coefficients; sweep over
// p in {101, 199, 307, 401, 499}, 40 draws each (observed 0.211).
inline constexpr double kKlMomentNu2Ratio = 0.5;

// Moment ratio for nu=1, subset={1} (observed 0.9005 at p=101).
inline constexpr double kKlMomentNu1Ratio = 2.0;

// Incomplete Kloosterman |sum| / (|I|^(1/2) (h,q)^(1/2)) at q = 30030,
// 500 seeded random (h, I) (observed 1.751).
inline constexpr double kRStarRatioMax = 2.5;

// Incomplete character sum |sum| / (q^(1/6) |I|^(1/2)) at q = 30030,
// |I| = q^0.4, all characters with index < 200 (observed 0.164).
inline constexpr double kCharSumSmoothRatio = 0.5;

// Relative error of the congruence count against its main term at
// q=53, M=20, N=200, all-ones coefficients, product bump
// (observed 4.07e-4; halves of it at N=400: 1.76e-5).
inline constexpr double kCongruenceRelError = 5e-3;

}  // namespace btlab::thresholds
