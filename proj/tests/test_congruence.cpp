#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "btlab/congruence.hpp"
#include "btlab/modarith.hpp"
#include "btlab/thresholds.hpp"

using namespace btlab;

namespace {

// Plain quadruple loop straight from the definition; the implementation
// under test uses a residue-bucket join instead.
double quadruple_loop(uint64_t q, uint64_t M, uint64_t N,
                      const std::vector<double>& alpha,
                      const std::vector<double>& beta, const Weight2D& F) {
    double R = 0;
    for (uint64_t m1 = M + 1; m1 <= 2 * M; ++m1) {
        if (gcd_u64(m1 % q == 0 ? q : m1 % q, q) != 1) continue;
        for (uint64_t m2 = M + 1; m2 <= 2 * M; ++m2) {
            if (gcd_u64(m2 % q == 0 ? q : m2 % q, q) != 1) continue;
            for (uint64_t n1 = N + 1; n1 <= 2 * N; ++n1) {
                if (gcd_u64(n1 % q == 0 ? q : n1 % q, q) != 1) continue;
                for (uint64_t n2 = N + 1; n2 <= 2 * N; ++n2) {
                    if (gcd_u64(n2 % q == 0 ? q : n2 % q, q) != 1) continue;
                    if (mulmod(m1 % q, n1 % q, q) != mulmod(m2 % q, n2 % q, q)) continue;
                    R += alpha[m1 - M - 1] * beta[m2 - M - 1] * F((double)n1, (double)n2);
                }
            }
        }
    }
    return R;
}

}  // namespace

TEST_CASE("bump weight integral") {
    ProductBump F(100);
    CHECK(F(150, 150) > 0);
    CHECK(F(100, 150) == 0.0);     // support is open at the left edge
    CHECK(F(201, 150) == 0.0);
    CHECK(F.integral() > 0);
    // doubling N scales the line integral linearly, the area by 4
    ProductBump G(200);
    CHECK(G.integral() == doctest::Approx(4 * F.integral()).epsilon(1e-9));
}

TEST_CASE("bucket join equals the quadruple loop") {
    ProductBump F(20);
    std::vector<double> alpha = {0.5, -1.0, 1.0, 0.25, 1.0};
    std::vector<double> beta = {1.0, 1.0, -0.5, 1.0, 0.75};
    auto c = congruence_count(11, 5, 20, alpha, beta, F);
    double oracle = quadruple_loop(11, 5, 20, alpha, beta, F);
    CHECK(c.r_exact == doctest::Approx(oracle).epsilon(1e-12));
}

TEST_CASE("q = 1: no congruence constraint, main term from the lattice/integral gap") {
    std::vector<double> a(5, 1.0);
    ProductBump F(40);
    auto c = congruence_count(1, 5, 40, a, a, F);
    // R collapses to (sum alpha)(sum beta) * sum over the lattice of F
    double lat = 0;
    for (uint64_t n1 = 41; n1 <= 80; ++n1)
        for (uint64_t n2 = 41; n2 <= 80; ++n2) lat += F((double)n1, (double)n2);
    CHECK(c.r_exact == doctest::Approx(25.0 * lat).epsilon(1e-12));
    CHECK(c.main_term == doctest::Approx(25.0 * F.integral()).epsilon(1e-12));
    CHECK(c.rel_error() < 1e-5);
}

TEST_CASE("reference configuration stays under the frozen threshold and improves with N") {
    std::vector<double> alpha(20, 1.0), beta(20, 1.0);
    ProductBump F200(200), F400(400);
    auto c200 = congruence_count(53, 20, 200, alpha, beta, F200);
    auto c400 = congruence_count(53, 20, 400, alpha, beta, F400);
    CHECK(c200.rel_error() <= thresholds::kCongruenceRelError);
    CHECK(c400.rel_error() < c200.rel_error());
}

TEST_CASE("input validation") {
    std::vector<double> a(5, 1.0);
    ProductBump F(10);
    CHECK_THROWS_AS(congruence_count(1000, 5, 10, a, a, F), std::invalid_argument);  // MN <= q
    CHECK_THROWS_AS(congruence_count(3, 4, 10, a, a, F), std::invalid_argument);     // size mismatch
    CHECK_THROWS_AS(ProductBump(0), std::invalid_argument);
}
