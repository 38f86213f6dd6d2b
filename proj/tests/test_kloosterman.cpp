#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "btlab/kloosterman.hpp"
#include "btlab/modarith.hpp"
#include "btlab/prime_counts.hpp"
#include "btlab/rng.hpp"
#include "btlab/thresholds.hpp"

using namespace btlab;

TEST_CASE("direct sums at hand-checked points") {
    CHECK(kloosterman_sum(0, 0, 6).real() == doctest::Approx(2.0).epsilon(1e-12));   // phi(6)
    CHECK(kloosterman_sum(0, 0, 30).real() == doctest::Approx((double)euler_phi(30)));
    CHECK(ramanujan_sum(1, 5) == doctest::Approx(-1.0));
    // S(1,1;5) = (3 - sqrt 5)/2 with inverses 1,3,2,4
    auto s = kloosterman_sum(1, 1, 5);
    CHECK(s.real() == doctest::Approx((3.0 - std::sqrt(5.0)) / 2).epsilon(1e-12));
    CHECK(std::abs(s.imag()) < 1e-12);
    CHECK_THROWS_AS(kloosterman_sum(1, 1, 0), std::invalid_argument);
}

TEST_CASE("Ramanujan sums: gcd bound and Moebius values") {
    for (uint64_t q = 2; q <= 6; ++q)
        CHECK(ramanujan_sum(1, q) == doctest::Approx((double)mobius(q)).epsilon(1e-9));
    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        uint64_t q = 1 + rng.below(2000);
        int64_t m = rng.range(0, 4000);
        uint64_t mm = (uint64_t)(m % (int64_t)q);
        double bound = (double)gcd_u64(mm == 0 ? q : mm, q);
        CHECK(std::abs(ramanujan_sum(m, q)) <= bound + 1e-9);
    }
    CHECK(std::abs(ramanujan_sum(3, 6)) <= 3.0 + 1e-12);
}

TEST_CASE("Weil bound, reality, symmetry") {
    Rng rng(5);
    auto primes = primes_up_to(2003);
    int prime_cases = 0;
    while (prime_cases < 300) {
        uint64_t p = primes[rng.below(primes.size())];
        if (p == 2) continue;
        int64_t m = rng.range(1, (int64_t)p - 1);
        int64_t n = rng.range(1, (int64_t)p - 1);
        ++prime_cases;
        auto s = kloosterman_sum(m, n, p);
        CHECK(std::abs(s) <= 2.0 * std::sqrt((double)p) + 1e-9);
    }
    int comp_cases = 0;
    while (comp_cases < 100) {
        uint64_t q = 6 + rng.below(4995);
        auto fs = factorize(q);
        bool sf = fs.size() >= 2;
        for (auto [p, e] : fs) sf = sf && e == 1;
        if (!sf) continue;
        ++comp_cases;
        int64_t m = rng.range(0, (int64_t)q - 1), n = rng.range(0, (int64_t)q - 1);
        CHECK(std::abs(kloosterman_sum(m, n, q)) <= weil_bound(m, n, q) + 1e-6);
    }
    for (int i = 0; i < 100; ++i) {
        uint64_t q = 2 + rng.below(400);
        int64_t m = rng.range(-500, 500), n = rng.range(-500, 500);
        auto a = kloosterman_sum(m, n, q);
        auto b = kloosterman_sum(n, m, q);
        CHECK(std::abs(a.imag()) < 1e-9);
        CHECK(std::abs(a - b) < 1e-9);
    }
}

TEST_CASE("twisted multiplicativity across coprime moduli") {
    // S(m,n;q1*q2) = S(m*q2bar^2, n; q1) * S(m*q1bar^2, n; q2)
    Rng rng(9);
    int cases = 0;
    while (cases < 60) {
        uint64_t q1 = 2 + rng.below(49), q2 = 2 + rng.below(49);
        if (gcd_u64(q1, q2) != 1) continue;
        ++cases;
        int64_t m = rng.range(0, 200), n = rng.range(0, 200);
        uint64_t q2bar = invmod(q2 % q1 == 0 ? 1 : q2, q1);
        uint64_t q1bar = invmod(q1 % q2 == 0 ? 1 : q1, q2);
        auto lhs = kloosterman_sum(m, n, q1 * q2);
        auto rhs = kloosterman_sum((int64_t)mulmod(mulmod(q2bar, q2bar, q1),
                                                   (uint64_t)(((m % (int64_t)q1) + (int64_t)q1) % (int64_t)q1), q1),
                                   n, q1)
                 * kloosterman_sum((int64_t)mulmod(mulmod(q1bar, q1bar, q2),
                                                   (uint64_t)(((m % (int64_t)q2) + (int64_t)q2) % (int64_t)q2), q2),
                                   n, q2);
        CHECK(std::abs(lhs - rhs) < 1e-7 * std::max(1.0, std::abs(lhs)));
    }
}

TEST_CASE("bulk table agrees with the direct-summation oracle") {
    Rng rng(13);
    for (uint64_t p : {101ull, 499ull, 1009ull}) {
        auto t = kloosterman_table(p);
        CHECK(t.max_imag_residue < 1e-9);
        CHECK(t.at(0) == doctest::Approx(-1.0 / std::sqrt((double)p)).epsilon(1e-9));
        double rp = std::sqrt((double)p);
        for (uint64_t x : {(uint64_t)1, (uint64_t)2, p - 1}) {
            double direct = kloosterman_sum((int64_t)x, 1, p).real() / rp;
            CHECK(std::abs(direct - t.at(x)) < 1e-9);
        }
        for (int i = 0; i < 10; ++i) {
            uint64_t x = rng.below(p);
            double direct = kloosterman_sum((int64_t)x, 1, p).real() / rp;
            CHECK(std::abs(direct - t.at(x)) < 1e-9);
        }
        double maxv = 0;
        for (uint64_t x = 1; x < p; ++x) maxv = std::max(maxv, std::abs(t.values[x]));
        CHECK(maxv <= 2.0);
    }
    CHECK_THROWS_AS(kloosterman_table(100), std::invalid_argument);
    CHECK_THROWS_AS(kloosterman_table(2), std::invalid_argument);
}

TEST_CASE("V_p transform: Plancherel, boundedness off the diagonal, growth on it") {
    Rng rng(17);
    for (uint64_t p : {101ull, 211ull, 401ull}) {
        auto t = kloosterman_table(p);
        for (int rep = 0; rep < 4; ++rep) {
            uint64_t a = 1 + rng.below(p - 1), b = 1 + rng.below(p - 1);
            auto V = vp_transform(t, a, b);
            double lhs = 0, rhs = 0;
            for (const auto& v : V) lhs += std::norm(v);
            for (uint64_t x = 0; x < p; ++x) {
                double r = t.values[mulmod(a, x, p)] * t.values[mulmod(b, x, p)];
                rhs += r * r;
            }
            CHECK(std::abs(lhs - rhs) < 1e-8);
            if (a != b) {
                double mx = 0;
                for (const auto& v : V) mx = std::max(mx, std::abs(v));
                CHECK(mx < thresholds::kVpOffDiagonalMax);
            }
        }
        auto D = vp_transform(t, 7 % p, 7 % p);
        CHECK(std::abs(D[0]) >= thresholds::kVpDiagonalMinRatio * std::sqrt((double)p));
    }
    auto t = kloosterman_table(101);
    CHECK_THROWS_AS(vp_transform(t, 0, 5), std::invalid_argument);
    CHECK_THROWS_AS(vp_transform(t, 5, 101), std::invalid_argument);
}

TEST_CASE("moments of Kloosterman averages") {
    auto t101 = kloosterman_table(101);
    auto m1 = kl_moment(t101, 1, {1}, {1.0});
    // sum of Kl^2 over the prime field is ~ p; ratio against p + sqrt(p)
    CHECK(m1.ratio <= thresholds::kKlMomentNu1Ratio);
    CHECK(m1.moment == doctest::Approx(100.0).epsilon(1e-6));

    auto t499 = kloosterman_table(499);
    Rng rng(23);
    for (int rep = 0; rep < 10; ++rep) {
        std::vector<uint32_t> subset;
        std::vector<double> beta;
        while (subset.size() < 20) {
            uint32_t n = (uint32_t)rng.below(499);
            if (!n) continue;
            subset.push_back(n);
            beta.push_back(rng.coin() ? 1.0 : -1.0);
        }
        auto m = kl_moment(t499, 2, subset, beta);
        CHECK(m.ratio <= thresholds::kKlMomentNu2Ratio);
    }

    auto empty = kl_moment(t101, 1, {}, {});
    CHECK(empty.moment == 0.0);
    CHECK(empty.ratio == 0.0);
    CHECK_THROWS_AS(kl_moment(t101, 0, {1}, {1.0}), std::invalid_argument);
}

TEST_CASE("incomplete Kloosterman sums") {
    // h = 0 mod q degenerates to counting coprime n in I
    auto z = incomplete_kloosterman(0, 12, 1, 12);
    CHECK(z.sum.real() == doctest::Approx(4.0).epsilon(1e-12));   // phi(12)
    CHECK(std::abs(z.sum) <= 12.0);

    auto r = incomplete_kloosterman(1, 30030, 1, 3000);
    CHECK(std::abs(r.sum) <= completion_bound(30030));

    // completion bound confirmed by brute force on moderate smooth moduli
    Rng rng(29);
    for (uint64_t q : {210ull, 1155ull, 2310ull}) {
        for (int i = 0; i < 12; ++i) {
            int64_t h = rng.range(1, (int64_t)q - 1);
            uint64_t len = 2 + rng.below(q - 2);
            auto rr = incomplete_kloosterman(h, q, (int64_t)rng.below(q), len);
            CHECK(std::abs(rr.sum) <= completion_bound(q));
        }
    }

    // smooth ratio denominator uses the supplied pair
    auto pair = eval_word("AB");
    auto s = incomplete_kloosterman(1, 30030, 1, 3000, pair);
    double denom = std::pow(30030.0, 1.0 / 6) * std::pow(3000.0, 2.0 / 3 - 1.0 / 6);
    CHECK(s.smooth_ratio == doctest::Approx(std::abs(s.sum) / denom).epsilon(1e-12));

    CHECK_THROWS_AS(incomplete_kloosterman(1, 100, 0, 101), std::invalid_argument);
    CHECK_THROWS_AS(incomplete_kloosterman(1, 100, 0, 1), std::invalid_argument);
}
