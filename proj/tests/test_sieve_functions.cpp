#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "btlab/sieve_functions.hpp"

using namespace btlab;

namespace {
const double eg = std::exp(kEulerGamma);
}

TEST_CASE("closed-form anchor values") {
    SieveTable t(10.0, 0.001);
    CHECK(t.F_of(2.0) == doctest::Approx(eg).epsilon(1e-12));
    CHECK(t.F_of(3.0) == doctest::Approx(2 * eg / 3).epsilon(1e-10));
    CHECK(t.F_of(2.5) == doctest::Approx(2 * eg / 2.5).epsilon(1e-10));
    CHECK(t.f_of(4.0) == doctest::Approx(eg * std::log(3.0) / 2).epsilon(1e-10));
    CHECK(t.f_of(1.5) == 0.0);
    CHECK(t.F_of(0.5) == doctest::Approx(4 * eg));   // closed form below 2
}

TEST_CASE("solver matches closed forms to 1e-8 at step 1e-3") {
    SieveTable t(10.0, 0.001);
    // F = 2 e^gamma / s on (0,3]; f = 2 e^gamma log(s-1)/s on [2,4],
    // checked at grid points (off-grid lookups add the documented
    // linear-interpolation error)
    double worstF = 0, worstf = 0;
    for (size_t i = 0; i < t.size(); ++i) {
        double s = t.grid_s(i);
        if (s <= 3.0) worstF = std::max(worstF, std::abs(t.F_values()[i] - 2 * eg / s));
        if (s <= 4.0)
            worstf = std::max(worstf, std::abs(t.f_values()[i] - 2 * eg * std::log(s - 1.0) / s));
    }
    CHECK(worstF < 1e-8);
    CHECK(worstf < 1e-8);
    // between grid points the lookup interpolates linearly: O(step^2) error
    for (double s = 2.0; s <= 4.0; s += 0.0173) {
        double want = s <= 3.0 ? 2 * eg / s : t.F_of(s);
        CHECK(std::abs(t.F_of(s) - want) < 1e-6);
        CHECK(std::abs(t.f_of(s) - 2 * eg * std::log(s - 1.0) / s) < 1e-6);
    }
}

TEST_CASE("bracketing and monotonicity on the grid") {
    SieveTable t(10.0, 0.001);
    const auto& F = t.F_values();
    const auto& f = t.f_values();
    for (size_t i = 0; i < F.size(); ++i) {
        CHECK(f[i] <= 1.0 + 1e-12);
        CHECK(F[i] >= 1.0 - 1e-12);
        CHECK(f[i] >= 0.0);
        if (i) {
            CHECK(F[i] <= F[i - 1] + 1e-12);
            CHECK(f[i] >= f[i - 1] - 1e-12);
        }
    }
}

TEST_CASE("rapid convergence to 1") {
    SieveTable t(10.0, 0.001);
    CHECK(std::abs(t.F_of(8.0) - 1.0) < 1e-2);
    CHECK(std::abs(t.f_of(8.0) - 1.0) < 1e-2);
}

TEST_CASE("grid halving changes values by at most 1e-6") {
    SieveTable coarse(10.0, 0.01), fine(10.0, 0.005);
    for (size_t i = 0; i < coarse.size(); ++i) {
        double s = coarse.grid_s(i);
        if (s > 10.0) break;
        CHECK(std::abs(coarse.F_values()[i] - fine.F_of(s)) <= 1e-6);
        CHECK(std::abs(coarse.f_values()[i] - fine.f_of(s)) <= 1e-6);
    }
}

TEST_CASE("input validation") {
    CHECK_THROWS_AS(SieveTable(10.0, 0.02), std::invalid_argument);
    CHECK_THROWS_AS(SieveTable(10.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(SieveTable(1.5, 0.01), std::invalid_argument);
    SieveTable t(5.0, 0.01);
    CHECK_THROWS_AS(t.F_of(0.0), std::domain_error);
    CHECK_THROWS_AS(t.F_of(5.5), std::domain_error);
    CHECK_THROWS_AS(t.f_of(-1.0), std::domain_error);
}

TEST_CASE("csv emission") {
    SieveTable t(3.0, 0.01);
    std::ostringstream os;
    t.write_csv(os);
    std::string s = os.str();
    CHECK(s.substr(0, 6) == "s,F,f\n");
    CHECK(s.find("\n2,1.78107241799,0\n") != std::string::npos);
}
