#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "btlab/rational.hpp"

using btlab::Rational;

TEST_CASE("canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(6, 3).str() == "2");
}

TEST_CASE("arithmetic is exact") {
    Rational a(1, 6), b(2, 3);
    CHECK(a + b == Rational(5, 6));
    CHECK(b - a == Rational(1, 2));
    CHECK(a * b == Rational(1, 9));
    CHECK(a / b == Rational(1, 4));
    CHECK((-a).str() == "-1/6");
    CHECK(Rational(1, 3) + Rational(1, 3) + Rational(1, 3) == Rational(1));
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("parse accepts p/q, integers and decimals") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("6/8") == Rational(3, 4));
    CHECK(Rational::parse("17") == Rational(17));
    CHECK(Rational::parse("-2") == Rational(-2));
    CHECK(Rational::parse("0.125") == Rational(1, 8));
    CHECK(Rational::parse("-0.5") == Rational(-1, 2));
    CHECK(Rational::parse(".25") == Rational(1, 4));
    CHECK(Rational::parse("0.829021") == Rational(829021, 1000000));
    CHECK(Rational::parse("0.46") == Rational(23, 50));
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.2.3"), std::invalid_argument);
}

TEST_CASE("ordering and pow") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(5).pow(0) == Rational(1));
    CHECK(Rational(-1, 2).abs() == Rational(1, 2));
}

TEST_CASE("decimal rounding and rendering") {
    Rational v(124, 37);   // 3.3513513...
    CHECK(v.round_decimal(4) == Rational(33514, 10000));
    CHECK(v.trunc_decimal(4) == Rational(33513, 10000));
    CHECK(v.decimal_str(4) == "3.3514");
    CHECK(Rational(248, 75).decimal_str(4) == "3.3067");
    CHECK(Rational(1, 75).decimal_str(4) == "0.0133");
    CHECK(Rational(-124, 37).round_decimal(4) == Rational(-33514, 10000));
    CHECK(Rational(-124, 37).decimal_str(2) == "-3.35");
    CHECK(Rational(5, 2).round_decimal(0) == Rational(3));   // half away from zero
    CHECK(Rational(-5, 2).round_decimal(0) == Rational(-3));
    CHECK(Rational(2).decimal_str(1) == "2.0");
}
