#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "netdyn/errors.hpp"
#include "netdyn/rational.hpp"

using namespace netdyn;

TEST_CASE("exact arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 4) == Rational(3, 4));
    CHECK(min(Rational(7, 8), Rational(15, 16)) == Rational(7, 8));
    CHECK((Rational(1, 4) - Rational(1, 2)).abs() == Rational(1, 4));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(3, 7) * Rational(7, 3) == Rational(1));
    CHECK(Rational(1) / Rational(3) == Rational(1, 3));
    CHECK(max(Rational(-1, 2), Rational(-1, 3)) == Rational(-1, 3));
    CHECK(Rational(-4, 6).to_string() == "-2/3");
}

TEST_CASE("comparisons are exact") {
    CHECK(Rational(1, 3) < Rational(34, 100));
    CHECK(Rational(1, 3).cmp(Rational(33, 99)) == 0);
    CHECK(Rational(-1, 2).sign() == -1);
    CHECK(Rational(0).is_zero());
    CHECK(Rational(0).to_string() == "0/1");
}

TEST_CASE("parse forms") {
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("0.375") == Rational(3, 8));
    CHECK(Rational::parse("1.5") == Rational(3, 2));
    CHECK(Rational::parse("6/8").to_string() == "3/4");
    CHECK_THROWS_AS(Rational::parse("1/0"), ConfigError);
    CHECK_THROWS_AS(Rational::parse(""), ConfigError);
    CHECK_THROWS_AS(Rational::parse("a/b"), ConfigError);
    CHECK_THROWS_AS(Rational::parse("1/2/3"), ConfigError);
}

TEST_CASE("pow2 and pow") {
    CHECK(Rational::pow2(3) == Rational(8));
    CHECK(Rational::pow2(-3) == Rational(1, 8));
    CHECK(Rational::pow2(0) == Rational(1));
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(5).pow(0) == Rational(1));
}

TEST_CASE("floor and mod1") {
    CHECK(Rational(7, 2).floor() == Rational(3));
    CHECK(Rational(-7, 2).floor() == Rational(-4));
    CHECK(Rational(3).floor() == Rational(3));
    CHECK(Rational(5, 4).mod1() == Rational(1, 4));
    CHECK(Rational(-1, 4).mod1() == Rational(3, 4));
    CHECK(Rational(2).mod1() == Rational(0));
}

TEST_CASE("round trip stays canonical") {
    const char* vals[] = {"0/1", "1/2", "-22/7", "355/113", "123456789/2"};
    for (const char* v : vals) CHECK(Rational::parse(v).to_string() == v);
}

TEST_CASE("division by zero refused") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), ContractError);
}

TEST_CASE("no overflow on large products") {
    Rational big = Rational::parse("9223372036854775807/2");  // int64 max numerator
    Rational sq = big * big;
    CHECK(sq > big);
    int64_t n, d;
    CHECK_FALSE(sq.fits_int64(n, d));
    CHECK(sq / big == big);
}
