#include "doctest.h"

#include "zassen/rational.hpp"

using namespace zassen;

TEST_CASE("rationals stay reduced with positive denominators")
{
    Rational r(6, -4);
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(r.str() == "-3/2");
    CHECK(Rational(4, 2).str() == "2");
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational arithmetic is exact")
{
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-1, 3));
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);
}

TEST_CASE("parse handles fractions, integers and decimals")
{
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("1.25") == Rational(5, 4));
    CHECK(Rational::parse("-0.5") == Rational(-1, 2));
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
}

TEST_CASE("ceil and floor")
{
    CHECK(Rational(7, 2).ceil() == 4);
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(3).ceil() == 3);
}

TEST_CASE("binomial convention vanishes outside the triangle")
{
    CHECK(binomial(5, 2) == Rational(10));
    CHECK(binomial(5, -1) == Rational(0));
    CHECK(binomial(5, 6) == Rational(0));
    CHECK(binomial(0, 0) == Rational(1));
    CHECK(factorial(6) == 720);
}
