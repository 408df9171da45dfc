#include "doctest.h"

#include "zassen/expr.hpp"

#include <cmath>
#include <random>

using namespace zassen;

TEST_CASE("parser accepts the grammar")
{
    CHECK(ClosedExpr::parse("cos(pi*x)").str() == "cos(pi*x)");
    CHECK(ClosedExpr::parse("1+x^2").str() == "1+x^2");
    CHECK(ClosedExpr::parse("2*(x+1)^3 / sin(x)").eval(0.5) ==
          doctest::Approx(2.0 * std::pow(1.5, 3) / std::sin(0.5)));
    CHECK(ClosedExpr::parse("-x").eval(2.0) == -2.0);
    CHECK(ClosedExpr::parse("x^-2").eval(2.0) == doctest::Approx(0.25));
    CHECK(ClosedExpr::parse("0.5*x").eval(3.0) == doctest::Approx(1.5));
}

TEST_CASE("parse errors carry 1-based columns")
{
    try {
        ClosedExpr::parse("cos(q*x)");
        FAIL("expected parse_error");
    } catch (const parse_error &e) {
        CHECK(e.column == 5);
        CHECK(std::string(e.what()).find("unknown identifier 'q'") != std::string::npos);
    }
    CHECK_THROWS_AS(ClosedExpr::parse("sin x"), parse_error);
    CHECK_THROWS_AS(ClosedExpr::parse("1+"), parse_error);
    CHECK_THROWS_AS(ClosedExpr::parse("(1+x"), parse_error);
    CHECK_THROWS_AS(ClosedExpr::parse("x^"), parse_error);
    CHECK_THROWS_AS(ClosedExpr::parse("x 1"), parse_error);
}

TEST_CASE("derivatives")
{
    ClosedExpr e = ClosedExpr::parse("cos(pi*x)");
    ClosedExpr d = e.derivative();
    for (double x : {-0.9, -0.3, 0.1, 0.7})
        CHECK(d.eval(x) == doctest::Approx(-M_PI * std::sin(M_PI * x)).epsilon(1e-12));

    CHECK(ClosedExpr::parse("x^2").derivative(3).is_zero());
    CHECK(e.derivative(0).same_as(e));
}

TEST_CASE("print/parse is idempotent on canonical forms")
{
    for (const char *text : {"cos(pi*x)", "1+x^2", "x*sin(x)-2/x", "exp(x^2)*(1-x)",
                             "-cos(2*x)", "x/(1+x^2)"}) {
        ClosedExpr e = ClosedExpr::parse(text);
        ClosedExpr round = ClosedExpr::parse(e.str());
        CHECK(round.same_as(e));
        CHECK(round.str() == e.str());
    }
}

TEST_CASE("derivative agrees with central differences")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> xs(-0.95, 0.95);
    const double h = 1e-5;
    for (const char *text : {"cos(pi*x)", "exp(sin(x))", "(1+x^2)^3", "x^2/(2+cos(x))"}) {
        ClosedExpr e = ClosedExpr::parse(text);
        ClosedExpr d = e.derivative();
        for (int t = 0; t < 100; ++t) {
            double x = xs(rng);
            double fd = (e.eval(x + h) - e.eval(x - h)) / (2 * h);
            double exact = d.eval(x);
            double denom = std::max(1.0, std::abs(exact));
            CHECK(std::abs(fd - exact) / denom < 1e-6);
        }
    }
}
