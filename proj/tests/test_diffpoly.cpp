#include "doctest.h"

#include "zassen/diffpoly.hpp"

#include <random>

using namespace zassen;

namespace {

DiffPoly random_poly(std::mt19937_64 &rng)
{
    static const char *syms[] = {"x", "y", "f"};
    std::uniform_int_distribution<int> nterms(1, 3), coeff(-4, 4), deriv(0, 2), expn(1, 2), pick(0, 2);
    DiffPoly p;
    for (int t = 0, n = nterms(rng); t < n; ++t) {
        int c = coeff(rng);
        if (c == 0)
            continue;
        p += DiffPoly::term(Rational(c), Monomial::var(syms[pick(rng)], deriv(rng), expn(rng)));
    }
    if (p.is_zero())
        p = DiffPoly::var("x");
    return p;
}

} // namespace

TEST_CASE("monomials canonicalize")
{
    Monomial a = Monomial::var("x") * Monomial::var("y", 1);
    Monomial b = Monomial::var("y", 1) * Monomial::var("x");
    CHECK(a == b);
    CHECK(Monomial::var("x") * Monomial::var("x") == Monomial::var("x", 0, 2));
    CHECK(Monomial::var("1").is_unit());
    CHECK(Monomial::var("x", 0, 0).is_unit());
    CHECK_THROWS_AS(Monomial::var(""), std::invalid_argument);
}

TEST_CASE("ring operations")
{
    DiffPoly x = DiffPoly::var("x"), y = DiffPoly::var("y");
    CHECK(x * DiffPoly::one() == x);
    CHECK(x * y == y * x);
    CHECK((x + (-x)).is_zero());
    CHECK((x + y) * (x - y) == x * x - y * y);
}

TEST_CASE("derivation examples")
{
    DiffPoly x = DiffPoly::var("x"), y = DiffPoly::var("y");
    CHECK(derive(x) == DiffPoly::var("x", 1));
    CHECK(derive(x * y) == DiffPoly::var("x", 1) * y + x * DiffPoly::var("y", 1));
    // (Dx)^2 -> 2 Dx D2x, also checkable by expanding the square
    DiffPoly dx = DiffPoly::var("x", 1);
    CHECK(derive(dx * dx) == DiffPoly::var("x", 1) * DiffPoly::var("x", 2) * DiffPoly::constant(Rational(2)));
    CHECK(derive(DiffPoly::constant(Rational(5))).is_zero());
}

TEST_CASE("derive is a derivation (randomized)")
{
    std::mt19937_64 rng(42);
    for (int t = 0; t < 50; ++t) {
        DiffPoly p = random_poly(rng), q = random_poly(rng);
        CHECK(derive(p * q) == derive(p) * q + p * derive(q));
    }
}

TEST_CASE("iterated derivative distributes binomially")
{
    std::mt19937_64 rng(7);
    for (int t = 0; t < 10; ++t) {
        DiffPoly p = random_poly(rng), q = random_poly(rng);
        for (unsigned k = 0; k <= 6; ++k) {
            DiffPoly want;
            for (unsigned i = 0; i <= k; ++i)
                want += (derive(p, i) * derive(q, k - i)).scaled(binomial(k, i));
            CHECK(derive(p * q, k) == want);
        }
    }
}

TEST_CASE("printing")
{
    DiffPoly p = DiffPoly::var("f", 1).scaled(Rational(-1)) + DiffPoly::var("g", 3, 2).scaled(Rational(1, 2));
    CHECK(p.str() == "-D[f] + (1/2) D^3[g]^2");
    CHECK(DiffPoly::zero().str() == "0");
    CHECK(DiffPoly::one().str() == "1");
    CHECK(DiffPoly::var("V", 2).str() == "D^2[V]");
}

TEST_CASE("content extraction")
{
    DiffPoly p = DiffPoly::var("f").scaled(Rational(2, 3)) + DiffPoly::var("g").scaled(Rational(4, 3));
    CHECK(p.content() == Rational(2, 3));
    DiffPoly n = DiffPoly::var("f").scaled(Rational(-2)) + DiffPoly::var("g").scaled(Rational(-4));
    CHECK(n.content() == Rational(-2));
}
