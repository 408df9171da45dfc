#include "doctest.h"

#include "zassen/splitting.hpp"

using namespace zassen;

namespace {

FTerm kinetic() { return ang(DiffPoly::one(), 2, ScaledScalar(Rational(1), 1, 1, 1)); }
FTerm potential() { return ang(DiffPoly::var("V"), 0, ScaledScalar(Rational(-1), 1, 1, -1)); }

} // namespace

TEST_CASE("n = 0 gives the exponential-midpoint pair")
{
    Splitting sp = zassenhaus(kinetic(), potential(), 0, Rational(1, 2));
    REQUIRE(sp.exponents.size() == 2);
    CHECK(sp.exponents[0] == kinetic());
    CHECK(sp.exponents[1] == potential());
    CHECK(sp.order_target == Rational(1, 2));
}

TEST_CASE("n = 1 peels the negated sBCH t^3 block into W[2]")
{
    for (const Rational &sigma : {Rational(1, 2), Rational(1)}) {
        Splitting sp = zassenhaus(kinetic(), potential(), 1, sigma);
        REQUIRE(sp.exponents.size() == 3);
        FTerm want = ang(DiffPoly::var("V", 2), 2, ScaledScalar(Rational(1, 6), 1, 3, 1)) +
                     ang(DiffPoly::var("V", 4), 0, ScaledScalar(Rational(-1, 24), 1, 3, 1)) +
                     ang(DiffPoly::var("V", 1, 2), 0, ScaledScalar(Rational(1, 6), 1, 3, -1));
        CHECK(sp.exponents[2] == want);
    }
}

TEST_CASE("recomposition reproduces exp(a+b) at the series truncation")
{
    for (unsigned n : {0u, 1u, 2u}) {
        Splitting sp = zassenhaus(kinetic(), potential(), n, Rational(1, 2));
        const unsigned trunc = 2 * n + 1;
        ExpSeries target = exp_series(ExpSeries::from_fterm(kinetic() + potential(), trunc));
        ExpSeries prod = ExpSeries::identity(trunc);
        for (size_t k = 0; k + 1 < sp.exponents.size(); ++k)
            prod = prod * exp_series(ExpSeries::from_fterm(sp.exponents[k].scaled(Rational(1, 2)), trunc));
        prod = prod * exp_series(ExpSeries::from_fterm(sp.exponents.back(), trunc));
        for (size_t k = sp.exponents.size() - 1; k-- > 0;)
            prod = prod * exp_series(ExpSeries::from_fterm(sp.exponents[k].scaled(Rational(1, 2)), trunc));
        CHECK(prod == target);
    }
}

TEST_CASE("exponent invariants")
{
    Splitting sp = zassenhaus(kinetic(), potential(), 2, Rational(1, 2));
    REQUIRE(sp.exponents.size() == 4);
    for (size_t k = 0; k < sp.exponents.size(); ++k) {
        const FTerm &w = sp.exponents[k];
        CHECK(skew_hermitian_check(w));
        CHECK(lies_in(w, Parity::even));
        if (k >= 2)
            CHECK(w.height() <= 2 * (int)k - 2);
        if (k >= 1)
            CHECK(sp.exponent_order(k) == Rational(2 * (long long)k - 1) * sp.sigma - Rational(1));
    }
    auto orders = sp.derivative_orders();
    for (unsigned d : {0u, 1u, 2u, 4u})
        CHECK(orders.count(d) == 1);
    // a grade-(2k-1) commutator with 2k-2 kinetic letters differentiates V up to 4k-4 times
    CHECK(*orders.rbegin() <= 8);

    Splitting n1 = zassenhaus(kinetic(), potential(), 1, Rational(1, 2));
    CHECK(n1.derivative_orders() == std::set<unsigned>{0, 1, 2, 4});
}

TEST_CASE("splitting preconditions")
{
    CHECK_THROWS_AS(zassenhaus(kinetic(), potential(), 1, Rational(0)), std::domain_error);
    CHECK_THROWS_AS(zassenhaus(kinetic(), potential(), 1, Rational(-1, 2)), std::domain_error);
    FTerm odd_height = ang(DiffPoly::var("f"), 1, ScaledScalar(Rational(1), 0, 1, 0));
    CHECK_THROWS_AS(zassenhaus(odd_height, potential(), 1, Rational(1)), std::domain_error);
    FTerm no_t = ang(DiffPoly::one(), 2);
    CHECK_THROWS_AS(zassenhaus(no_t, potential(), 1, Rational(1)), std::domain_error);
}

TEST_CASE("lanczos iteration counts")
{
    Splitting half = zassenhaus(kinetic(), potential(), 1, Rational(1, 2));
    CHECK(half.lanczos_iterations(2) == 3); // ceil((3/2)/(1/2))
    Splitting one = zassenhaus(kinetic(), potential(), 1, Rational(1));
    CHECK(one.lanczos_iterations(2) == 2); // ceil(4/2)
    CHECK_THROWS_AS(one.lanczos_iterations(1), std::out_of_range);
}

TEST_CASE("cost model")
{
    CHECK(cost(1, Rational(1)) == 12);
    CHECK(cost(2, Rational(1)) == 44);
    CHECK_THROWS_AS(cost(0, Rational(1)), std::domain_error);
    CHECK_THROWS_AS(cost(1, Rational(1, 3)), std::domain_error); // 3*sigma - 1 = 0
    for (unsigned n = 1; n <= 50; ++n)
        CHECK(cost(n, Rational(1)) <= 12LL * n * n + 4LL * n - 4);
    for (unsigned n = 5; n <= 50; ++n) {
        double ratio = (double)cost(n, Rational(1)) / double(n * n);
        CHECK(ratio >= 8.0);
        CHECK(ratio <= 13.0);
    }
}

TEST_CASE("magnus integrands")
{
    CHECK_THROWS_AS(magnus_symbolic(0), std::domain_error);
    CHECK_THROWS_AS(magnus_symbolic(4), std::domain_error);

    auto d1 = magnus_symbolic(1);
    REQUIRE(d1.size() == 1);
    CHECK(d1[0].coefficient == Rational(1));
    CHECK(d1[0].integrand.height() == 2);

    auto d3 = magnus_symbolic(3);
    REQUIRE(d3.size() == 4);
    FTerm want2 = ang(DiffPoly::var("V(xi_1)", 1) - DiffPoly::var("V(xi_2)", 1), 1,
                      ScaledScalar(Rational(2), 0, 2, 0));
    CHECK(d3[1].integrand == want2);
    CHECK(d3[1].coefficient == Rational(-1, 2));
    CHECK(d3[2].coefficient == Rational(1, 12));
    CHECK(d3[3].coefficient == Rational(1, 4));
    for (size_t j = 2; j < d3.size(); ++j) {
        CHECK_FALSE(d3[j].integrand.is_zero());
        CHECK(skew_hermitian_check(d3[j].integrand));
    }

    // [A2,[A3,A1]] hand-expanded via the explicit rules:
    //   4 i t^3 eps <D^2(V1-V3)>_2 - i t^3 eps <D^4(V1-V3)>_0
    //   + 2 i t^3 eps^-1 <D(V1-V3) D(V2)>_0
    auto dv = [](const char *label, unsigned order) { return DiffPoly::var(label, order); };
    FTerm want3a =
        ang(dv("V(xi_1)", 2) - dv("V(xi_3)", 2), 2, ScaledScalar(Rational(4), 1, 3, 1)) +
        ang(dv("V(xi_1)", 4) - dv("V(xi_3)", 4), 0, ScaledScalar(Rational(-1), 1, 3, 1)) +
        ang((dv("V(xi_1)", 1) - dv("V(xi_3)", 1)) * dv("V(xi_2)", 1), 0,
            ScaledScalar(Rational(2), 1, 3, -1));
    CHECK(d3[2].integrand == want3a);

    // [[A3,A2],A1] = -4 i t^3 eps <D^2(V2-V3)>_2 + i t^3 eps <D^4(V2-V3)>_0
    //                - 2 i t^3 eps^-1 <D(V2-V3) D(V1)>_0
    FTerm want3b =
        ang(dv("V(xi_2)", 2) - dv("V(xi_3)", 2), 2, ScaledScalar(Rational(-4), 1, 3, 1)) +
        ang(dv("V(xi_2)", 4) - dv("V(xi_3)", 4), 0, ScaledScalar(Rational(1), 1, 3, 1)) +
        ang((dv("V(xi_2)", 1) - dv("V(xi_3)", 1)) * dv("V(xi_1)", 1), 0,
            ScaledScalar(Rational(-2), 1, 3, -1));
    CHECK(d3[3].integrand == want3b);
    CHECK(d3[2].upper_bounds == std::vector<int>{0, 1, 1});
    CHECK(d3[3].upper_bounds == std::vector<int>{0, 1, 2});
    CHECK(d3[1].str().find("int_0^t") != std::string::npos);
}
