#include "doctest.h"

#include "zassen/falgebra.hpp"

using namespace zassen;

namespace {

DiffPoly X() { return DiffPoly::var("x"); }
DiffPoly Y() { return DiffPoly::var("y"); }
DiffPoly V() { return DiffPoly::var("V"); }
DiffPoly dnx(unsigned d) { return DiffPoly::var("x", d); }
DiffPoly dny(unsigned d) { return DiffPoly::var("y", d); }

} // namespace

TEST_CASE("ang constructors")
{
    CHECK(ang(DiffPoly::zero(), 3).is_zero());
    CHECK(ang(DiffPoly::zero(), 3).height() == -1);
    CHECK(ang(X(), 2).height() == 2);
    CHECK_THROWS_AS(ang(X(), -1), std::out_of_range);
}

TEST_CASE("scaled scalars fold powers of i into the sign")
{
    ScaledScalar s(Rational(3), 2, 0, 0);
    CHECK(s.q == Rational(-3));
    CHECK(s.i_pow == 0);
    ScaledScalar t(Rational(1), 3, 1, -1);
    CHECK(t.q == Rational(-1));
    CHECK(t.i_pow == 1);
    CHECK((s * t).i_pow == 1);
    CHECK(ang(X(), 1, ScaledScalar(Rational(1), 2, 0, 0)) == ang(-X(), 1));
    CHECK(ScaledScalar(Rational(1), 1, 1, 1).value(2.0, 0.5) == std::complex<double>(0.0, 1.0));
}

TEST_CASE("associative product expansions")
{
    CHECK(assoc_mul(ang(X(), 0), ang(Y(), 0)) == ang(X() * Y(), 0));
    // <x>_1 <y>_0 = <xy>_1 + <x Dy / 2>_0
    FTerm want = ang(X() * Y(), 1) + ang((X() * dny(1)).scaled(Rational(1, 2)), 0);
    CHECK(assoc_mul(ang(X(), 1), ang(Y(), 0)) == want);
    // d . d = d^2
    CHECK(assoc_mul(ang(DiffPoly::one(), 1), ang(DiffPoly::one(), 1)) == ang(DiffPoly::one(), 2));
}

TEST_CASE("commutator fixtures from the worked examples")
{
    // [<V>_0, <1>_2] = -2 <DV>_1
    CHECK(commutator(ang(V(), 0), ang(DiffPoly::one(), 2)) ==
          ang(DiffPoly::var("V", 1).scaled(Rational(-2)), 1));

    // [[<V>_0, <1>_2], <1>_2] = -<D^4 V>_0 + 4 <D^2 V>_2
    FTerm inner = commutator(ang(V(), 0), ang(DiffPoly::one(), 2));
    FTerm got = commutator(inner, ang(DiffPoly::one(), 2));
    CHECK(got == ang(-DiffPoly::var("V", 4), 0) + ang(DiffPoly::var("V", 2).scaled(Rational(4)), 2));

    // [[<V>_0, <1>_2], <V>_0] = -2 <(DV)^2>_0
    CHECK(commutator(inner, ang(V(), 0)) == ang(DiffPoly::var("V", 1, 2).scaled(Rational(-2)), 0));

    // [<f>_2, <g>_1] = <-(1/2) f D^3 g - Df D^2 g>_0 + <2 f Dg - Df g>_2
    DiffPoly f = DiffPoly::var("f"), df = DiffPoly::var("f", 1);
    DiffPoly d1g = DiffPoly::var("g", 1), d2g = DiffPoly::var("g", 2), d3g = DiffPoly::var("g", 3);
    FTerm fg_want = ang((f * d3g).scaled(Rational(-1, 2)) - df * d2g, 0) +
                    ang((f * d1g).scaled(Rational(2)) - df * DiffPoly::var("g"), 2);
    CHECK(commutator(ang(f, 2), ang(DiffPoly::var("g"), 1)) == fg_want);
}

TEST_CASE("the (3,2) commutator expands over heights 4, 2, 0")
{
    FTerm got = commutator(ang(X(), 3), ang(Y(), 2));
    FTerm want =
        ang((X() * dny(1)).scaled(Rational(3)) - (dnx(1) * Y()).scaled(Rational(2)), 4) +
        ang((X() * dny(3)).scaled(Rational(-7, 2)) + (dnx(1) * dny(2)).scaled(Rational(-15, 2)) +
                (dnx(2) * dny(1)).scaled(Rational(3)) + (dnx(3) * Y()).scaled(Rational(3, 2)),
            2) +
        ang((X() * dny(5)).scaled(Rational(3, 4)) + (dnx(1) * dny(4)).scaled(Rational(3)) +
                (dnx(2) * dny(3)).scaled(Rational(7, 2)) - dnx(4) * dny(1) -
                (dnx(5) * Y()).scaled(Rational(1, 4)),
            0);
    CHECK(got == want);
    CHECK(got == assoc_mul(ang(X(), 3), ang(Y(), 2)) - assoc_mul(ang(Y(), 2), ang(X(), 3)));
}

TEST_CASE("jordan product")
{
    CHECK(jordan(ang(X(), 0), ang(Y(), 0)) == ang(X() * Y(), 0));
    // <x>_1 . <y>_1 = <xy>_2 + <-(1/4)(x D2y + D2x y) - (3/4) Dx Dy>_0
    FTerm want = ang(X() * Y(), 2) +
                 ang((X() * dny(2) + dnx(2) * Y()).scaled(Rational(-1, 4)) +
                         (dnx(1) * dny(1)).scaled(Rational(-3, 4)),
                     0);
    CHECK(jordan(ang(X(), 1), ang(Y(), 1)) == want);
    CHECK((jordan(ang(X(), 2), ang(Y(), 1)) - jordan(ang(Y(), 1), ang(X(), 2))).is_zero());
}

TEST_CASE("height and parity")
{
    CHECK(ang(DiffPoly::var("f"), 3).height() == 3);
    CHECK(FTerm::zero().height() == -1);
    CHECK(commutator(ang(X(), 2), ang(Y(), 2)).height() <= 3);

    CHECK(parity(ang(DiffPoly::one(), 2)) == Parity::even);
    CHECK(parity(commutator(ang(DiffPoly::one(), 2), ang(V(), 0))) == Parity::odd);
    CHECK(parity(ang(DiffPoly::var("f"), 1) + ang(DiffPoly::var("g"), 2)) == Parity::mixed);
    CHECK(lies_in(FTerm::zero(), Parity::odd));
    CHECK(lies_in(FTerm::zero(), Parity::even));
}

TEST_CASE("skew-Hermitian membership")
{
    CHECK(skew_hermitian_check(ang(DiffPoly::one(), 2, ScaledScalar(Rational(1), 1, 0, 1))));
    CHECK_FALSE(skew_hermitian_check(ang(V(), 0)));
    // the t^3 eps^-1 sBCH term carries -(1/6) i
    CHECK(skew_hermitian_check(ang(DiffPoly::var("V", 1, 2), 0, ScaledScalar(Rational(-1, 6), 1, 3, -1))));
    CHECK(skew_hermitian_check(ang(DiffPoly::var("f"), 1))); // odd heights carry real weights
    CHECK(skew_hermitian_check(FTerm::zero()));
}

TEST_CASE("free Lie algebra reconstruction")
{
    // [d^2, <x>_0] = 2 <Dx>_1
    CHECK(commutator(ang(DiffPoly::one(), 2), ang(X(), 0)) == ang(dnx(1).scaled(Rational(2)), 1));
    CHECK(fla_reconstruct_check(X(), 1));
    CHECK(fla_reconstruct_check(X() * Y(), 1));
    CHECK(fla_reconstruct_check(X(), 2));
    CHECK_THROWS_AS(fla_reconstruct_check(X(), 0), std::out_of_range);
}

TEST_CASE("rendering mirrors the bracket notation")
{
    FTerm f = ang((DiffPoly::var("f") * DiffPoly::var("g", 1)).scaled(Rational(2)) -
                      DiffPoly::var("f", 1) * DiffPoly::var("g"),
                  2);
    CHECK(f.str() == "<2 f D[g] - D[f] g>_2");
    CHECK(FTerm::zero().str() == "0");
    FTerm s = ang(DiffPoly::var("V", 4), 0, ScaledScalar(Rational(1, 24), 1, 3, 1));
    CHECK(s.str() == "(1/24) i t^3 eps <D^4[V]>_0");
}

TEST_CASE("sigma order bookkeeping")
{
    FTerm a = ang(DiffPoly::one(), 2, ScaledScalar(Rational(1), 1, 1, 1)); // i t eps <1>_2
    CHECK(a.min_sigma_order(Rational(1, 2)) == Rational(-1, 2));
    FTerm b = ang(V(), 0, ScaledScalar(Rational(-1), 1, 1, -1));
    CHECK(b.min_sigma_order(Rational(1)) == Rational(0));
    CHECK((a + b).min_sigma_order(Rational(1, 2)) == Rational(-1, 2));
    CHECK_THROWS_AS(FTerm::zero().min_sigma_order(Rational(1)), std::domain_error);
}
