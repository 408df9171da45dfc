#include "doctest.h"

#include "zassen/series.hpp"

using namespace zassen;

namespace {

FTerm t1_term(const char *sym, int k, long long num = 1, long long den = 1)
{
    return ang(DiffPoly::var(sym), k, ScaledScalar(Rational(num, den), 0, 1, 0));
}

} // namespace

TEST_CASE("exp of a degree-1 element to second order")
{
    FTerm a = t1_term("f", 1);
    ExpSeries e = exp_series(ExpSeries::from_fterm(a, 2));
    CHECK(e.at(0) == ang(DiffPoly::one(), 0));
    CHECK(e.at(1) == a);
    CHECK(e.at(2) == assoc_mul(a, a).scaled(Rational(1, 2)));
}

TEST_CASE("log inverts exp")
{
    FTerm a = t1_term("f", 2) + t1_term("g", 1, -2);
    for (unsigned n : {1u, 3u, 6u}) {
        ExpSeries s = ExpSeries::from_fterm(a, n);
        CHECK(log_series(exp_series(s)) == s);
    }
}

TEST_CASE("exp(A) exp(-A) is the identity series")
{
    FTerm a = t1_term("f", 2) + t1_term("g", 0, 1, 3);
    ExpSeries s = ExpSeries::from_fterm(a, 5);
    CHECK(exp_series(s) * exp_series(s.scaled(Rational(-1))) == ExpSeries::identity(5));
}

TEST_CASE("series preconditions")
{
    ExpSeries with_const = ExpSeries::identity(3);
    CHECK_THROWS_AS(exp_series(with_const), std::domain_error);
    ExpSeries no_ident = ExpSeries::from_fterm(t1_term("f", 1), 3);
    CHECK_THROWS_AS(log_series(no_ident), std::domain_error);
}

TEST_CASE("sbch basics")
{
    FTerm a = t1_term("f", 2);
    CHECK(sbch(a, FTerm::zero(), 5) == a);
    FTerm bad = ang(DiffPoly::var("f"), 2); // t^0
    CHECK_THROWS_AS(sbch(bad, FTerm::zero(), 3), std::domain_error);
}

TEST_CASE("sbch degree-3 matches the displayed coefficients")
{
    FTerm a = t1_term("f", 2), b = t1_term("g", 1);
    FTerm ba = commutator(b, a);
    FTerm want = a + b - commutator(ba, a).scaled(Rational(1, 24)) -
                 commutator(ba, b).scaled(Rational(1, 12));
    CHECK(sbch(a, b, 3) == want);
    CHECK(sbch(a, b, 4) == want); // no t^4 terms
}

TEST_CASE("TDSE sbch through t^5 bound")
{
    FTerm a = ang(DiffPoly::one(), 2, ScaledScalar(Rational(1), 1, 1, 1));
    FTerm b = ang(DiffPoly::var("V"), 0, ScaledScalar(Rational(-1), 1, 1, -1));
    FTerm got = sbch(a, b, 4);
    FTerm want = a + b;
    want += ang(DiffPoly::var("V", 2), 2, ScaledScalar(Rational(-1, 6), 1, 3, 1));
    want += ang(DiffPoly::var("V", 4), 0, ScaledScalar(Rational(1, 24), 1, 3, 1));
    want += ang(DiffPoly::var("V", 1, 2), 0, ScaledScalar(Rational(-1, 6), 1, 3, -1));
    CHECK(got == want);
    CHECK(skew_hermitian_check(got));

    FTerm deeper = sbch(a, b, 7);
    for (int d : deeper.t_degrees())
        CHECK(d % 2 == 1);
    CHECK(skew_hermitian_check(deeper));
}
