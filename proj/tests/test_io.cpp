#include "doctest.h"

#include "zassen/json_io.hpp"

using namespace zassen;

TEST_CASE("coefficient tables round-trip through JSON")
{
    CoeffTable t = CoeffTable::build(CoeffKind::pi, 3);
    json j = coeff_table_to_json(t);
    CHECK(j["kind"] == "pi");
    CoeffTable back = coeff_table_from_json(j);
    CHECK(back.kind == t.kind);
    CHECK(back.entries == t.entries);

    CoeffTable lam = CoeffTable::build(CoeffKind::lambda, 4);
    CHECK(coeff_table_from_json(coeff_table_to_json(lam)).entries == lam.entries);
}

TEST_CASE("json entry format matches the documented shape")
{
    CoeffTable t = CoeffTable::build(CoeffKind::pi, 2);
    json j = coeff_table_to_json(t);
    bool found = false;
    for (const auto &e : j["entries"])
        if (e["k"] == 1 && e["l"] == 1 && e["n"] == 2 && e["i"] == 1) {
            CHECK(e["value"] == "-3/4");
            found = true;
        }
    CHECK(found);
}

TEST_CASE("fterms round-trip through JSON")
{
    FTerm f = ang(DiffPoly::var("V", 2), 2, ScaledScalar(Rational(-1, 6), 1, 3, 1)) +
              ang(DiffPoly::var("V", 1, 2), 0, ScaledScalar(Rational(-1, 6), 1, 3, -1)) +
              ang((DiffPoly::var("f") * DiffPoly::var("g", 1)).scaled(Rational(2)) -
                      DiffPoly::var("f", 1) * DiffPoly::var("g"),
                  1);
    json j = fterm_to_json(f);
    CHECK(fterm_from_json(j) == f);
    // scalar shape: q / i / t / eps fields present
    CHECK(j[0].contains("scalar"));
    CHECK(j[0]["scalar"].contains("q"));
    CHECK(j[0]["scalar"].contains("eps"));
}

TEST_CASE("splitting JSON carries the manifest and exponent metadata")
{
    FTerm a = ang(DiffPoly::one(), 2, ScaledScalar(Rational(1), 1, 1, 1));
    FTerm b = ang(DiffPoly::var("V"), 0, ScaledScalar(Rational(-1), 1, 1, -1));
    Splitting sp = zassenhaus(a, b, 1, Rational(1, 2));
    json j = splitting_to_json(sp);
    CHECK(j["n"] == 1);
    CHECK(j["sigma"] == "1/2");
    CHECK(j["order_target"] == "3/2");
    REQUIRE(j["exponents"].size() == 3);
    CHECK(j["exponents"][2]["lanczos_iterations"] == 3);
    std::vector<unsigned> orders = j["derivative_orders"].get<std::vector<unsigned>>();
    CHECK(orders == std::vector<unsigned>{0, 1, 2, 4});
    // exponent fterms parse back to the symbolic exponents
    CHECK(fterm_from_json(j["exponents"][2]["terms"]) == sp.exponents[2]);

    Splitting back = splitting_from_json(j);
    CHECK(back.n == sp.n);
    CHECK(back.sigma == sp.sigma);
    CHECK(back.order_target == sp.order_target);
    CHECK(back.exponents == sp.exponents);
    // and the re-emitted JSON is identical
    CHECK(splitting_to_json(back) == j);
}

TEST_CASE("magnus JSON")
{
    json j = magnus_to_json(magnus_symbolic(2));
    REQUIRE(j.size() == 2);
    CHECK(j[1]["coefficient"] == "-1/2");
    CHECK(j[1]["depth"] == 2);
}
