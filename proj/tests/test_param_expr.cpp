#include <doctest.h>

#include <cstdint>
#include <map>

#include "fracwave/param_expr.hpp"

using namespace fracwave;

TEST_CASE("rationals normalize, compare, and print") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(3, 1).to_string() == "3");
    CHECK(Rational(-3, 2).to_string() == "-3/2");
    CHECK(Rational(0).is_zero());
    CHECK(Rational(1).is_one());
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(2, 3).pow(2) == Rational(4, 9));
    CHECK(Rational(5).pow(0) == Rational(1));
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    CHECK(Rational(1, 2) / Rational(3) == Rational(1, 6));
    CHECK(Rational(1, 2).to_double() == 0.5);
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
    CHECK_THROWS_AS(Rational(2, 3).pow(-1), DomainError);
}

TEST_CASE("rational parsing covers integers, fractions, and decimals") {
    CHECK(Rational::parse("7") == Rational(7));
    CHECK(Rational::parse("-2") == Rational(-2));
    CHECK(Rational::parse("3/4") == Rational(3, 4));
    CHECK(Rational::parse("-6/8") == Rational(-3, 4));
    CHECK(Rational::parse("0.25") == Rational(1, 4));
    CHECK(Rational::parse("-1.5") == Rational(-3, 2));
    CHECK_THROWS_AS(Rational::parse(""), DomainError);
    CHECK_THROWS_AS(Rational::parse("x"), DomainError);
    CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
}

TEST_CASE("exact arithmetic overflows loudly instead of wrapping") {
    const Rational huge(INT64_C(1) << 62);
    CHECK_THROWS_AS(huge * Rational(4), OverflowError);
    CHECK_THROWS_AS(huge + huge, OverflowError);
}

TEST_CASE("polynomials expand, cancel, and print canonically") {
    const ParamExpr x = ParamExpr::symbol("x");
    const ParamExpr y = ParamExpr::symbol("y");

    CHECK(x.to_string() == "x");
    CHECK((x - x).is_zero());
    CHECK(ParamExpr().is_zero());
    CHECK(ParamExpr(Rational(3, 2)).is_constant());
    CHECK(ParamExpr(Rational(3, 2)).constant_value() == Rational(3, 2));

    const ParamExpr square = (x + y) * (x + y);
    CHECK(square == x * x + 2 * x * y + y * y);
    CHECK(square.pow(1) == square);
    CHECK((x + y).pow(2) == square);
    CHECK((x + y).pow(0) == ParamExpr(1));

    // Printing is deterministic, so equal expressions print identically.
    CHECK(square.to_string() == (y * y + x * x + 2 * y * x).to_string());
}

TEST_CASE("evaluation requires every symbol to be bound") {
    const ParamExpr x = ParamExpr::symbol("x");
    const ParamExpr y = ParamExpr::symbol("y");
    const ParamExpr e = 2 * x * y + y * y - 3;

    CHECK(e.eval({{"x", 0.5}, {"y", 2.0}}) == doctest::Approx(2.0 + 4.0 - 3.0));
    CHECK_THROWS_AS(e.eval({{"x", 0.5}}), ContractError);
    CHECK(ParamExpr(Rational(5)).eval({}) == 5.0);
}

TEST_CASE("substitution happens simultaneously") {
    const ParamExpr x = ParamExpr::symbol("x");
    const ParamExpr y = ParamExpr::symbol("y");
    const ParamExpr e = x + 2 * y;

    // Swapping x and y must not chain: x -> y -> x.
    const ParamExpr swapped = e.substitute({{"x", y}, {"y", x}});
    CHECK(swapped == y + 2 * x);

    const ParamExpr collapsed = e.substitute({{"x", ParamExpr(1)}, {"y", x * x}});
    CHECK(collapsed == ParamExpr(1) + 2 * x * x);
}

TEST_CASE("partial derivatives are exact") {
    const ParamExpr x = ParamExpr::symbol("x");
    const ParamExpr y = ParamExpr::symbol("y");
    const ParamExpr e = x * x * y + 3 * x - 7;

    CHECK(e.derivative("x") == 2 * x * y + 3);
    CHECK(e.derivative("y") == x * x);
    CHECK(e.derivative("z").is_zero());
}

TEST_CASE("symbol sets reflect surviving terms only") {
    const ParamExpr x = ParamExpr::symbol("x");
    const ParamExpr y = ParamExpr::symbol("y");
    const ParamExpr e = x * y - x * y + x;  // the xy terms cancel
    CHECK(e.symbols() == std::set<std::string>{"x"});
}

TEST_CASE("square relations rewrite to fixpoint") {
    auto relations = std::make_shared<RelationSet>();
    relations->add_square_rule("s", 6 * ParamExpr::symbol("b"));

    const ParamExpr s = ParamExpr::symbol("s").with_relations(relations);
    const ParamExpr b = ParamExpr::symbol("b");

    CHECK(s * s == 6 * b);
    CHECK(s * s * s == 6 * b * ParamExpr::symbol("s"));
    CHECK(s.pow(4) == 36 * b * b);
    CHECK((s * s - 6 * b).is_zero());
}

TEST_CASE("relation sets reject rules that would break confluence") {
    auto relations = std::make_shared<RelationSet>();
    relations->add_square_rule("s", 6 * ParamExpr::symbol("b"));
    // A second rule for the same symbol is a conflict.
    CHECK_THROWS_AS(relations->add_square_rule("s", ParamExpr(2)), ContractError);
    // A replacement mentioning a rule symbol would make rewriting diverge.
    CHECK_THROWS_AS(relations->add_square_rule("t", ParamExpr::symbol("s")),
                    ContractError);
    // A rule for a symbol already used in an existing replacement, likewise.
    CHECK_THROWS_AS(relations->add_square_rule("b", ParamExpr(2)), ContractError);
}
