#include <doctest.h>

#include <cmath>
#include <complex>

#include "fracwave/mlf.hpp"
#include "oracles.hpp"

using namespace fracwave;

namespace {
bool rel_close(double actual, double expected, double tol) {
    return std::abs(actual - expected) <= tol * std::max(1e-300, std::abs(expected));
}
}  // namespace

TEST_CASE("fractional order accepts (0,1] and rejects the rest") {
    CHECK(FractionalOrder(0.5).value() == 0.5);
    CHECK(FractionalOrder(1.0).is_classical());
    CHECK_FALSE(FractionalOrder(0.999).is_classical());
    CHECK_THROWS_AS(FractionalOrder(0.0), DomainError);
    CHECK_THROWS_AS(FractionalOrder(-0.5), DomainError);
    CHECK_THROWS_AS(FractionalOrder(1.5), DomainError);
}

TEST_CASE("series value at zero argument is exactly one") {
    for (double alpha : {0.3, 0.5, 0.8, 1.0}) {
        CHECK(mittag_leffler(alpha, 0.0) == 1.0);
        CHECK(mittag_leffler(alpha, std::complex<double>(0.0, 0.0)) ==
              std::complex<double>(1.0, 0.0));
    }
    CHECK_THROWS_AS(mittag_leffler(0.0, 1.0), DomainError);
    CHECK_THROWS_AS(mittag_leffler(-0.5, 1.0), DomainError);
}

TEST_CASE("order one reduces to the exponential across [-5,5]") {
    for (int i = 0; i < 200; ++i) {
        const double x = -5.0 + 10.0 * i / 199.0;
        const double expected = static_cast<double>(oracles::exp_series(x));
        const double actual = mittag_leffler(1.0, x);
        CAPTURE(x);
        CHECK(rel_close(actual, expected, 1e-12));
    }
    CHECK(rel_close(mittag_leffler(1.0, 1.0), 2.718281828459045, 1e-12));
}

TEST_CASE("order one-half matches the squared-exponential identity on [0,2]") {
    for (int i = 0; i <= 50; ++i) {
        const double x = 2.0 * i / 50.0;
        const double expected = oracles::half_order_ml(x);
        const double actual = mittag_leffler(0.5, x);
        CAPTURE(x);
        CHECK(rel_close(actual, expected, 1e-10));
    }
    // Spot value: the identity oracle itself sits where expected.
    CHECK(oracles::half_order_ml(1.0) == doctest::Approx(5.00898).epsilon(1e-5));
}

TEST_CASE("mild alternation stays accurate; hopeless cancellation is refused") {
    CHECK(rel_close(mittag_leffler(0.5, -2.0), oracles::half_order_ml(-2.0), 1e-10));
    CHECK_THROWS_AS(mittag_leffler(0.5, -9.0), ConvergenceError);
}

TEST_CASE("series conjugation commutes with the sum exactly") {
    const std::complex<double> zs[] = {{0.7, 1.3}, {-1.1, 0.4}, {2.0, -2.5}};
    for (const auto& z : zs) {
        const auto direct = mittag_leffler(0.7, std::conj(z));
        const auto mirrored = std::conj(mittag_leffler(0.7, z));
        CHECK(direct.real() == mirrored.real());
        CHECK(direct.imag() == mirrored.imag());
    }
}

TEST_CASE("overflowing series reports its partial state") {
    try {
        mittag_leffler(0.5, 1e160);
        FAIL("expected ConvergenceError");
    } catch (const ConvergenceError& e) {
        CHECK(e.terms_used >= 1);
        CHECK(e.last_term_magnitude > 0.0);
    }
}

TEST_CASE("signed power keeps sign and is the identity at order one") {
    CHECK(signed_power(-3.7, 1.0) == -3.7);
    CHECK(signed_power(3.7, 1.0) == 3.7);
    CHECK(signed_power(0.0, 0.3) == 0.0);
    CHECK(signed_power(4.0, 0.5) == doctest::Approx(2.0));
    CHECK(signed_power(-4.0, 0.5) == doctest::Approx(-2.0));
    CHECK(signed_power(-8.0, 0.5) == -signed_power(8.0, 0.5));
}

TEST_CASE("generalized function names round-trip and reject unknowns") {
    for (const char* name : {"sinh", "cosh", "tanh", "coth", "sech", "csch",
                             "sin", "cos", "tan", "cot", "sec", "csc"}) {
        CHECK(to_string(parse_frac_function_kind(name)) == name);
    }
    CHECK_THROWS_AS(parse_frac_function_kind("arctan"), DomainError);
    CHECK_THROWS_AS(parse_frac_function_kind(""), DomainError);
}

TEST_CASE("order one reduces every generalized function to its classical one") {
    const FractionalOrder one(1.0);
    const double p = 0.7;
    CHECK(rel_close(frac_function(FracFunctionKind::Sinh, one, p), std::sinh(p), 1e-12));
    CHECK(rel_close(frac_function(FracFunctionKind::Cosh, one, p), std::cosh(p), 1e-12));
    CHECK(rel_close(frac_function(FracFunctionKind::Tanh, one, 0.5), std::tanh(0.5),
                    1e-12));
    CHECK(rel_close(frac_function(FracFunctionKind::Coth, one, p), 1.0 / std::tanh(p),
                    1e-12));
    CHECK(rel_close(frac_function(FracFunctionKind::Sech, one, p), 1.0 / std::cosh(p),
                    1e-12));
    CHECK(rel_close(frac_function(FracFunctionKind::Csch, one, p), 1.0 / std::sinh(p),
                    1e-12));
    CHECK(rel_close(frac_function(FracFunctionKind::Sin, one, p), std::sin(p), 1e-12));
    CHECK(rel_close(frac_function(FracFunctionKind::Cos, one, p), std::cos(p), 1e-12));
    CHECK(rel_close(frac_function(FracFunctionKind::Tan, one, p), std::tan(p), 1e-12));
    CHECK(rel_close(frac_function(FracFunctionKind::Cot, one, p), 1.0 / std::tan(p),
                    1e-12));
    CHECK(rel_close(frac_function(FracFunctionKind::Sec, one, p), 1.0 / std::cos(p),
                    1e-12));
    CHECK(rel_close(frac_function(FracFunctionKind::Csc, one, p), 1.0 / std::sin(p),
                    1e-12));
    CHECK(rel_close(frac_function(FracFunctionKind::Sin, one, std::acos(0.0)), 1.0,
                    1e-12));
}

TEST_CASE("hyperbolic combination identity holds at every order") {
    // cosh^2 - sinh^2 == E(p) E(-p) is an algebraic identity of the defining
    // combinations, valid for all alpha (unlike the classical value 1).
    for (double alpha : {0.6, 0.85, 1.0}) {
        const FractionalOrder a(alpha);
        for (double p : {0.3, 1.1, 2.0}) {
            const double ch = frac_function(FracFunctionKind::Cosh, a, p);
            const double sh = frac_function(FracFunctionKind::Sinh, a, p);
            const double product =
                mittag_leffler(alpha, p) * mittag_leffler(alpha, -p);
            CAPTURE(alpha);
            CAPTURE(p);
            CHECK(rel_close(ch * ch - sh * sh, product, 1e-12));
        }
    }
}

TEST_CASE("circular combination identity holds at every order") {
    // cos^2 + sin^2 == E(ip) E(-ip) = |E(ip)|^2 for real p.
    for (double alpha : {0.7, 1.0}) {
        const FractionalOrder a(alpha);
        for (double p : {0.4, 1.3}) {
            const double c = frac_function(FracFunctionKind::Cos, a, p);
            const double s = frac_function(FracFunctionKind::Sin, a, p);
            const double product =
                std::norm(mittag_leffler(alpha, std::complex<double>(0.0, p)));
            CAPTURE(alpha);
            CAPTURE(p);
            CHECK(rel_close(c * c + s * s, product, 1e-12));
        }
    }
}

TEST_CASE("ratio kinds report their poles") {
    const FractionalOrder a(0.8);
    CHECK_THROWS_AS(frac_function(FracFunctionKind::Coth, a, 0.0), PoleError);
    CHECK_THROWS_AS(frac_function(FracFunctionKind::Csch, a, 0.0), PoleError);
    CHECK_THROWS_AS(frac_function(FracFunctionKind::Cot, a, 0.0), PoleError);
    CHECK_THROWS_AS(frac_function(FracFunctionKind::Csc, a, 0.0), PoleError);
}
