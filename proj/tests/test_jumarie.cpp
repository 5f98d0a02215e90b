#include <doctest.h>

#include <cmath>
#include <limits>

#include "fracwave/jumarie.hpp"
#include "oracles.hpp"

using namespace fracwave;

namespace {
bool rel_close(double actual, double expected, double tol) {
    return std::abs(actual - expected) <= tol * std::max(1e-300, std::abs(expected));
}

double power_rule_oracle(double gamma, double alpha, double x) {
    const long double g1 = oracles::gamma_fn(1.0L + static_cast<long double>(gamma));
    const long double g2 = oracles::gamma_fn(
        1.0L + static_cast<long double>(gamma) - static_cast<long double>(alpha));
    return static_cast<double>(g1 / g2 *
                               std::pow(static_cast<long double>(x), gamma - alpha));
}
}  // namespace

TEST_CASE("power rule matches an independent gamma evaluation") {
    CHECK(rel_close(jumarie_power_rule(1.0, FractionalOrder(0.5), 1.0),
                    power_rule_oracle(1.0, 0.5, 1.0), 1e-12));
    CHECK(rel_close(jumarie_power_rule(1.0, FractionalOrder(0.5), 1.0),
                    1.1283791670955126, 1e-7));
    CHECK(rel_close(jumarie_power_rule(2.0, FractionalOrder(0.3), 2.0),
                    power_rule_oracle(2.0, 0.3, 2.0), 1e-12));
    CHECK(rel_close(jumarie_power_rule(0.5, FractionalOrder(0.5), 4.0),
                    power_rule_oracle(0.5, 0.5, 4.0), 1e-12));
    CHECK(rel_close(jumarie_power_rule(0.5, FractionalOrder(0.5), 4.0), 0.8862269,
                    1e-6));
}

TEST_CASE("power rule rejects bad exponents and gamma poles") {
    CHECK_THROWS_AS(jumarie_power_rule(-1.0, FractionalOrder(0.5), 1.0), DomainError);
    CHECK_THROWS_AS(jumarie_power_rule(-1.5, FractionalOrder(0.5), 1.0), DomainError);
    CHECK_THROWS_AS(jumarie_power_rule(1.0, FractionalOrder(0.5), -1.0), DomainError);
    // 1 + gamma - alpha == 0 lands on a gamma pole.
    CHECK_THROWS_AS(jumarie_power_rule(-0.5, FractionalOrder(0.5), 1.0), PoleError);
}

TEST_CASE("quadrature reproduces the power rule") {
    const struct {
        double alpha, gamma, x;
    } cases[] = {
        {0.5, 1.0, 1.0}, {0.3, 2.0, 2.0}, {0.8, 0.5, 0.5}, {0.5, 0.5, 2.0},
    };
    for (const auto& c : cases) {
        const FractionalOrder alpha(c.alpha);
        const double gamma = c.gamma;
        const auto f = [gamma](double xi) { return std::pow(xi, gamma); };
        const double expected = jumarie_power_rule(c.gamma, alpha, c.x);
        const double actual = jumarie_derivative(f, alpha, c.x);
        CAPTURE(c.alpha);
        CAPTURE(c.gamma);
        CAPTURE(c.x);
        CHECK(rel_close(actual, expected, 1e-6));
    }
}

TEST_CASE("quadrature of a constant is exactly zero") {
    const auto f = [](double) { return 3.25; };
    CHECK(jumarie_derivative(f, FractionalOrder(0.5), 1.0) == 0.0);
    CHECK(jumarie_derivative(f, FractionalOrder(0.8), 2.0) == 0.0);
}

TEST_CASE("eigenfunction property holds within quadrature accuracy") {
    for (double alpha : {0.5, 0.8}) {
        const FractionalOrder a(alpha);
        for (double lambda : {1.0, -1.0}) {
            for (double x : {0.5, 1.0}) {
                const auto f = [alpha, lambda](double xi) {
                    return mittag_leffler(alpha, lambda * std::pow(xi, alpha));
                };
                const double expected = mlf_eigenfunction_derivative(lambda, a, x);
                const double actual = jumarie_derivative(f, a, x);
                CAPTURE(alpha);
                CAPTURE(lambda);
                CAPTURE(x);
                CHECK(rel_close(actual, expected, 1e-4));
            }
        }
    }
}

TEST_CASE("integral representation is for strictly fractional orders only") {
    const auto f = [](double xi) { return xi; };
    CHECK_THROWS_AS(jumarie_derivative(f, FractionalOrder(1.0), 1.0), DomainError);
}

TEST_CASE("derivative point must be positive") {
    const auto f = [](double xi) { return xi; };
    CHECK_THROWS_AS(jumarie_derivative(f, FractionalOrder(0.5), 0.0), DomainError);
    CHECK_THROWS_AS(jumarie_derivative(f, FractionalOrder(0.5), -1.0), DomainError);
}

TEST_CASE("non-finite integrand values are reported as such") {
    const auto f = [](double) { return std::numeric_limits<double>::quiet_NaN(); };
    CHECK_THROWS_AS(jumarie_derivative(f, FractionalOrder(0.5), 1.0), DomainError);
}

TEST_CASE("quadrature settings are validated") {
    QuadratureSpec spec;
    spec.node_count = 8;
    CHECK_THROWS_AS(spec.validate(), DomainError);
    spec = QuadratureSpec{};
    spec.outer_step = 0.0;
    CHECK_THROWS_AS(spec.validate(), DomainError);
    spec = QuadratureSpec{};
    spec.singularity_split = 1.0;
    CHECK_THROWS_AS(spec.validate(), DomainError);
    CHECK_NOTHROW(QuadratureSpec{}.validate());
}

TEST_CASE("eigenfunction derivative validates its point") {
    CHECK_THROWS_AS(mlf_eigenfunction_derivative(1.0, FractionalOrder(0.5), 0.0),
                    DomainError);
    CHECK(rel_close(mlf_eigenfunction_derivative(1.0, FractionalOrder(1.0), 0.5),
                    std::exp(0.5), 1e-12));
    CHECK(rel_close(
        mlf_eigenfunction_derivative(2.0, FractionalOrder(0.5), 1.0),
        2.0 * mittag_leffler(0.5, 2.0), 1e-15));
}
