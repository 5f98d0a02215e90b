#include <doctest.h>

#include <cmath>
#include <vector>

#include "fracwave/solutions.hpp"

using namespace fracwave;

namespace {

bool close(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

/// Max |canonical - named| over sample phases; both specs share (x, t).
double family_gap(const SolutionSpec& canonical, const SolutionSpec& named,
                  const std::vector<double>& xs, double t = 0.0) {
    double gap = 0.0;
    for (const double x : xs) {
        gap = std::max(gap, std::abs(evaluate_solution(canonical, x, t) -
                                     evaluate_solution(named, x, t)));
    }
    return gap;
}

const std::vector<double> kSafeX = {0.2, 0.5, 0.8};

}  // namespace

TEST_CASE("auxiliary parameters validate and classify") {
    CHECK_THROWS_AS(AuxParams(1.0, 1.0, 0.0, 0.0), DomainError);
    CHECK_THROWS_AS(AuxParams(1.0 / 0.0, 1.0, 1.0, 0.0), DomainError);

    CHECK(AuxParams(1.0, -1.0, 1.0, 0.0).aux_case() == AuxCase::Hyperbolic);
    CHECK(AuxParams(1.0, 1.0, 1.0, 0.0).aux_case() == AuxCase::Trigonometric);
    CHECK(AuxParams(2.0, 1.0, 1.0, 0.0).aux_case() == AuxCase::Rational);
    CHECK(to_string(AuxCase::Hyperbolic) == "hyperbolic");
}

TEST_CASE("auxiliary solution and its log-derivative ratio at order one") {
    const FractionalOrder one(1.0);
    const AuxParams aux(0.0, -1.0, 1.0, 0.0);  // G = cosh(xi)
    CHECK(close(aux_solution_G(aux, one, 0.7), std::cosh(0.7), 1e-12));
    CHECK(close(ratio_dgg(aux, one, 0.5), std::tanh(0.5), 1e-12));

    const AuxParams flipped(0.0, -1.0, 0.0, 1.0);  // G = sinh(xi)
    CHECK(close(ratio_dgg(flipped, one, 0.5), 1.0 / std::tanh(0.5), 1e-12));
    CHECK_THROWS_AS(ratio_dgg(flipped, one, 0.0), PoleError);

    const AuxParams degenerate(0.0, 0.0, 2.0, 1.0);  // G = A + B xi
    CHECK(close(aux_solution_G(degenerate, one, 3.0), 5.0, 1e-14));
    CHECK(close(ratio_dgg(degenerate, one, 3.0), 1.0 / 5.0, 1e-14));
    CHECK_THROWS_AS(ratio_dgg(degenerate, one, -2.0), PoleError);
}

TEST_CASE("wave speed from its fractional power") {
    CHECK(wave_speed(4.0, FractionalOrder(0.5)) == doctest::Approx(16.0));
    CHECK(wave_speed(-4.0, FractionalOrder(0.5)) == doctest::Approx(-16.0));
    CHECK(wave_speed(0.0, FractionalOrder(0.5)) == 0.0);
    // Order one returns the value untouched, not pow(|x|, 1).
    CHECK(wave_speed(-3.7, FractionalOrder(1.0)) == -3.7);
}

TEST_CASE("family names round-trip") {
    for (const char* name : {"canonical", "tanh", "coth", "sech", "csch", "tan",
                             "cot", "sec", "csc", "rational"}) {
        CHECK(to_string(parse_solution_family(name)) == name);
    }
    CHECK_THROWS_AS(parse_solution_family("sinh"), DomainError);
}

TEST_CASE("spec assembly validates family, equation, and reality") {
    const FractionalOrder one(1.0);
    const AuxParams hyper(1.0, -1.0, 1.0, 0.0);
    const AuxParams trig(1.0, 1.0, 1.0, 0.0);

    // Family/case mismatch.
    CHECK_THROWS_AS(make_solution_spec(EquationKind::KdV, SolutionFamily::Tanh,
                                       one, trig, 1.0),
                    ContractError);
    CHECK_THROWS_AS(make_solution_spec(EquationKind::KdV, SolutionFamily::Tan,
                                       one, hyper, 1.0),
                    ContractError);
    // Secant-shaped families exist only for the quadratic equation.
    CHECK_THROWS_AS(make_solution_spec(EquationKind::MKdV, SolutionFamily::Sech,
                                       one, hyper, 1.0),
                    ContractError);
    // The modified equation's rational family needs B != 0.
    CHECK_THROWS_AS(make_solution_spec(EquationKind::MKdV, SolutionFamily::Rational,
                                       one, AuxParams(2.0, 1.0, 1.0, 0.0), 1.0),
                    ContractError);
    // Real amplitude needs b >= 0 for the modified equation.
    CHECK_THROWS_AS(make_solution_spec(EquationKind::MKdV, SolutionFamily::Tanh,
                                       one, hyper, -1.0),
                    RealityError);
    // Canonical family accepts any case.
    CHECK_NOTHROW(make_solution_spec(EquationKind::KdV,
                                     SolutionFamily::CanonicalRatio, one, trig, 1.0));
}

TEST_CASE("spec caches the branch offset and wave speed") {
    const FractionalOrder one(1.0);
    const AuxParams aux(1.0, -1.0, 1.0, 0.0);
    const auto plus = make_solution_spec(EquationKind::MKdV, SolutionFamily::Tanh,
                                         one, aux, 6.0, 0.0, SignBranch::Plus);
    const auto minus = make_solution_spec(EquationKind::MKdV, SolutionFamily::Tanh,
                                          one, aux, 6.0, 0.0, SignBranch::Minus);
    // a0 = +/- (lambda/2) sqrt(6b) = +/- 3.
    CHECK(plus.a0 == doctest::Approx(3.0));
    CHECK(minus.a0 == doctest::Approx(-3.0));
    // c_alpha = b lambda^2 / 2 - 2 b mu = 3 + 12 = 15, same on both branches.
    CHECK(plus.c_alpha == doctest::Approx(15.0));
    CHECK(minus.c_alpha == doctest::Approx(15.0));
    CHECK(plus.c == doctest::Approx(wave_speed(plus.c_alpha, one)));
}

TEST_CASE("classical soliton: quadratic equation, secant-squared shape") {
    const auto spec = make_solution_spec(EquationKind::KdV, SolutionFamily::Sech,
                                         FractionalOrder(1.0),
                                         AuxParams(0.0, -1.0, 1.0, 0.0), 1.0, 0.0);
    CHECK(spec.c_alpha == doctest::Approx(8.0));
    CHECK(spec.c == doctest::Approx(8.0));
    CHECK(evaluate_solution(spec, 0.0, 0.0) == doctest::Approx(0.0).epsilon(1e-12));
    // u = -12 + 12 sech^2(x + 8t)
    for (const double x : {-1.0, 0.3, 1.7}) {
        const double sech = 1.0 / std::cosh(x + 8.0 * 0.1);
        CHECK(close(evaluate_solution(spec, x, 0.1), -12.0 + 12.0 * sech * sech,
                    1e-12));
    }
}

TEST_CASE("classical kink: cubic equation, hyperbolic-tangent shape") {
    const auto spec = make_solution_spec(EquationKind::MKdV, SolutionFamily::Tanh,
                                         FractionalOrder(1.0),
                                         AuxParams(0.0, -1.0, 1.0, 0.0), 1.0, 0.0);
    CHECK(spec.c_alpha == doctest::Approx(2.0));
    CHECK(evaluate_solution(spec, 0.0, 0.0) == doctest::Approx(0.0).epsilon(1e-12));
    const double amplitude = std::sqrt(6.0);
    for (const double x : {-2.0, 0.5, 1.0}) {
        CHECK(close(evaluate_solution(spec, x, 0.3),
                    amplitude * std::tanh(x + 2.0 * 0.3), 1e-12));
    }
    // Far field approaches the amplitude (x large enough that tanh has
    // saturated, small enough that the alternating series stays conditioned).
    CHECK(close(evaluate_solution(spec, 12.0, 0.0), amplitude, 1e-9));
}

TEST_CASE("degenerate case with B = 0 collapses to a constant") {
    const auto spec = make_solution_spec(EquationKind::KdV, SolutionFamily::Rational,
                                         FractionalOrder(1.0),
                                         AuxParams(2.0, 1.0, 1.0, 0.0), 1.0, 0.5);
    for (const double x : {0.1, 1.0, 7.0}) {
        CHECK(close(evaluate_solution(spec, x, 0.4), 0.5 + 12.0, 1e-12));
    }
}

TEST_CASE("offset shift is a Galilean boost at order one") {
    const FractionalOrder one(1.0);
    const AuxParams aux(0.0, -1.0, 1.0, 0.0);
    const double delta = 1.0;
    const auto base = make_solution_spec(EquationKind::KdV, SolutionFamily::Sech,
                                         one, aux, 1.0, 0.0);
    const auto shifted = make_solution_spec(EquationKind::KdV, SolutionFamily::Sech,
                                            one, aux, 1.0, delta);
    CHECK(shifted.c_alpha == doctest::Approx(base.c_alpha - delta));
    for (const double x : {-1.0, 0.0, 0.9, 2.2}) {
        for (const double t : {0.0, 0.5, 1.3}) {
            CHECK(close(evaluate_solution(shifted, x, t),
                        evaluate_solution(base, x - delta * t, t) + delta, 1e-10));
        }
    }
}

TEST_CASE("sign branches of the cubic equation are mirror images") {
    for (const auto family :
         {SolutionFamily::CanonicalRatio, SolutionFamily::Tanh}) {
        const auto plus =
            make_solution_spec(EquationKind::MKdV, family, FractionalOrder(0.8),
                               AuxParams(1.0, -1.0, 1.0, 0.0), 1.0, 0.0,
                               SignBranch::Plus);
        const auto minus =
            make_solution_spec(EquationKind::MKdV, family, FractionalOrder(0.8),
                               AuxParams(1.0, -1.0, 1.0, 0.0), 1.0, 0.0,
                               SignBranch::Minus);
        for (const double x : kSafeX) {
            CHECK(close(evaluate_solution(minus, x, 0.0),
                        -evaluate_solution(plus, x, 0.0), 1e-12));
        }
    }
}

TEST_CASE("named families that are algebraic reductions match for every order") {
    for (const double a : {0.6, 1.0}) {
        const FractionalOrder alpha(a);
        CAPTURE(a);
        {
            // Hyperbolic, B = 0: tanh shape (mixing scale A drops out).
            const AuxParams aux(1.0, -1.0, 2.0, 0.0);
            const auto canon = make_solution_spec(
                EquationKind::KdV, SolutionFamily::CanonicalRatio, alpha, aux, 1.0, 0.3);
            const auto named = make_solution_spec(
                EquationKind::KdV, SolutionFamily::Tanh, alpha, aux, 1.0, 0.3);
            CHECK(family_gap(canon, named, kSafeX) < 1e-10);
        }
        {
            // Hyperbolic, A = 0: coth shape.
            const AuxParams aux(1.0, -1.0, 0.0, 3.0);
            const auto canon = make_solution_spec(
                EquationKind::KdV, SolutionFamily::CanonicalRatio, alpha, aux, 1.0);
            const auto named = make_solution_spec(
                EquationKind::KdV, SolutionFamily::Coth, alpha, aux, 1.0);
            CHECK(family_gap(canon, named, kSafeX) < 1e-10);
        }
        {
            // Trigonometric, B = 0: tan shape.
            const AuxParams aux(1.0, 1.0, 1.5, 0.0);
            const auto canon = make_solution_spec(
                EquationKind::KdV, SolutionFamily::CanonicalRatio, alpha, aux, 1.0);
            const auto named = make_solution_spec(
                EquationKind::KdV, SolutionFamily::Tan, alpha, aux, 1.0);
            CHECK(family_gap(canon, named, kSafeX) < 1e-10);
        }
        {
            // Trigonometric, A = 0: cot shape.
            const AuxParams aux(1.0, 1.0, 0.0, 1.0);
            const auto canon = make_solution_spec(
                EquationKind::KdV, SolutionFamily::CanonicalRatio, alpha, aux, 1.0);
            const auto named = make_solution_spec(
                EquationKind::KdV, SolutionFamily::Cot, alpha, aux, 1.0);
            CHECK(family_gap(canon, named, kSafeX) < 1e-10);
        }
        {
            // Zero discriminant: rational shape.
            const AuxParams aux(2.0, 1.0, 1.0, 0.5);
            const auto canon = make_solution_spec(
                EquationKind::KdV, SolutionFamily::CanonicalRatio, alpha, aux, 1.0);
            const auto named = make_solution_spec(
                EquationKind::KdV, SolutionFamily::Rational, alpha, aux, 1.0);
            CHECK(family_gap(canon, named, {0.3, 1.0, 2.0}) < 1e-10);
        }
    }
}

TEST_CASE("cubic-equation reductions match for every order, with the tan flip") {
    for (const double a : {0.6, 1.0}) {
        const FractionalOrder alpha(a);
        CAPTURE(a);
        {
            // Hyperbolic, B = 0: canonical Plus is the tanh Plus branch.
            const AuxParams aux(1.0, -1.0, 2.0, 0.0);
            const auto canon = make_solution_spec(
                EquationKind::MKdV, SolutionFamily::CanonicalRatio, alpha, aux, 1.5,
                0.0, SignBranch::Plus);
            const auto named = make_solution_spec(
                EquationKind::MKdV, SolutionFamily::Tanh, alpha, aux, 1.5, 0.0,
                SignBranch::Plus);
            CHECK(family_gap(canon, named, kSafeX) < 1e-10);
        }
        {
            // Hyperbolic, A = 0: coth, same branch.
            const AuxParams aux(1.0, -1.0, 0.0, 1.0);
            const auto canon = make_solution_spec(
                EquationKind::MKdV, SolutionFamily::CanonicalRatio, alpha, aux, 1.5,
                0.0, SignBranch::Plus);
            const auto named = make_solution_spec(
                EquationKind::MKdV, SolutionFamily::Coth, alpha, aux, 1.5, 0.0,
                SignBranch::Plus);
            CHECK(family_gap(canon, named, kSafeX) < 1e-10);
        }
        {
            // Trigonometric, B = 0: canonical Plus equals the tan MINUS branch.
            const AuxParams aux(1.0, 1.0, 1.0, 0.0);
            const auto canon = make_solution_spec(
                EquationKind::MKdV, SolutionFamily::CanonicalRatio, alpha, aux, 1.5,
                0.0, SignBranch::Plus);
            const auto named = make_solution_spec(
                EquationKind::MKdV, SolutionFamily::Tan, alpha, aux, 1.5, 0.0,
                SignBranch::Minus);
            CHECK(family_gap(canon, named, kSafeX) < 1e-10);
        }
        {
            // Trigonometric, A = 0: cot, same branch.
            const AuxParams aux(1.0, 1.0, 0.0, 1.0);
            const auto canon = make_solution_spec(
                EquationKind::MKdV, SolutionFamily::CanonicalRatio, alpha, aux, 1.5,
                0.0, SignBranch::Plus);
            const auto named = make_solution_spec(
                EquationKind::MKdV, SolutionFamily::Cot, alpha, aux, 1.5, 0.0,
                SignBranch::Plus);
            CHECK(family_gap(canon, named, kSafeX) < 1e-10);
        }
        {
            // Zero discriminant: rational, same branch.
            const AuxParams aux(2.0, 1.0, 1.0, 0.5);
            const auto canon = make_solution_spec(
                EquationKind::MKdV, SolutionFamily::CanonicalRatio, alpha, aux, 1.5,
                0.0, SignBranch::Plus);
            const auto named = make_solution_spec(
                EquationKind::MKdV, SolutionFamily::Rational, alpha, aux, 1.5, 0.0,
                SignBranch::Plus);
            CHECK(family_gap(canon, named, {0.3, 1.0, 2.0}) < 1e-10);
        }
    }
}

TEST_CASE("secant-shaped families coincide only at order one") {
    struct Probe {
        SolutionFamily family;
        AuxParams aux;
    };
    const std::vector<Probe> probes = {
        {SolutionFamily::Sech, AuxParams(1.0, -1.0, 1.0, 0.0)},
        {SolutionFamily::Csch, AuxParams(1.0, -1.0, 0.0, 1.0)},
        {SolutionFamily::Sec, AuxParams(1.0, 1.0, 1.0, 0.0)},
        {SolutionFamily::Csc, AuxParams(1.0, 1.0, 0.0, 1.0)},
    };
    for (const auto& probe : probes) {
        CAPTURE(to_string(probe.family));
        const auto canon_one = make_solution_spec(
            EquationKind::KdV, SolutionFamily::CanonicalRatio, FractionalOrder(1.0),
            probe.aux, 1.0);
        const auto named_one = make_solution_spec(
            EquationKind::KdV, probe.family, FractionalOrder(1.0), probe.aux, 1.0);
        CHECK(family_gap(canon_one, named_one, kSafeX) < 1e-11);

        // Away from order one the Pythagorean identities fail, and so does
        // the coincidence: these are genuinely different formal solutions.
        const auto canon_frac = make_solution_spec(
            EquationKind::KdV, SolutionFamily::CanonicalRatio, FractionalOrder(0.6),
            probe.aux, 1.0);
        const auto named_frac = make_solution_spec(
            EquationKind::KdV, probe.family, FractionalOrder(0.6), probe.aux, 1.0);
        CHECK(family_gap(canon_frac, named_frac, kSafeX) > 1e-6);
    }
}

TEST_CASE("grid sampling is t-major with exact endpoints") {
    const auto spec = make_solution_spec(EquationKind::KdV, SolutionFamily::Sech,
                                         FractionalOrder(1.0),
                                         AuxParams(0.0, -1.0, 1.0, 0.0), 1.0);
    GridSpec grid;
    grid.x_min = 0.5;
    grid.x_max = 1.0;
    grid.x_count = 3;
    grid.t_values = {0.2, 0.1};  // given order is preserved, not sorted

    const auto rows = sample_grid(spec, grid);
    REQUIRE(rows.size() == 6);
    CHECK(rows[0].t == 0.2);
    CHECK(rows[0].x == 0.5);
    CHECK(rows[1].x == doctest::Approx(0.75));
    CHECK(rows[2].x == 1.0);  // exact endpoint
    CHECK(rows[3].t == 0.1);
    CHECK(rows[3].x == 0.5);
    for (const auto& row : rows) {
        CHECK(row.u == evaluate_solution(spec, row.x, row.t));
    }
}

TEST_CASE("grid sampling propagates poles and validates its shape") {
    const auto spec = make_solution_spec(EquationKind::KdV, SolutionFamily::Coth,
                                         FractionalOrder(1.0),
                                         AuxParams(0.0, -1.0, 1.0, 0.0), 1.0);
    GridSpec through_zero;
    through_zero.x_min = -1.0;
    through_zero.x_max = 1.0;
    through_zero.x_count = 5;  // hits x = 0 at t = 0, a pole of coth
    through_zero.t_values = {0.0};
    CHECK_THROWS_AS(sample_grid(spec, through_zero), PoleError);

    GridSpec bad;
    bad.x_min = 0.0;
    bad.x_max = 1.0;
    bad.x_count = 1;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad.x_count = 4;
    bad.x_max = -1.0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad.x_max = 1.0;
    bad.t_values.clear();
    CHECK_THROWS_AS(bad.validate(), DomainError);
}
