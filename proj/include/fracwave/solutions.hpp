#ifndef FRACWAVE_SOLUTIONS_HPP
#define FRACWAVE_SOLUTIONS_HPP

#include <string>
#include <vector>

#include "fracwave/expansion.hpp"
#include "fracwave/mlf.hpp"

namespace fracwave {

/// Case of the auxiliary equation D^(2a)G + lambda D^a G + mu G = 0,
/// decided by the discriminant lambda^2 - 4 mu.
enum class AuxCase { Hyperbolic, Trigonometric, Rational };

std::string to_string(AuxCase c);

/// Auxiliary-equation parameters and the mixing constants of its general
/// solution.  (A, B) = (0, 0) is rejected: G would vanish identically and
/// the ratio D^aG / G would be undefined.
struct AuxParams {
    double lambda = 0.0;
    double mu = 0.0;
    double A = 1.0;
    double B = 0.0;

    AuxParams(double lambda, double mu, double A, double B);

    double discriminant() const { return lambda * lambda - 4.0 * mu; }

    /// Sign classification of the discriminant with tolerance 1e-12 relative
    /// to the magnitude of its ingredients.
    AuxCase aux_case() const;
};

/// General solution G of the auxiliary equation at fractional order alpha,
/// evaluated at xi (p = signed_power(xi, alpha) inside):
///   Hyperbolic:    E_a(-l p/2) (A cosh_a(w p) + B sinh_a(w p)), w = sqrt(l^2-4m)/2
///   Trigonometric: E_a(-l p/2) (A cos_a(w p)  + B sin_a(w p)),  w = sqrt(4m-l^2)/2
///   Rational:      (A + B p) E_a(-l p/2)
double aux_solution_G(const AuxParams& aux, FractionalOrder alpha, double xi);

/// The expansion variable w = D^aG / G in closed form:
///   Hyperbolic:    -l/2 + w (A sinh + B cosh) / (A cosh + B sinh)
///   Trigonometric: -l/2 + w (-A sin + B cos) / (A cos + B sin)
///   Rational:      -l/2 + B / (A + B p)
/// Raises PoleError when the denominator magnitude falls below 1e-12.
double ratio_dgg(const AuxParams& aux, FractionalOrder alpha, double xi);

/// Wave speed from its alpha-th power: sign(ca) |ca|^(1/alpha); alpha = 1
/// returns ca unchanged.
double wave_speed(double c_alpha, FractionalOrder alpha);

/// The catalog of closed-form solution shapes.  CanonicalRatio composes the
/// closed-form coefficients with ratio_dgg and is ground truth for every
/// alpha; the named families are literal single-function forms with zero
/// phase shift.  Tanh/Tan (at B=0), Coth/Cot (at A=0), and Rational are
/// exact algebraic consequences of CanonicalRatio for every alpha — the
/// reduction is polynomial in the ratio value and uses no functional
/// identities.  Sech/Csch/Sec/Csc coincide with CanonicalRatio only at
/// alpha = 1, where the Pythagorean identities hold.
enum class SolutionFamily {
    CanonicalRatio,
    Tanh, Coth, Sech, Csch,   // hyperbolic case
    Tan, Cot, Sec, Csc,       // trigonometric case
    Rational,                 // degenerate case
};

std::string to_string(SolutionFamily family);
SolutionFamily parse_solution_family(const std::string& name);

enum class SignBranch { Plus, Minus };

/// A fully determined traveling-wave solution u(x,t) = profile(x + c t).
/// Build with make_solution_spec, which validates family/case/equation
/// compatibility and caches c_alpha (from the closed form) and c.
struct SolutionSpec {
    EquationKind equation;
    SolutionFamily family;
    FractionalOrder alpha;
    AuxParams aux;
    double a0;               // KdV offset; for mKdV the branch value of a0
    double b;
    SignBranch sign_branch;  // used by mKdV families only
    double c_alpha;          // cached closed-form wave-speed power
    double c;                // cached wave speed
};

/// Validates and assembles a SolutionSpec.
///   - family must match aux.aux_case() (CanonicalRatio matches any case);
///   - Sech/Csch/Sec/Csc exist only for KdV;
///   - the mKdV Rational family needs B != 0 (its offset is A/B);
///   - mKdV needs b >= 0 for a real sqrt(6b), else RealityError.
/// a0 is the KdV offset and ignored for mKdV (the branch fixes it).
SolutionSpec make_solution_spec(EquationKind equation, SolutionFamily family,
                                FractionalOrder alpha, AuxParams aux, double b,
                                double a0 = 0.0,
                                SignBranch sign_branch = SignBranch::Plus);

/// Evaluates the traveling wave at (x, t) with phase xi = x + c t.
double evaluate_solution(const SolutionSpec& spec, double x, double t);

/// Uniform x-grid crossed with explicit t values.
struct GridSpec {
    double x_min = 0.0;
    double x_max = 1.0;
    int x_count = 2;                  // >= 2
    std::vector<double> t_values{0.0};

    void validate() const;
    std::vector<double> x_points() const;
};

struct SampleRow {
    double t, x, u;
};

/// Evaluates the solution over the grid, t-major then x ascending.  Points
/// are independent, so large grids are evaluated concurrently; rows are
/// buffered and returned in deterministic order, and the lowest-index
/// evaluation error (if any) is rethrown.
std::vector<SampleRow> sample_grid(const SolutionSpec& spec, const GridSpec& grid);

}  // namespace fracwave

#endif  // FRACWAVE_SOLUTIONS_HPP
