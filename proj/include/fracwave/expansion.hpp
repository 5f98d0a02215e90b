#ifndef FRACWAVE_EXPANSION_HPP
#define FRACWAVE_EXPANSION_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fracwave/wpoly.hpp"

namespace fracwave {

enum class EquationKind { KdV, MKdV };

std::string to_string(EquationKind kind);
EquationKind parse_equation_kind(const std::string& name);

/// The traveling-wave profile equation after one fractional integration:
///
///   C1 + (c_alpha + lin_f)*u + quad*u^2 + cub*u^3 + quart*u^4 + disp*D^(2a)u = 0
///
/// For the KdV-type convection a*u: quad = a/2.  For the modified-equation
/// convection h*u^2: cub = h/3 (signed).  A u^3 convection contributes
/// quart = c/4.  disp is the dispersion coefficient b.
struct ReducedOde {
    ParamExpr C1 = ParamExpr::symbol(symbols::C1);
    ParamExpr c_alpha = ParamExpr::symbol(symbols::c_alpha);
    ParamExpr lin_f;           // extra linear convection coefficient (default 0)
    Rational quad{0};          // u^2 coefficient
    Rational cub{0};           // u^3 coefficient
    Rational quart{0};         // u^4 coefficient
    ParamExpr disp = ParamExpr::symbol(symbols::b);

    /// u_t^(a) + u u_x^(a) + b u_xxx^(3a) = 0  ->  quad = 1/2.
    static ReducedOde kdv();
    /// u_t^(a) - u^2 u_x^(a) + b u_xxx^(3a) = 0  ->  cub = -1/3.
    static ReducedOde mkdv();
    /// General convection (a*u + h*u^2 + c*u^3 + f) u_x^(a).
    static ReducedOde generalized(Rational a, Rational h, Rational c, ParamExpr f);
};

/// u = sum_k coefficient[k] * w^k with nonzero leading coefficient
/// (the expansion's side condition a_n != 0).
struct ExpansionAnsatz {
    std::vector<ParamExpr> coefficients;  // index k multiplies w^k

    int degree() const { return static_cast<int>(coefficients.size()) - 1; }

    /// Symbolic ansatz a0 + a1 w + ... + an w^n.
    static ExpansionAnsatz symbolic(int n);

    void validate() const;
};

/// One polynomial equation per power of w, indices contiguous from 0.
struct CoefficientSystem {
    std::vector<ParamExpr> equations;  // equations[m] = coefficient of w^m
    ExpansionAnsatz ansatz;            // the ansatz that generated the system

    int max_power() const { return static_cast<int>(equations.size()) - 1; }

    /// Union of symbols across all equations.
    std::set<std::string> all_symbols() const;
};

/// Applies the ratio-variable derivative rule
///   D(w^n) = n * (-w^(n+1) - lambda*w^n - mu*w^(n-1)),
/// extended linearly over the polynomial; coefficient expressions are
/// constants under D.  lambda and mu enter as their canonical symbols.
WPolynomial apply_w_derivative(const WPolynomial& p);

/// p^k for k in {1,2,3,4}; other k is a contract violation (the method never
/// needs higher powers).
WPolynomial expand_ansatz_power(const WPolynomial& p, int k);

/// Balancing D^(2a)u against the highest nonlinearity u^k*: n*k = n+2, i.e.
/// n = 2/(k*-1).  Returns n in {1,2}; throws DomainError when no nonlinear
/// term is present or the balance degree is not a positive integer (the
/// quartic nonlinearity gives n = 2/3).
int homogeneous_balance(const ReducedOde& ode);

/// Substitutes the ansatz into the reduced equation and collects powers of w.
/// When homogeneous_balance(ode) exists the ansatz degree must equal it
/// (ContractError otherwise); when balance fails the caller's degree is
/// accepted as an exploratory choice.
CoefficientSystem build_coefficient_system(const ReducedOde& ode,
                                           const ExpansionAnsatz& ansatz);

/// One closed-form solution branch: solved symbols in terms of the free ones.
struct ClosedFormBranch {
    std::string label;                             // "kdv", "mkdv+", "mkdv-"
    std::map<std::string, ParamExpr> assignment;   // fully eliminated
};

/// The exact coefficient assignments that solve the system:
///   KdV:  a1 = -12 b lambda, a2 = -12 b, c_alpha = -a0 - 8 b mu - b lambda^2,
///         C1 = -c_alpha a0 - a0^2/2 + 12 b^2 mu (2 mu + lambda^2)   (eliminated)
///   mKdV: a0 = +/- (lambda/2) s, a1 = +/- s, c_alpha = b lambda^2/2 - 2 b mu,
///         C1 = 0, where s carries the relation s^2 = 6b.
/// KdV keeps a0 free (one branch); mKdV returns both sign branches.
std::vector<ClosedFormBranch> solve_closed_form(EquationKind kind);

/// The relation set {s^2 -> 6b} used by the modified-equation branches.
std::shared_ptr<const RelationSet> sqrt_6b_relation();

struct VerificationResult {
    bool ok = false;
    std::vector<ParamExpr> residuals;  // per equation, canonical form
};

/// Substitutes the assignment into every equation (relation rewrites from the
/// assignment's expressions apply) and reports the canonical residuals.
/// ok iff every residual is the zero polynomial.
VerificationResult verify_assignment(const CoefficientSystem& system,
                                     const std::map<std::string, ParamExpr>& assignment);

/// Numeric root finding over the symbols not fixed by the caller.
///
/// Damped (Gauss-)Newton from seeded uniform starts in [-300,300]^m: step
/// halving (max 30) on the residual norm, convergence when the max residual
/// falls below 1e-10 and the step below 1e-14 relative to max(1, |x|_inf) —
/// or when the line search stalls with the residual already below 1e-10,
/// which is the end state at the double noise floor of a large-magnitude
/// root.  Starts with singular normal matrices are abandoned.  Every
/// returned root satisfies max equation residual < 1e-10.  Converged roots
/// violating the ansatz side condition (|leading coefficient| < 1e-6) are
/// dropped — they belong to the degenerate constant-solution manifold, not
/// to the expansion.  Roots are deduplicated at 1e-8 and returned sorted, so
/// the output is deterministic for fixed inputs.
std::vector<std::map<std::string, double>> solve_numeric(
    const CoefficientSystem& system, const std::map<std::string, double>& fixed,
    int starts = 40, std::uint64_t seed = 0x3243F6A8885A308DULL);

/// Evaluates the closed-form branches at numeric parameters.
/// params must bind b, lambda, mu (and a0 for KdV).  The modified equation
/// requires b >= 0 for a real s = sqrt(6b); b < 0 raises RealityError.
std::vector<std::map<std::string, double>> closed_form_numeric(
    EquationKind kind, const std::map<std::string, double>& params);

}  // namespace fracwave

#endif  // FRACWAVE_EXPANSION_HPP
