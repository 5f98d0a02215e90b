#ifndef FRACWAVE_MLF_HPP
#define FRACWAVE_MLF_HPP

#include <complex>
#include <string>

#include "fracwave/errors.hpp"

namespace fracwave {

/// Fractional order restricted to (0, 1].  Validated at construction so the
/// rest of the library can take the range for granted.
class FractionalOrder {
public:
    explicit FractionalOrder(double alpha) : alpha_(alpha) {
        if (!(alpha > 0.0) || !(alpha <= 1.0))
            throw DomainError("FractionalOrder: alpha must lie in (0,1], got " +
                              std::to_string(alpha));
    }
    double value() const { return alpha_; }
    bool is_classical() const { return alpha_ == 1.0; }

private:
    double alpha_;
};

/// One-parameter Mittag-Leffler function E_alpha(z) = sum_k z^k / Gamma(1+k*alpha).
///
/// Direct Kahan-compensated summation in extended precision; terms advance
/// through cached log-gamma ratios so the gamma values themselves never
/// overflow (at alpha = 1 the ratio is the exact reciprocal 1/k).  Summation
/// stops when the geometric tail bound |term|/(1-ratio) falls below 1e-15
/// relative to the partial sum; more than 10000 terms raises ConvergenceError
/// carrying the partial sum and last term magnitude.
///
/// ConvergenceError is also raised as an accuracy failure when the sum is
/// smaller than the largest term by a factor 1e16: past that point the
/// alternating series carries no correct digits (large negative real parts
/// at alpha < 1 reach this regime; an asymptotic expansion, which this
/// library does not provide, would be needed there).
///
/// Requires alpha > 0 (any positive order, not just (0,1]).
std::complex<double> mittag_leffler(double alpha, std::complex<double> z);

/// Real-argument convenience wrapper; the series has real coefficients, so
/// the result of a real argument is exactly real.
double mittag_leffler(double alpha, double x);

/// sign(xi) * |xi|^alpha — the real-valued continuation of xi^alpha used for
/// negative phases.  alpha == 1 returns xi unchanged (exactly).
double signed_power(double xi, double alpha);

/// The twelve generalized trigonometric/hyperbolic functions built from
/// E_alpha.  At alpha = 1 each reduces to its classical counterpart.
enum class FracFunctionKind {
    Sinh, Cosh, Tanh, Coth, Sech, Csch,
    Sin, Cos, Tan, Cot, Sec, Csc,
};

/// Parses "sinh", "cos", ... (lowercase).  Throws DomainError on unknown names.
FracFunctionKind parse_frac_function_kind(const std::string& name);
std::string to_string(FracFunctionKind kind);

/// Evaluates the generalized function of the given kind at phase p:
///   sinh_a(p) = (E_a(p) - E_a(-p))/2        cosh_a(p) = (E_a(p) + E_a(-p))/2
///   sin_a(p)  = (E_a(ip) - E_a(-ip))/(2i)   cos_a(p)  = (E_a(ip) + E_a(-ip))/2
/// and the eight ratio/reciprocal kinds built from these four.
///
/// Callers supply p directly (typically signed_power(xi, alpha) or a scaled
/// variant); this function performs no powering of its own.
///
/// For the circular kinds the combination is assembled in complex arithmetic
/// and the imaginary residue is checked to be <= 1e-13 relative before being
/// discarded; a larger residue raises ConvergenceError as an accuracy failure.
/// Ratio kinds raise PoleError when the denominator magnitude is below 1e-12.
double frac_function(FracFunctionKind kind, FractionalOrder alpha, double p);

}  // namespace fracwave

#endif  // FRACWAVE_MLF_HPP
