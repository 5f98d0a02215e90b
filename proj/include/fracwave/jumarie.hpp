#ifndef FRACWAVE_JUMARIE_HPP
#define FRACWAVE_JUMARIE_HPP

#include <functional>

#include "fracwave/mlf.hpp"

namespace fracwave {

/// Controls the numeric evaluation of the modified Riemann-Liouville
/// derivative.
///
///   node_count:        Gauss-Legendre nodes per quadrature panel (>= 16).
///   outer_step:        scale of the outer central-difference step; the
///                      actual step is outer_step * max(1, x), clamped to
///                      x/2 so x - h stays positive.
///   singularity_split: fraction (0,1) of [0,x] adjacent to the singular
///                      endpoint xi = x that is integrated under the
///                      smoothing change of variable u = (x-xi)^(1-alpha).
struct QuadratureSpec {
    int node_count = 64;
    double outer_step = 1e-4;
    double singularity_split = 0.5;

    void validate() const;
};

/// Numeric modified Riemann-Liouville derivative of order alpha in (0,1):
///
///   D^a f(x) = 1/Gamma(1-a) * d/dx  Integral_0^x (x-xi)^(-a) (f(xi)-f(0)) dxi
///
/// The inner weakly singular integral is evaluated by Gauss-Legendre panels:
/// the fraction of [0,x] next to xi = x is first smoothed by the substitution
/// u = (x-xi)^(1-a), and panels are geometrically graded toward both
/// endpoints so algebraic behavior of f at 0 (e.g. f ~ xi^0.5) converges to
/// tolerance as well.  The outer d/dx is a central difference.
///
/// Preconditions: 0 < alpha < 1 (alpha = 1 is rejected; use a classical
/// derivative there), x > 0, f evaluable on [0, x + step].
/// Throws DomainError for bad inputs and for non-finite f values, naming the
/// offending node.
double jumarie_derivative(const std::function<double(double)>& f,
                          FractionalOrder alpha, double x,
                          const QuadratureSpec& spec = {});

/// Closed-form fractional derivative of the pure power x^gamma:
///
///   D^a x^gamma = Gamma(1+gamma)/Gamma(1+gamma-a) * x^(gamma-a),  gamma > -1.
///
/// Serves as the quadrature's oracle.  Throws DomainError for gamma <= -1 or
/// x <= 0; throws PoleError when 1+gamma-alpha hits a non-positive integer
/// (a gamma-function pole).
double jumarie_power_rule(double gamma, FractionalOrder alpha, double x);

/// lambda * E_alpha(lambda * x^alpha): the exact derivative of the
/// Mittag-Leffler eigenfunction x -> E_alpha(lambda x^alpha), against which
/// the quadrature is validated.  Requires x > 0.
double mlf_eigenfunction_derivative(double lambda, FractionalOrder alpha, double x);

}  // namespace fracwave

#endif  // FRACWAVE_JUMARIE_HPP
