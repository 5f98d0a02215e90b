#include "fracwave/jumarie.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <vector>

namespace fracwave {

namespace {

struct GaussRule {
    std::vector<double> nodes;    // on (-1, 1), symmetric
    std::vector<double> weights;  // sum to 2
};

// Gauss-Legendre nodes/weights by Newton iteration on P_n (standard
// three-term recurrence).  Rules are cached per node count; the cache is
// guarded so concurrent derivative evaluations stay safe.
const GaussRule& gauss_legendre(int n) {
    static std::map<int, GaussRule> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return cache.emplace(n, std::move(rule)).first->second;
}

void check_finite(double value, double node, const char* where) {
    if (!std::isfinite(value))
        throw DomainError(std::string("jumarie_derivative: non-finite integrand in ") +
                          where + " at node " + std::to_string(node));
}

// Integrates g over [lo, hi] with a single Gauss-Legendre panel.
double gl_panel(const std::function<double(double)>& g, double lo, double hi,
                const GaussRule& rule, const char* where) {
    const double mid = 0.5 * (lo + hi);
    const double halfw = 0.5 * (hi - lo);
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        const double t = mid + halfw * rule.nodes[i];
        const double v = g(t);
        check_finite(v, t, where);
        acc += rule.weights[i] * v;
    }
    return acc * halfw;
}

// Integrates g over [0, length] with panels geometrically graded toward 0,
// where the integrand may have algebraic (non-polynomial) behavior.  The
// grading keeps each panel's distance-to-singularity proportional to its
// width, which restores spectral Gauss-Legendre accuracy panel by panel.
constexpr double kGradeRatio = 0.25;
constexpr int kGradeLevels = 18;

double graded_integral(const std::function<double(double)>& g, double length,
                       const GaussRule& rule, const char* where) {
    if (length <= 0.0) return 0.0;
    double acc = 0.0;
    double hi = length;
    for (int level = 0; level < kGradeLevels; ++level) {
        const double lo = hi * kGradeRatio;
        acc += gl_panel(g, lo, hi, rule, where);
        hi = lo;
    }
    acc += gl_panel(g, 0.0, hi, rule, where);  // closing sliver at the endpoint
    return acc;
}

// Integral_0^X (X-xi)^(-a) (f(xi) - f0) dxi for 0 < a < 1.
//
// The sub-interval [X(1-split), X] is transformed with u = (X-xi)^(1-a),
// which removes the weight singularity exactly:
//   Integral = 1/(1-a) * Integral_0^U (f(X - u^(1/(1-a))) - f0) du,
//   U = (split*X)^(1-a).
// Both sub-integrals are graded toward the endpoint where algebraic behavior
// can live (u = 0, respectively xi = 0).
double singular_integral(const std::function<double(double)>& f, double a,
                         double X, double f0, const QuadratureSpec& spec) {
    const GaussRule& rule = gauss_legendre(spec.node_count);
    const double split_point = X * (1.0 - spec.singularity_split);

    // Smoothed region adjacent to the singular endpoint xi = X.
    const double U = std::pow(X - split_point, 1.0 - a);
    const double inv_exp = 1.0 / (1.0 - a);
    const auto smoothed = [&](double u) {
        const double xi = X - std::pow(u, inv_exp);
        return f(xi) - f0;
    };
    double acc = graded_integral(smoothed, U, rule, "smoothed region") / (1.0 - a);

    // Remaining region [0, split_point]: weight is analytic there, but f may
    // have algebraic behavior at xi = 0 -> grade toward 0.
    const auto weighted = [&](double xi) {
        return std::pow(X - xi, -a) * (f(xi) - f0);
    };
    acc += graded_integral(weighted, split_point, rule, "weighted region");
    return acc;
}

}  // namespace

void QuadratureSpec::validate() const {
    if (node_count < 16)
        throw DomainError("QuadratureSpec: node_count must be >= 16, got " +
                          std::to_string(node_count));
    if (!(outer_step > 0.0))
        throw DomainError("QuadratureSpec: outer_step must be positive");
    if (!(singularity_split > 0.0) || !(singularity_split < 1.0))
        throw DomainError("QuadratureSpec: singularity_split must lie in (0,1)");
}

double jumarie_derivative(const std::function<double(double)>& f,
                          FractionalOrder alpha, double x,
                          const QuadratureSpec& spec) {
    spec.validate();
    const double a = alpha.value();
    if (a >= 1.0)
        throw DomainError(
            "jumarie_derivative: requires 0 < alpha < 1; at alpha = 1 use a "
            "classical derivative");
    if (!(x > 0.0))
        throw DomainError("jumarie_derivative: x must be positive, got " +
                          std::to_string(x));

    const double f0 = f(0.0);
    check_finite(f0, 0.0, "base point");

    const double h = std::min(spec.outer_step * std::max(1.0, x), 0.5 * x);
    const double upper = singular_integral(f, a, x + h, f0, spec);
    const double lower = singular_integral(f, a, x - h, f0, spec);
    return (upper - lower) / (2.0 * h) / std::tgamma(1.0 - a);
}

double jumarie_power_rule(double gamma, FractionalOrder alpha, double x) {
    if (!(gamma > -1.0))
        throw DomainError("jumarie_power_rule: gamma must exceed -1, got " +
                          std::to_string(gamma));
    if (!(x > 0.0))
        throw DomainError("jumarie_power_rule: x must be positive, got " +
                          std::to_string(x));
    const double t = 1.0 + gamma - alpha.value();
    const double nearest = std::round(t);
    if (t < 0.5 && std::abs(t - nearest) < 1e-12 && nearest <= 0.0)
        throw PoleError("jumarie_power_rule: Gamma(" + std::to_string(t) +
                        ") pole (1+gamma-alpha is a non-positive integer)");
    return std::tgamma(1.0 + gamma) / std::tgamma(t) *
           std::pow(x, gamma - alpha.value());
}

double mlf_eigenfunction_derivative(double lambda, FractionalOrder alpha, double x) {
    if (!(x > 0.0))
        throw DomainError("mlf_eigenfunction_derivative: x must be positive, got " +
                          std::to_string(x));
    return lambda * mittag_leffler(alpha.value(),
                                   lambda * std::pow(x, alpha.value()));
}

}  // namespace fracwave
