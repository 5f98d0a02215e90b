#include "fracwave/solutions.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

namespace fracwave {

namespace {

constexpr double kCaseTolerance = 1e-12;
constexpr double kPoleTolerance = 1e-12;

double half_root(double magnitude) { return 0.5 * std::sqrt(magnitude); }

}  // namespace

std::string to_string(AuxCase c) {
    switch (c) {
        case AuxCase::Hyperbolic: return "hyperbolic";
        case AuxCase::Trigonometric: return "trigonometric";
        case AuxCase::Rational: return "rational";
    }
    throw ContractError("to_string(AuxCase): invalid enumerator");
}

AuxParams::AuxParams(double lambda, double mu, double A, double B)
    : lambda(lambda), mu(mu), A(A), B(B) {
    if (A == 0.0 && B == 0.0)
        throw DomainError("AuxParams: A and B cannot both vanish");
    if (!std::isfinite(lambda) || !std::isfinite(mu) || !std::isfinite(A) ||
        !std::isfinite(B))
        throw DomainError("AuxParams: parameters must be finite");
}

AuxCase AuxParams::aux_case() const {
    const double disc = discriminant();
    const double scale = std::max({1.0, lambda * lambda, std::abs(4.0 * mu)});
    if (std::abs(disc) <= kCaseTolerance * scale) return AuxCase::Rational;
    return disc > 0.0 ? AuxCase::Hyperbolic : AuxCase::Trigonometric;
}

double aux_solution_G(const AuxParams& aux, FractionalOrder alpha, double xi) {
    const double p = signed_power(xi, alpha.value());
    const double damping = mittag_leffler(alpha.value(), -0.5 * aux.lambda * p);
    switch (aux.aux_case()) {
        case AuxCase::Hyperbolic: {
            const double w = half_root(aux.discriminant());
            return damping *
                   (aux.A * frac_function(FracFunctionKind::Cosh, alpha, w * p) +
                    aux.B * frac_function(FracFunctionKind::Sinh, alpha, w * p));
        }
        case AuxCase::Trigonometric: {
            const double w = half_root(-aux.discriminant());
            return damping *
                   (aux.A * frac_function(FracFunctionKind::Cos, alpha, w * p) +
                    aux.B * frac_function(FracFunctionKind::Sin, alpha, w * p));
        }
        case AuxCase::Rational:
            return (aux.A + aux.B * p) * damping;
    }
    throw ContractError("aux_solution_G: invalid case enumerator");
}

double ratio_dgg(const AuxParams& aux, FractionalOrder alpha, double xi) {
    const double p = signed_power(xi, alpha.value());
    switch (aux.aux_case()) {
        case AuxCase::Hyperbolic: {
            const double w = half_root(aux.discriminant());
            const double ch = frac_function(FracFunctionKind::Cosh, alpha, w * p);
            const double sh = frac_function(FracFunctionKind::Sinh, alpha, w * p);
            const double denom = aux.A * ch + aux.B * sh;
            if (std::abs(denom) < kPoleTolerance)
                throw PoleError("ratio_dgg: hyperbolic denominator vanishes at xi=" +
                                std::to_string(xi));
            return -0.5 * aux.lambda + w * (aux.A * sh + aux.B * ch) / denom;
        }
        case AuxCase::Trigonometric: {
            const double w = half_root(-aux.discriminant());
            const double cs = frac_function(FracFunctionKind::Cos, alpha, w * p);
            const double sn = frac_function(FracFunctionKind::Sin, alpha, w * p);
            const double denom = aux.A * cs + aux.B * sn;
            if (std::abs(denom) < kPoleTolerance)
                throw PoleError("ratio_dgg: trigonometric denominator vanishes at xi=" +
                                std::to_string(xi));
            return -0.5 * aux.lambda + w * (-aux.A * sn + aux.B * cs) / denom;
        }
        case AuxCase::Rational: {
            const double denom = aux.A + aux.B * p;
            if (std::abs(denom) < kPoleTolerance)
                throw PoleError("ratio_dgg: rational denominator vanishes at xi=" +
                                std::to_string(xi));
            return -0.5 * aux.lambda + aux.B / denom;
        }
    }
    throw ContractError("ratio_dgg: invalid case enumerator");
}

double wave_speed(double c_alpha, FractionalOrder alpha) {
    if (alpha.is_classical()) return c_alpha;
    if (c_alpha == 0.0) return 0.0;
    const double magnitude = std::pow(std::abs(c_alpha), 1.0 / alpha.value());
    return c_alpha < 0.0 ? -magnitude : magnitude;
}

std::string to_string(SolutionFamily family) {
    switch (family) {
        case SolutionFamily::CanonicalRatio: return "canonical";
        case SolutionFamily::Tanh: return "tanh";
        case SolutionFamily::Coth: return "coth";
        case SolutionFamily::Sech: return "sech";
        case SolutionFamily::Csch: return "csch";
        case SolutionFamily::Tan: return "tan";
        case SolutionFamily::Cot: return "cot";
        case SolutionFamily::Sec: return "sec";
        case SolutionFamily::Csc: return "csc";
        case SolutionFamily::Rational: return "rational";
    }
    throw ContractError("to_string(SolutionFamily): invalid enumerator");
}

SolutionFamily parse_solution_family(const std::string& name) {
    for (const auto family :
         {SolutionFamily::CanonicalRatio, SolutionFamily::Tanh, SolutionFamily::Coth,
          SolutionFamily::Sech, SolutionFamily::Csch, SolutionFamily::Tan,
          SolutionFamily::Cot, SolutionFamily::Sec, SolutionFamily::Csc,
          SolutionFamily::Rational}) {
        if (to_string(family) == name) return family;
    }
    throw DomainError("unknown solution family: '" + name + "'");
}

namespace {

AuxCase family_case(SolutionFamily family) {
    switch (family) {
        case SolutionFamily::Tanh:
        case SolutionFamily::Coth:
        case SolutionFamily::Sech:
        case SolutionFamily::Csch:
            return AuxCase::Hyperbolic;
        case SolutionFamily::Tan:
        case SolutionFamily::Cot:
        case SolutionFamily::Sec:
        case SolutionFamily::Csc:
            return AuxCase::Trigonometric;
        case SolutionFamily::Rational:
            return AuxCase::Rational;
        default:
            throw ContractError("family_case: canonical family matches any case");
    }
}

bool kdv_only(SolutionFamily family) {
    return family == SolutionFamily::Sech || family == SolutionFamily::Csch ||
           family == SolutionFamily::Sec || family == SolutionFamily::Csc;
}

}  // namespace

SolutionSpec make_solution_spec(EquationKind equation, SolutionFamily family,
                                FractionalOrder alpha, AuxParams aux, double b,
                                double a0, SignBranch sign_branch) {
    if (!std::isfinite(b) || !std::isfinite(a0))
        throw DomainError("make_solution_spec: parameters must be finite");
    if (family != SolutionFamily::CanonicalRatio &&
        family_case(family) != aux.aux_case())
        throw ContractError("make_solution_spec: family '" + to_string(family) +
                            "' requires the " + to_string(family_case(family)) +
                            " case, but the parameters are " +
                            to_string(aux.aux_case()));
    if (equation == EquationKind::MKdV && kdv_only(family))
        throw ContractError("make_solution_spec: family '" + to_string(family) +
                            "' exists only for the KdV-type equation");
    if (equation == EquationKind::MKdV && family == SolutionFamily::Rational &&
        aux.B == 0.0)
        throw ContractError(
            "make_solution_spec: the mKdV rational family needs B != 0");

    std::map<std::string, double> params{
        {symbols::b, b}, {symbols::lambda, aux.lambda}, {symbols::mu, aux.mu}};
    double c_alpha = 0.0;
    double branch_a0 = a0;
    if (equation == EquationKind::KdV) {
        params[symbols::a(0)] = a0;
        c_alpha = closed_form_numeric(EquationKind::KdV, params)
                      .front()
                      .at(symbols::c_alpha);
    } else {
        const auto branches = closed_form_numeric(EquationKind::MKdV, params);
        const auto& branch =
            branches[sign_branch == SignBranch::Plus ? 0 : 1];
        c_alpha = branch.at(symbols::c_alpha);
        branch_a0 = branch.at(symbols::a(0));
    }

    return SolutionSpec{equation, family,      alpha,   aux,
                        branch_a0, b,          sign_branch,
                        c_alpha,   wave_speed(c_alpha, alpha)};
}

namespace {

double frac(FracFunctionKind kind, FractionalOrder alpha, double p) {
    return frac_function(kind, alpha, p);
}

double evaluate_kdv(const SolutionSpec& s, double xi) {
    const double lambda = s.aux.lambda;
    const double mu = s.aux.mu;
    const double disc = s.aux.discriminant();
    const double p = signed_power(xi, s.alpha.value());
    switch (s.family) {
        case SolutionFamily::CanonicalRatio: {
            const double r = ratio_dgg(s.aux, s.alpha, xi);
            return s.a0 - 12.0 * s.b * lambda * r - 12.0 * s.b * r * r;
        }
        case SolutionFamily::Tanh: {
            const double t = frac(FracFunctionKind::Tanh, s.alpha, half_root(disc) * p);
            return s.a0 + 3.0 * s.b * lambda * lambda - 3.0 * s.b * disc * t * t;
        }
        case SolutionFamily::Coth: {
            const double t = frac(FracFunctionKind::Coth, s.alpha, half_root(disc) * p);
            return s.a0 + 3.0 * s.b * lambda * lambda - 3.0 * s.b * disc * t * t;
        }
        case SolutionFamily::Sech: {
            const double t = frac(FracFunctionKind::Sech, s.alpha, half_root(disc) * p);
            return s.a0 + 12.0 * s.b * mu + 3.0 * s.b * disc * t * t;
        }
        case SolutionFamily::Csch: {
            const double t = frac(FracFunctionKind::Csch, s.alpha, half_root(disc) * p);
            return s.a0 + 12.0 * s.b * mu - 3.0 * s.b * disc * t * t;
        }
        case SolutionFamily::Tan: {
            const double t = frac(FracFunctionKind::Tan, s.alpha, half_root(-disc) * p);
            return s.a0 + 3.0 * s.b * lambda * lambda + 3.0 * s.b * disc * t * t;
        }
        case SolutionFamily::Cot: {
            const double t = frac(FracFunctionKind::Cot, s.alpha, half_root(-disc) * p);
            return s.a0 + 3.0 * s.b * lambda * lambda + 3.0 * s.b * disc * t * t;
        }
        case SolutionFamily::Sec: {
            const double t = frac(FracFunctionKind::Sec, s.alpha, half_root(-disc) * p);
            return s.a0 + 12.0 * s.b * mu + 3.0 * s.b * disc * t * t;
        }
        case SolutionFamily::Csc: {
            const double t = frac(FracFunctionKind::Csc, s.alpha, half_root(-disc) * p);
            return s.a0 + 12.0 * s.b * mu + 3.0 * s.b * disc * t * t;
        }
        case SolutionFamily::Rational: {
            const double denom = s.aux.A + s.aux.B * p;
            if (std::abs(denom) < kPoleTolerance)
                throw PoleError("evaluate_solution: rational denominator vanishes at xi=" +
                                std::to_string(xi));
            return s.a0 + 3.0 * s.b * lambda * lambda -
                   12.0 * s.b * s.aux.B * s.aux.B / (denom * denom);
        }
    }
    throw ContractError("evaluate_kdv: invalid family enumerator");
}

double evaluate_mkdv(const SolutionSpec& s, double xi) {
    const double sgn = s.sign_branch == SignBranch::Plus ? 1.0 : -1.0;
    const double root6b = std::sqrt(6.0 * s.b);
    const double disc = s.aux.discriminant();
    const double p = signed_power(xi, s.alpha.value());
    switch (s.family) {
        case SolutionFamily::CanonicalRatio: {
            const double r = ratio_dgg(s.aux, s.alpha, xi);
            return sgn * 0.5 * s.aux.lambda * root6b + sgn * root6b * r;
        }
        case SolutionFamily::Tanh:
            return sgn * 0.5 * root6b * std::sqrt(disc) *
                   frac(FracFunctionKind::Tanh, s.alpha, half_root(disc) * p);
        case SolutionFamily::Coth:
            return sgn * 0.5 * root6b * std::sqrt(disc) *
                   frac(FracFunctionKind::Coth, s.alpha, half_root(disc) * p);
        case SolutionFamily::Tan:
            return sgn * 0.5 * root6b * std::sqrt(-disc) *
                   frac(FracFunctionKind::Tan, s.alpha, half_root(-disc) * p);
        case SolutionFamily::Cot:
            return sgn * 0.5 * root6b * std::sqrt(-disc) *
                   frac(FracFunctionKind::Cot, s.alpha, half_root(-disc) * p);
        case SolutionFamily::Rational: {
            const double denom = p + s.aux.A / s.aux.B;
            if (std::abs(denom) < kPoleTolerance)
                throw PoleError("evaluate_solution: rational denominator vanishes at xi=" +
                                std::to_string(xi));
            return sgn * root6b / denom;
        }
        default:
            throw ContractError("evaluate_mkdv: family not available for mKdV");
    }
}

}  // namespace

double evaluate_solution(const SolutionSpec& spec, double x, double t) {
    const double xi = x + spec.c * t;
    return spec.equation == EquationKind::KdV ? evaluate_kdv(spec, xi)
                                              : evaluate_mkdv(spec, xi);
}

void GridSpec::validate() const {
    if (!(x_min < x_max))
        throw DomainError("GridSpec: x_min must be less than x_max");
    if (x_count < 2) throw DomainError("GridSpec: x_count must be >= 2");
    if (t_values.empty()) throw DomainError("GridSpec: at least one t value");
}

std::vector<double> GridSpec::x_points() const {
    std::vector<double> xs(x_count);
    const double step = (x_max - x_min) / (x_count - 1);
    for (int i = 0; i < x_count; ++i) xs[i] = x_min + step * i;
    xs.back() = x_max;  // land exactly on the endpoint
    return xs;
}

std::vector<SampleRow> sample_grid(const SolutionSpec& spec, const GridSpec& grid) {
    grid.validate();
    const auto xs = grid.x_points();
    const std::size_t total = grid.t_values.size() * xs.size();

    std::vector<SampleRow> rows(total);
    const auto evaluate_range = [&](std::size_t begin, std::size_t end) {
        for (std::size_t idx = begin; idx < end; ++idx) {
            const double t = grid.t_values[idx / xs.size()];
            const double x = xs[idx % xs.size()];
            rows[idx] = SampleRow{t, x, evaluate_solution(spec, x, t)};
        }
    };

    constexpr std::size_t kParallelThreshold = 4096;
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (total < kParallelThreshold || hw == 1) {
        evaluate_range(0, total);
        return rows;
    }

    // Points are independent; split into contiguous chunks and keep the
    // first (lowest-index) failure so errors are deterministic too.
    const std::size_t chunks = std::min<std::size_t>(hw, 16);
    const std::size_t chunk_size = (total + chunks - 1) / chunks;
    std::vector<std::exception_ptr> failures(chunks);
    std::vector<std::thread> workers;
    workers.reserve(chunks);
    for (std::size_t cidx = 0; cidx < chunks; ++cidx) {
        const std::size_t begin = cidx * chunk_size;
        const std::size_t end = std::min(total, begin + chunk_size);
        workers.emplace_back([&, cidx, begin, end] {
            try {
                evaluate_range(begin, end);
            } catch (...) {
                failures[cidx] = std::current_exception();
            }
        });
    }
    for (auto& worker : workers) worker.join();
    for (const auto& failure : failures)
        if (failure) std::rethrow_exception(failure);
    return rows;
}

}  // namespace fracwave
