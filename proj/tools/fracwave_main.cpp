#include <cstdio>
#include <functional>
#include <iostream>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fracwave/json_io.hpp"
#include "fracwave/mlf.hpp"
#include "fracwave/solutions.hpp"
#include "fracwave/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitArgument = 2;
constexpr int kExitEvaluation = 3;
constexpr double kMatchTolerance = 1e-8;  // numeric root vs closed-form branch

int fail(int code, const std::string& message) {
    std::cerr << "error: " << message << "\n";
    return code;
}

/// Runs a command body with the library's error taxonomy mapped to exit
/// codes.  DomainError means bad arguments until the body flips `evaluating`
/// (after which it means an evaluation failure, e.g. a non-finite quadrature
/// node); the pole/convergence/reality/overflow family is always evaluation.
int guarded(const std::function<int(bool& evaluating)>& body) {
    bool evaluating = false;
    try {
        return body(evaluating);
    } catch (const fracwave::PoleError& e) {
        return fail(kExitEvaluation, e.what());
    } catch (const fracwave::ConvergenceError& e) {
        return fail(kExitEvaluation, e.what());
    } catch (const fracwave::RealityError& e) {
        return fail(kExitEvaluation, e.what());
    } catch (const fracwave::OverflowError& e) {
        return fail(kExitEvaluation, e.what());
    } catch (const fracwave::UnsupportedError& e) {
        return fail(kExitEvaluation, e.what());
    } catch (const fracwave::DomainError& e) {
        return fail(evaluating ? kExitEvaluation : kExitArgument, e.what());
    } catch (const fracwave::ContractError& e) {
        return fail(kExitArgument, e.what());
    } catch (const std::exception& e) {
        return fail(kExitEvaluation, e.what());
    }
}

std::string format_double(double v) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.17g", v);
    return buffer;
}

struct MlEvalOptions {
    double alpha = 0.0;
    double z = 0.0;
    std::string kind;
};

int cmd_ml_eval(const MlEvalOptions& opt) {
    return guarded([&](bool& evaluating) {
        double value = 0.0;
        if (opt.kind.empty()) {
            if (!(opt.alpha > 0.0))
                throw fracwave::DomainError("ml-eval: alpha must be positive");
            evaluating = true;
            value = fracwave::mittag_leffler(opt.alpha, opt.z);
        } else {
            const auto kind = fracwave::parse_frac_function_kind(opt.kind);
            const fracwave::FractionalOrder alpha(opt.alpha);
            evaluating = true;
            value = fracwave::frac_function(kind, alpha, opt.z);
        }
        std::cout << nlohmann::json(value).dump() << "\n";
        return kExitOk;
    });
}

struct DeriveOptions {
    std::string equation;
    std::string a = "0", h = "0", c = "0", f = "0";
    bool custom = false;  // any of a/h/c/f given
};

int cmd_derive(const DeriveOptions& opt) {
    return guarded([&](bool& evaluating) {
        const auto kind = fracwave::parse_equation_kind(opt.equation);
        fracwave::ReducedOde ode = kind == fracwave::EquationKind::KdV
                                       ? fracwave::ReducedOde::kdv()
                                       : fracwave::ReducedOde::mkdv();
        if (opt.custom) {
            ode = fracwave::ReducedOde::generalized(
                fracwave::Rational::parse(opt.a), fracwave::Rational::parse(opt.h),
                fracwave::Rational::parse(opt.c),
                fracwave::ParamExpr(fracwave::Rational::parse(opt.f)));
        }
        evaluating = true;
        const int degree = fracwave::homogeneous_balance(ode);
        const auto system = fracwave::build_coefficient_system(
            ode, fracwave::ExpansionAnsatz::symbolic(degree));
        std::cout << fracwave::to_json(system).dump() << "\n";
        return kExitOk;
    });
}

struct SolveOptions {
    std::string equation;
    double b = 0.0, lambda = 0.0, mu = 0.0, a0 = 0.0;
    bool a0_given = false;
    bool numeric = false;
};

int cmd_solve(const SolveOptions& opt) {
    return guarded([&](bool& evaluating) {
        const auto kind = fracwave::parse_equation_kind(opt.equation);
        if (kind == fracwave::EquationKind::MKdV && opt.a0_given)
            throw fracwave::DomainError(
                "solve: a0 is fixed by the sign branch for the modified equation; "
                "remove --a0");

        std::map<std::string, double> params = {
            {fracwave::symbols::b, opt.b},
            {fracwave::symbols::lambda, opt.lambda},
            {fracwave::symbols::mu, opt.mu},
        };
        if (kind == fracwave::EquationKind::KdV)
            params[fracwave::symbols::a(0)] = opt.a0;

        evaluating = true;
        const auto symbolic = fracwave::solve_closed_form(kind);
        const auto values = fracwave::closed_form_numeric(kind, params);

        nlohmann::json branches = nlohmann::json::array();
        for (std::size_t i = 0; i < values.size(); ++i) {
            branches.push_back({{"label", symbolic[i].label},
                                {"assignment", fracwave::assignment_to_json(values[i])}});
        }
        nlohmann::json out = {{"branches", branches}};

        int code = kExitOk;
        if (opt.numeric) {
            const auto ode = kind == fracwave::EquationKind::KdV
                                 ? fracwave::ReducedOde::kdv()
                                 : fracwave::ReducedOde::mkdv();
            const auto system = fracwave::build_coefficient_system(
                ode, fracwave::ExpansionAnsatz::symbolic(
                         fracwave::homogeneous_balance(ode)));
            const auto roots = fracwave::solve_numeric(system, params);

            bool all_match = true;
            nlohmann::json roots_json = nlohmann::json::array();
            for (const auto& root : roots) {
                double best = std::numeric_limits<double>::infinity();
                for (const auto& branch : values) {
                    double dist = 0.0;
                    for (const auto& [sym, value] : root) {
                        const auto it = branch.find(sym);
                        if (it == branch.end()) {
                            dist = std::numeric_limits<double>::infinity();
                            break;
                        }
                        dist = std::max(dist, std::abs(value - it->second));
                    }
                    best = std::min(best, dist);
                }
                if (!(best <= kMatchTolerance)) all_match = false;
                roots_json.push_back(fracwave::assignment_to_json(root));
            }
            out["numeric_roots"] = roots_json;
            out["numeric_matches_closed_form"] = all_match;
            if (!all_match) {
                std::cerr << "error: a numeric root does not match any closed-form "
                             "branch within "
                          << kMatchTolerance << "\n";
                code = kExitVerifyFailed;
            }
        }

        std::cout << out.dump() << "\n";
        return code;
    });
}

struct SampleOptions {
    std::string equation;
    std::string family;
    double alpha = 1.0;
    double b = 0.0, lambda = 0.0, mu = 0.0, a0 = 0.0;
    bool a0_given = false;
    double A = 1.0, B = 0.0;
    double x_min = 0.0, x_max = 1.0;
    int x_count = 2;
    std::vector<double> t_values;
    std::string format = "csv";
};

int cmd_sample(const SampleOptions& opt) {
    return guarded([&](bool& evaluating) {
        const auto kind = fracwave::parse_equation_kind(opt.equation);
        const auto family = fracwave::parse_solution_family(opt.family);
        if (kind == fracwave::EquationKind::MKdV && opt.a0_given)
            throw fracwave::DomainError(
                "sample: a0 is fixed by the sign branch for the modified equation; "
                "remove --a0");
        const fracwave::FractionalOrder alpha(opt.alpha);
        const fracwave::AuxParams aux(opt.lambda, opt.mu, opt.A, opt.B);

        fracwave::GridSpec grid;
        grid.x_min = opt.x_min;
        grid.x_max = opt.x_max;
        grid.x_count = opt.x_count;
        grid.t_values = opt.t_values;
        grid.validate();

        const auto spec =
            fracwave::make_solution_spec(kind, family, alpha, aux, opt.b, opt.a0);

        nlohmann::json metadata = {
            {"equation", fracwave::to_string(spec.equation)},
            {"family", fracwave::to_string(spec.family)},
            {"alpha", spec.alpha.value()},
            {"lambda", spec.aux.lambda},
            {"mu", spec.aux.mu},
            {"A", spec.aux.A},
            {"B", spec.aux.B},
            {"a0", spec.a0},
            {"b", spec.b},
            {"c_alpha", spec.c_alpha},
            {"c", spec.c},
        };
        if (kind == fracwave::EquationKind::MKdV)
            metadata["sign"] =
                spec.sign_branch == fracwave::SignBranch::Plus ? "+" : "-";

        evaluating = true;
        const auto rows = fracwave::sample_grid(spec, grid);

        if (opt.format == "csv") {
            std::string out;
            out.reserve(rows.size() * 64 + 256);
            out += "# " + metadata.dump() + "\n";
            out += "t,x,u\n";
            for (const auto& row : rows) {
                out += format_double(row.t);
                out += ',';
                out += format_double(row.x);
                out += ',';
                out += format_double(row.u);
                out += '\n';
            }
            std::cout << out;
        } else {
            nlohmann::json rows_json = nlohmann::json::array();
            for (const auto& row : rows)
                rows_json.push_back({row.t, row.x, row.u});
            std::cout
                << nlohmann::json({{"metadata", metadata}, {"rows", rows_json}}).dump()
                << "\n";
        }
        return kExitOk;
    });
}

int cmd_verify(const std::string& suite) {
    return guarded([&](bool& evaluating) {
        evaluating = true;  // suite name is pre-validated by the option check
        const auto reports = fracwave::run_suite(suite);
        int failed = 0;
        for (const auto& report : reports) {
            std::cout << fracwave::to_json(report).dump() << "\n";
            if (report.asserted && !report.pass) ++failed;
        }
        if (failed > 0) {
            std::cerr << "verify: " << failed << " of " << reports.size()
                      << " asserted checks failed\n";
            return kExitVerifyFailed;
        }
        return kExitOk;
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "ratio-expansion solver for fractional KdV-type traveling waves: "
        "evaluate Mittag-Leffler functions, derive and solve coefficient "
        "systems, sample solution grids, and run verification suites"};
    app.name("fracwave");
    app.set_help_flag("--help", "print help and exit");
    app.require_subcommand(1);

    int exit_code = kExitOk;

    MlEvalOptions ml;
    auto* ml_cmd = app.add_subcommand(
        "ml-eval", "evaluate E_alpha(z) or a generalized trig/hyperbolic function");
    ml_cmd->set_help_flag("--help", "print help and exit");
    ml_cmd->add_option("--alpha", ml.alpha, "fractional order")->required();
    ml_cmd->add_option("--z", ml.z, "argument (the phase for --kind)")->required();
    ml_cmd->add_option("--kind", ml.kind,
                       "generalized function: sinh|cosh|tanh|coth|sech|csch|"
                       "sin|cos|tan|cot|sec|csc (default: E_alpha itself)");
    ml_cmd->callback([&] { exit_code = cmd_ml_eval(ml); });

    DeriveOptions derive;
    auto* derive_cmd = app.add_subcommand(
        "derive", "build the symbolic coefficient system of an equation");
    derive_cmd->set_help_flag("--help", "print help and exit");
    derive_cmd->add_option("--equation", derive.equation, "kdv|mkdv")->required();
    auto* opt_a = derive_cmd->add_option(
        "--a", derive.a, "u convection coefficient (rational, custom equation)");
    auto* opt_h = derive_cmd->add_option(
        "--h", derive.h, "u^2 convection coefficient (rational, custom equation)");
    auto* opt_c = derive_cmd->add_option(
        "--c", derive.c, "u^3 convection coefficient (rational, custom equation)");
    auto* opt_f = derive_cmd->add_option(
        "--f", derive.f, "constant convection offset (rational, custom equation)");
    derive_cmd->callback([&] {
        derive.custom = opt_a->count() || opt_h->count() || opt_c->count() ||
                        opt_f->count();
        exit_code = cmd_derive(derive);
    });

    SolveOptions solve;
    auto* solve_cmd = app.add_subcommand(
        "solve", "evaluate the closed-form coefficient branches numerically");
    solve_cmd->set_help_flag("--help", "print help and exit");
    solve_cmd->add_option("--equation", solve.equation, "kdv|mkdv")->required();
    solve_cmd->add_option("--b", solve.b, "dispersion coefficient")->required();
    solve_cmd->add_option("--lambda", solve.lambda, "auxiliary damping")->required();
    solve_cmd->add_option("--mu", solve.mu, "auxiliary restoring term")->required();
    auto* solve_a0 = solve_cmd->add_option("--a0", solve.a0, "offset (kdv only)");
    solve_cmd->add_flag("--numeric", solve.numeric,
                        "cross-check the branches against numeric root finding");
    solve_cmd->callback([&] {
        solve.a0_given = solve_a0->count() > 0;
        exit_code = cmd_solve(solve);
    });

    SampleOptions sample;
    auto* sample_cmd = app.add_subcommand(
        "sample", "evaluate a solution family over a space-time grid");
    sample_cmd->set_help_flag("--help", "print help and exit");
    sample_cmd->add_option("--equation", sample.equation, "kdv|mkdv")->required();
    sample_cmd->add_option("--family", sample.family,
                           "canonical|tanh|coth|sech|csch|tan|cot|sec|csc|rational")
        ->required();
    sample_cmd->add_option("--alpha", sample.alpha, "fractional order in (0,1]")
        ->required();
    sample_cmd->add_option("--b", sample.b, "dispersion coefficient")->required();
    sample_cmd->add_option("--lambda", sample.lambda, "auxiliary damping")->required();
    sample_cmd->add_option("--mu", sample.mu, "auxiliary restoring term")->required();
    auto* sample_a0 = sample_cmd->add_option("--a0", sample.a0, "offset (kdv only)");
    sample_cmd->add_option("--A", sample.A, "mixing constant A (default 1)");
    sample_cmd->add_option("--B", sample.B, "mixing constant B (default 0)");
    sample_cmd->add_option("--x-min", sample.x_min, "grid start")->required();
    sample_cmd->add_option("--x-max", sample.x_max, "grid end")->required();
    sample_cmd->add_option("--x-count", sample.x_count, "grid points (>= 2)")
        ->required();
    sample_cmd->add_option("--t", sample.t_values, "time values t1,t2,...")
        ->required()
        ->delimiter(',');
    sample_cmd->add_option("--format", sample.format, "csv|json (default csv)")
        ->check(CLI::IsMember({"csv", "json"}));
    sample_cmd->callback([&] {
        sample.a0_given = sample_a0->count() > 0;
        exit_code = cmd_sample(sample);
    });

    std::string suite = "all";
    auto* verify_cmd =
        app.add_subcommand("verify", "run verification suites (reports as JSON lines)");
    verify_cmd->set_help_flag("--help", "print help and exit");
    verify_cmd->add_option("--suite", suite, "symbolic|aux|classical|all (default all)")
        ->check(CLI::IsMember({"symbolic", "aux", "classical", "all"}));
    verify_cmd->callback([&] { exit_code = cmd_verify(suite); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitArgument;
    }
    return exit_code;
}
