#include "fracwave/json_io.hpp"

namespace fracwave {

nlohmann::json to_json(const Rational& r) { return r.to_string(); }

nlohmann::json to_json(const ParamExpr& e) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [monomial, coeff] : e.terms()) {
        nlohmann::json m = nlohmann::json::object();
        for (const auto& [sym, exp] : monomial) m[sym] = exp;
        terms.push_back({{"c", to_json(coeff)}, {"m", m}});
    }
    return {{"terms", terms}, {"text", e.to_string()}};
}

nlohmann::json to_json(const CoefficientSystem& system) {
    nlohmann::json equations = nlohmann::json::array();
    for (const auto& eq : system.equations) equations.push_back(to_json(eq));
    return {{"ansatz_degree", system.ansatz.degree()}, {"equations", equations}};
}

nlohmann::json assignment_to_json(const std::map<std::string, ParamExpr>& assignment) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [sym, expr] : assignment) out[sym] = to_json(expr);
    return out;
}

nlohmann::json assignment_to_json(const std::map<std::string, double>& assignment) {
    nlohmann::json out = nlohmann::json::object();
    for (const auto& [sym, value] : assignment) out[sym] = value;
    return out;
}

nlohmann::json to_json(const ResidualReport& report) {
    nlohmann::json detail = nlohmann::json::array();
    for (const auto& entry : report.detail) {
        nlohmann::json row = {{"label", entry.label}, {"value", entry.value}};
        if (!entry.text.empty()) row["text"] = entry.text;
        detail.push_back(std::move(row));
    }
    nlohmann::json out = {
        {"name", report.name},        {"kind", to_string(report.kind)},
        {"asserted", report.asserted}, {"pass", report.pass},
        {"max_abs", report.max_abs},  {"detail", detail},
    };
    if (!report.grids.empty()) {
        nlohmann::json grids = nlohmann::json::array();
        for (const auto& [step, residual] : report.grids)
            grids.push_back({{"step", step}, {"residual", residual}});
        out["grids"] = grids;
        out["slope"] = report.slope;
    }
    if (!report.note.empty()) out["note"] = report.note;
    return out;
}

}  // namespace fracwave
