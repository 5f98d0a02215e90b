#ifndef FRACWAVE_JSON_IO_HPP
#define FRACWAVE_JSON_IO_HPP

#include <json.hpp>

#include "fracwave/expansion.hpp"
#include "fracwave/verify.hpp"

namespace fracwave {

/// JSON forms used by the command-line tool.  Objects are emitted with sorted
/// keys (the library's default object container) and doubles round-trip.

/// "p" or "p/q".
nlohmann::json to_json(const Rational& r);

/// { "terms": [ {"c": "p/q", "m": {symbol: exponent, ...}}, ... ],
///   "text": human-readable form }
nlohmann::json to_json(const ParamExpr& e);

/// { "ansatz_degree": n, "equations": [ per-power expression, ... ] }
nlohmann::json to_json(const CoefficientSystem& system);

/// Symbol -> expression object.
nlohmann::json assignment_to_json(const std::map<std::string, ParamExpr>& assignment);

/// Symbol -> number object.
nlohmann::json assignment_to_json(const std::map<std::string, double>& assignment);

/// Full report: name, kind, asserted, pass, max_abs, detail entries, grid
/// (step, residual) pairs with the fitted slope when present, and the note.
nlohmann::json to_json(const ResidualReport& report);

}  // namespace fracwave

#endif  // FRACWAVE_JSON_IO_HPP
