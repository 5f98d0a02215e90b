#ifndef FRACWAVE_PARAM_EXPR_HPP
#define FRACWAVE_PARAM_EXPR_HPP

#include <map>
#include <memory>
#include <set>
#include <string>

#include "fracwave/rational.hpp"

namespace fracwave {

class RelationSet;

/// A monomial over named symbols: symbol -> positive exponent.
/// The empty map is the constant monomial.
using Monomial = std::map<std::string, int>;

/// The symbol names this library uses for the expansion algebra.  Nothing in
/// ParamExpr is restricted to these; they are just the canonical vocabulary.
namespace symbols {
inline const std::string lambda = "lambda";   // auxiliary-equation damping
inline const std::string mu = "mu";           // auxiliary-equation restoring term
inline const std::string b = "b";             // dispersion coefficient
inline const std::string c_alpha = "c_alpha"; // wave-speed power c^alpha
inline const std::string C1 = "C1";           // integration constant
inline const std::string s = "s";             // sqrt(6b), constrained by s^2 = 6b
std::string a(int k);                         // ansatz coefficients a0, a1, ...
}  // namespace symbols

/// Multivariate polynomial with exact rational coefficients over named
/// symbols, plus an optional relation set of square rewrites (s^2 -> 6b)
/// applied confluently during normalization.
///
/// Canonical form: like monomials combined, zero coefficients pruned,
/// monomials held in sorted order, relation rewrites applied to fixpoint.
/// Every constructor and operator returns canonical form, and equality is
/// equality of canonical forms.
class ParamExpr {
public:
    ParamExpr() = default;                       // zero
    ParamExpr(Rational c);                       // NOLINT: constant, implicit by design
    ParamExpr(std::int64_t c) : ParamExpr(Rational(c)) {}  // NOLINT

    static ParamExpr symbol(const std::string& name);
    static ParamExpr constant(const Rational& c) { return ParamExpr(c); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term value (the whole value if is_constant()).
    Rational constant_value() const;

    const std::map<Monomial, Rational>& terms() const { return terms_; }
    std::shared_ptr<const RelationSet> relations() const { return relations_; }

    /// Returns a copy normalized under the given relation set (rewrites
    /// applied immediately and carried by all derived expressions).
    ParamExpr with_relations(std::shared_ptr<const RelationSet> relations) const;

    ParamExpr operator-() const;
    friend ParamExpr operator+(const ParamExpr& a, const ParamExpr& b);
    friend ParamExpr operator-(const ParamExpr& a, const ParamExpr& b);
    friend ParamExpr operator*(const ParamExpr& a, const ParamExpr& b);
    ParamExpr& operator+=(const ParamExpr& o) { return *this = *this + o; }
    ParamExpr& operator-=(const ParamExpr& o) { return *this = *this - o; }
    ParamExpr& operator*=(const ParamExpr& o) { return *this = *this * o; }

    /// Non-negative integer power.
    ParamExpr pow(int e) const;

    /// Simultaneous substitution: every symbol with a binding is replaced by
    /// its expression; unbound symbols stay symbolic.
    ParamExpr substitute(const std::map<std::string, ParamExpr>& binding) const;

    /// Numeric evaluation; every symbol occurring in the expression must be
    /// bound or ContractError is thrown.
    double eval(const std::map<std::string, double>& binding) const;

    /// Exact partial derivative with respect to one symbol.
    ParamExpr derivative(const std::string& name) const;

    /// All symbols occurring with nonzero coefficient.
    std::set<std::string> symbols() const;

    /// Deterministic human-readable form, e.g. "-12*b*lambda + a1*a2".
    std::string to_string() const;

    friend bool operator==(const ParamExpr& a, const ParamExpr& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const ParamExpr& a, const ParamExpr& b) { return !(a == b); }

private:
    void add_term(const Monomial& m, const Rational& c);
    void normalize();

    std::map<Monomial, Rational> terms_;
    std::shared_ptr<const RelationSet> relations_;  // may be null (no rules)
};

/// A set of square rewrites symbol^2 -> replacement used to encode algebraic
/// constraints such as s^2 = 6b.  Replacements must not mention any rule
/// symbol, which makes the rewrite system confluent and terminating.
class RelationSet {
public:
    /// Registers symbol^2 -> replacement.  Throws ContractError if the
    /// replacement mentions a rule symbol or the symbol already has a rule.
    void add_square_rule(const std::string& name, ParamExpr replacement);

    const std::map<std::string, ParamExpr>& square_rules() const { return rules_; }
    bool empty() const { return rules_.empty(); }

    friend bool operator==(const RelationSet& a, const RelationSet& b) {
        return a.rules_ == b.rules_;
    }

private:
    std::map<std::string, ParamExpr> rules_;
};

}  // namespace fracwave

#endif  // FRACWAVE_PARAM_EXPR_HPP
