#include "fracwave/param_expr.hpp"

#include <cmath>
#include <cstdlib>

#include "fracwave/errors.hpp"

namespace fracwave {

namespace symbols {
std::string a(int k) {
    if (k < 0) throw ContractError("symbols::a: negative index");
    return "a" + std::to_string(k);
}
}  // namespace symbols

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw DomainError("Rational::parse: empty string");
    const auto slash = text.find('/');
    try {
        if (slash != std::string::npos) {
            const std::int64_t n = std::stoll(text.substr(0, slash));
            const std::int64_t d = std::stoll(text.substr(slash + 1));
            return Rational(n, d);
        }
        const auto dot = text.find('.');
        if (dot == std::string::npos) return Rational(std::stoll(text));
        // Decimal literal: shift the point away with a power-of-ten denominator.
        std::string digits = text.substr(0, dot) + text.substr(dot + 1);
        const std::size_t frac_digits = text.size() - dot - 1;
        if (frac_digits > 18) throw DomainError("Rational::parse: too many decimals");
        std::int64_t den = 1;
        for (std::size_t i = 0; i < frac_digits; ++i) den *= 10;
        return Rational(std::stoll(digits), den);
    } catch (const std::invalid_argument&) {
        throw DomainError("Rational::parse: malformed number '" + text + "'");
    } catch (const std::out_of_range&) {
        throw DomainError("Rational::parse: out of 64-bit range '" + text + "'");
    }
}

ParamExpr::ParamExpr(Rational c) {
    if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

ParamExpr ParamExpr::symbol(const std::string& name) {
    if (name.empty()) throw ContractError("ParamExpr::symbol: empty name");
    ParamExpr e;
    e.terms_.emplace(Monomial{{name, 1}}, Rational(1));
    return e;
}

bool ParamExpr::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational ParamExpr::constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_constant())
        throw ContractError("ParamExpr::constant_value: expression is not constant: " +
                            to_string());
    return terms_.begin()->second;
}

namespace {

std::shared_ptr<const RelationSet> merge_relations(
    const std::shared_ptr<const RelationSet>& a,
    const std::shared_ptr<const RelationSet>& b) {
    if (!a || a->empty()) return b;
    if (!b || b->empty()) return a;
    if (a == b || *a == *b) return a;
    throw ContractError(
        "ParamExpr: cannot combine expressions carrying different relation sets");
}

}  // namespace

ParamExpr ParamExpr::with_relations(std::shared_ptr<const RelationSet> relations) const {
    ParamExpr e = *this;
    e.relations_ = merge_relations(relations_, std::move(relations));
    e.normalize();
    return e;
}

void ParamExpr::add_term(const Monomial& m, const Rational& c) {
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void ParamExpr::normalize() {
    // Like-term combination and zero pruning are maintained by add_term;
    // what remains is rewriting squares of relation symbols to fixpoint.
    if (!relations_ || relations_->empty()) return;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& [name, replacement] : relations_->square_rules()) {
            // Collect terms containing name^e with e >= 2 and rebuild them.
            std::map<Monomial, Rational> pending;
            for (auto it = terms_.begin(); it != terms_.end();) {
                const auto exp_it = it->first.find(name);
                if (exp_it != it->first.end() && exp_it->second >= 2) {
                    pending.emplace(it->first, it->second);
                    it = terms_.erase(it);
                } else {
                    ++it;
                }
            }
            if (pending.empty()) continue;
            changed = true;
            for (const auto& [mono, coeff] : pending) {
                const int e = mono.at(name);
                Monomial rest = mono;
                if (e % 2 == 0) rest.erase(name); else rest[name] = 1;
                // coeff * rest * replacement^(e/2)
                ParamExpr contribution = replacement.pow(e / 2);
                for (const auto& [rm, rc] : contribution.terms_) {
                    Monomial combined = rest;
                    for (const auto& [sym, sexp] : rm) combined[sym] += sexp;
                    add_term(combined, coeff * rc);
                }
            }
        }
    }
}

ParamExpr ParamExpr::operator-() const {
    ParamExpr r;
    r.relations_ = relations_;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

ParamExpr operator+(const ParamExpr& a, const ParamExpr& b) {
    ParamExpr r = a;
    r.relations_ = merge_relations(a.relations_, b.relations_);
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    r.normalize();
    return r;
}

ParamExpr operator-(const ParamExpr& a, const ParamExpr& b) {
    ParamExpr r = a;
    r.relations_ = merge_relations(a.relations_, b.relations_);
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    r.normalize();
    return r;
}

ParamExpr operator*(const ParamExpr& a, const ParamExpr& b) {
    ParamExpr r;
    r.relations_ = merge_relations(a.relations_, b.relations_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m = ma;
            for (const auto& [sym, e] : mb) m[sym] += e;
            r.add_term(m, ca * cb);
        }
    }
    r.normalize();
    return r;
}

ParamExpr ParamExpr::pow(int e) const {
    if (e < 0) throw ContractError("ParamExpr::pow: negative exponent");
    ParamExpr acc(Rational(1));
    acc.relations_ = relations_;
    ParamExpr base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return acc;
}

ParamExpr ParamExpr::substitute(const std::map<std::string, ParamExpr>& binding) const {
    ParamExpr result;
    result.relations_ = relations_;
    for (const auto& [mono, coeff] : terms_) {
        ParamExpr term(coeff);
        term.relations_ = relations_;
        for (const auto& [sym, e] : mono) {
            const auto it = binding.find(sym);
            if (it == binding.end()) {
                term *= ParamExpr::symbol(sym).pow(e);
            } else {
                term *= it->second.pow(e);
            }
        }
        result += term;
    }
    return result;
}

double ParamExpr::eval(const std::map<std::string, double>& binding) const {
    double acc = 0.0;
    for (const auto& [mono, coeff] : terms_) {
        double term = coeff.to_double();
        for (const auto& [sym, e] : mono) {
            const auto it = binding.find(sym);
            if (it == binding.end())
                throw ContractError("ParamExpr::eval: unbound symbol '" + sym + "'");
            term *= std::pow(it->second, e);
        }
        acc += term;
    }
    return acc;
}

ParamExpr ParamExpr::derivative(const std::string& name) const {
    ParamExpr r;
    r.relations_ = relations_;
    for (const auto& [mono, coeff] : terms_) {
        const auto it = mono.find(name);
        if (it == mono.end()) continue;
        Monomial m = mono;
        if (it->second == 1) m.erase(name); else --m[name];
        r.add_term(m, coeff * Rational(it->second));
    }
    r.normalize();
    return r;
}

std::set<std::string> ParamExpr::symbols() const {
    std::set<std::string> out;
    for (const auto& [mono, coeff] : terms_)
        for (const auto& [sym, e] : mono) out.insert(sym);
    return out;
}

std::string ParamExpr::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [mono, coeff] : terms_) {
        const bool negative = coeff.sign() < 0;
        const Rational mag = negative ? -coeff : coeff;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string body;
        for (const auto& [sym, e] : mono) {
            if (!body.empty()) body += "*";
            body += sym;
            if (e != 1) body += "^" + std::to_string(e);
        }
        if (body.empty()) {
            out += mag.to_string();
        } else if (mag.is_one()) {
            out += body;
        } else {
            out += mag.to_string() + "*" + body;
        }
    }
    return out;
}

void RelationSet::add_square_rule(const std::string& name, ParamExpr replacement) {
    if (rules_.count(name))
        throw ContractError("RelationSet: duplicate rule for '" + name + "'");
    for (const auto& [mono, coeff] : replacement.terms()) {
        for (const auto& [sym, e] : mono) {
            if (sym == name || rules_.count(sym))
                throw ContractError(
                    "RelationSet: replacement for '" + name +
                    "' may not mention rule symbols (found '" + sym + "')");
        }
    }
    for (const auto& [existing, repl] : rules_) {
        if (repl.symbols().count(name))
            throw ContractError("RelationSet: existing rule for '" + existing +
                                "' mentions new rule symbol '" + name + "'");
    }
    rules_.emplace(name, std::move(replacement));
}

}  // namespace fracwave
