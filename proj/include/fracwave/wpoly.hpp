#ifndef FRACWAVE_WPOLY_HPP
#define FRACWAVE_WPOLY_HPP

#include <string>
#include <vector>

#include "fracwave/param_expr.hpp"

namespace fracwave {

/// Polynomial in the expansion variable w with ParamExpr coefficients.
/// Normal form trims trailing zero coefficients, so degree() is exact;
/// the zero polynomial has degree -1.
class WPolynomial {
public:
    WPolynomial() = default;  // zero polynomial
    explicit WPolynomial(std::vector<ParamExpr> coefficients)
        : coeffs_(std::move(coefficients)) {
        trim();
    }

    static WPolynomial constant(ParamExpr c) {
        return WPolynomial(std::vector<ParamExpr>{std::move(c)});
    }
    static WPolynomial monomial(ParamExpr c, int power);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of w^m; zero expression beyond the degree.
    const ParamExpr& coefficient(int m) const;

    friend WPolynomial operator+(const WPolynomial& a, const WPolynomial& b);
    friend WPolynomial operator-(const WPolynomial& a, const WPolynomial& b);
    friend WPolynomial operator*(const WPolynomial& a, const WPolynomial& b);
    WPolynomial& operator+=(const WPolynomial& o) { return *this = *this + o; }
    WPolynomial& operator-=(const WPolynomial& o) { return *this = *this - o; }
    WPolynomial& operator*=(const WPolynomial& o) { return *this = *this * o; }

    /// Multiplication by a coefficient expression.
    friend WPolynomial operator*(const ParamExpr& c, const WPolynomial& p);

    /// Non-negative integer power.
    WPolynomial pow(int e) const;

    friend bool operator==(const WPolynomial& a, const WPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const WPolynomial& a, const WPolynomial& b) {
        return !(a == b);
    }

    /// e.g. "(a1*a2 + 2*b)*w^3 + (6*b)*w"; "0" for the zero polynomial.
    std::string to_string() const;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<ParamExpr> coeffs_;  // coeffs_[m] multiplies w^m
};

}  // namespace fracwave

#endif  // FRACWAVE_WPOLY_HPP
