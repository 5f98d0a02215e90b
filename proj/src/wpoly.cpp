#include "fracwave/wpoly.hpp"

#include "fracwave/errors.hpp"

namespace fracwave {

WPolynomial WPolynomial::monomial(ParamExpr c, int power) {
    if (power < 0) throw ContractError("WPolynomial::monomial: negative power");
    std::vector<ParamExpr> coeffs(power + 1);
    coeffs[power] = std::move(c);
    return WPolynomial(std::move(coeffs));
}

const ParamExpr& WPolynomial::coefficient(int m) const {
    static const ParamExpr zero;
    if (m < 0) throw ContractError("WPolynomial::coefficient: negative power");
    if (m >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[m];
}

WPolynomial operator+(const WPolynomial& a, const WPolynomial& b) {
    std::vector<ParamExpr> coeffs(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t m = 0; m < coeffs.size(); ++m) {
        if (m < a.coeffs_.size()) coeffs[m] += a.coeffs_[m];
        if (m < b.coeffs_.size()) coeffs[m] += b.coeffs_[m];
    }
    return WPolynomial(std::move(coeffs));
}

WPolynomial operator-(const WPolynomial& a, const WPolynomial& b) {
    std::vector<ParamExpr> coeffs(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t m = 0; m < coeffs.size(); ++m) {
        if (m < a.coeffs_.size()) coeffs[m] += a.coeffs_[m];
        if (m < b.coeffs_.size()) coeffs[m] -= b.coeffs_[m];
    }
    return WPolynomial(std::move(coeffs));
}

WPolynomial operator*(const WPolynomial& a, const WPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<ParamExpr> coeffs(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            coeffs[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return WPolynomial(std::move(coeffs));
}

WPolynomial operator*(const ParamExpr& c, const WPolynomial& p) {
    std::vector<ParamExpr> coeffs(p.coeffs_.size());
    for (std::size_t m = 0; m < coeffs.size(); ++m) coeffs[m] = c * p.coeffs_[m];
    return WPolynomial(std::move(coeffs));
}

WPolynomial WPolynomial::pow(int e) const {
    if (e < 0) throw ContractError("WPolynomial::pow: negative exponent");
    WPolynomial acc = WPolynomial::constant(ParamExpr(Rational(1)));
    WPolynomial base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return acc;
}

std::string WPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int m = degree(); m >= 0; --m) {
        if (coeffs_[m].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + coeffs_[m].to_string() + ")";
        if (m == 1) out += "*w";
        else if (m > 1) out += "*w^" + std::to_string(m);
    }
    return out;
}

}  // namespace fracwave
