#ifndef FRACWAVE_ERRORS_HPP
#define FRACWAVE_ERRORS_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace fracwave {

/// Root of all runtime evaluation failures raised by this library.
/// Subclasses distinguish failure modes so callers (and the CLI) can map
/// them to recovery strategies and exit codes.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

/// Input outside the mathematical domain of an operation
/// (e.g. alpha outside (0,1], quadrature point x <= 0, gamma <= -1).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what_arg) : Error(what_arg) {}
};

/// A denominator came too close to zero: generalized tan/cot/sec/csc/ratio
/// evaluations near a zero of the underlying cosh/sinh/cos/sin combination.
class PoleError : public Error {
public:
    explicit PoleError(const std::string& what_arg) : Error(what_arg) {}
};

/// A series or iteration failed to meet its tolerance within the configured
/// budget.  Carries the last partial sum and term magnitude as diagnostics.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what_arg,
                     std::complex<double> partial_sum,
                     double last_term_magnitude,
                     int terms_used)
        : Error(what_arg),
          partial_sum(partial_sum),
          last_term_magnitude(last_term_magnitude),
          terms_used(terms_used) {}

    std::complex<double> partial_sum;
    double last_term_magnitude;
    int terms_used;
};

/// A real-valued result would require the square root of a negative quantity
/// (e.g. the modified-equation coefficient sqrt(6 b) with b < 0).
class RealityError : public Error {
public:
    explicit RealityError(const std::string& what_arg) : Error(what_arg) {}
};

/// An operation was asked for something deliberately out of scope
/// (e.g. the numeric auxiliary-equation check with lambda != 0, which would
/// require the formal product rule that does not hold pointwise numerically).
class UnsupportedError : public Error {
public:
    explicit UnsupportedError(const std::string& what_arg) : Error(what_arg) {}
};

/// Caller broke a documented precondition (wrong ansatz degree, unbound
/// symbol in a substitution, incompatible family/case pairing, ...).
/// Derived from logic_error: these indicate misuse, not data-dependent failure.
class ContractError : public std::logic_error {
public:
    explicit ContractError(const std::string& what_arg) : std::logic_error(what_arg) {}
};

/// Exact integer/rational arithmetic exceeded the 64-bit representation.
class OverflowError : public Error {
public:
    explicit OverflowError(const std::string& what_arg) : Error(what_arg) {}
};

}  // namespace fracwave

#endif  // FRACWAVE_ERRORS_HPP
