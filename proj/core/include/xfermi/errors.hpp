#pragma once

#include <stdexcept>
#include <string>

namespace xfermi {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation (non-positive mass,
/// NaN integrand value, unsupported model, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Base for failures of an iterative numerical method on valid input.
class NumericalError : public Error {
public:
    using Error::Error;
};

/// Adaptive quadrature exhausted its subdivision budget.
class QuadratureError : public NumericalError {
public:
    QuadratureError(const std::string& what, double estimate, double error_bound)
        : NumericalError(what), estimate_(estimate), error_bound_(error_bound) {}

    double estimate() const noexcept { return estimate_; }
    double error_bound() const noexcept { return error_bound_; }

private:
    double estimate_;
    double error_bound_;
};

/// The supplied root bracket does not straddle a sign change.
class BracketError : public NumericalError {
public:
    BracketError(const std::string& what, double f_lo, double f_hi)
        : NumericalError(what), f_lo_(f_lo), f_hi_(f_hi) {}

    double f_lo() const noexcept { return f_lo_; }
    double f_hi() const noexcept { return f_hi_; }

private:
    double f_lo_;
    double f_hi_;
};

/// An iteration limit was reached. Carries the last bracket, when the method
/// has one (lo == hi otherwise).
class ConvergenceError : public NumericalError {
public:
    ConvergenceError(const std::string& what, double lo, double hi)
        : NumericalError(what), lo_(lo), hi_(hi) {}

    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }

private:
    double lo_;
    double hi_;
};

/// ODE stop event never fired before the integration horizon.
class HorizonError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

/// A problem is too large for an exact method (e.g. enumeration over > 20 levels).
class CapacityError : public Error {
public:
    using Error::Error;
};

} // namespace xfermi
