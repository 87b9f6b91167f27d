#pragma once

// Numerical kernels shared by the physics modules: adaptive Gauss-Kronrod
// quadrature on finite and infinite ranges, Brent root finding, and a
// fixed-step RK4 integrator with event location.

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <sstream>
#include <vector>

#include "xfermi/errors.hpp"

namespace xfermi::numerics {

using ScalarFunction = std::function<double(double)>;

struct QuadratureSpec {
    double relative_tolerance = 1e-10;
    double absolute_tolerance = 1e-14;
    int max_subdivisions = 4000;

    void validate() const;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int subdivisions = 0;
    int evaluations = 0;
};

/// Integrates f over [lo, hi]. Either end may be infinite; infinite ends are
/// mapped onto a finite parameter range by x = c ± t/(1-t). Breakpoints that
/// fall strictly inside the range split it into independently refined pieces.
///
/// Throws QuadratureError (carrying the best estimate) when the subdivision
/// budget runs out, DomainError when f returns NaN or ±inf.
QuadratureResult integrate(const ScalarFunction& f, double lo, double hi,
                           const QuadratureSpec& spec = {},
                           std::span<const double> breakpoints = {});

/// ∫₀^∞ f(x) dx. Put a breakpoint wherever the integrand has a knee,
/// e.g. at x = βμ for Fermi-type integrands.
QuadratureResult integrate_semi_infinite(const ScalarFunction& f,
                                         const QuadratureSpec& spec = {},
                                         std::span<const double> breakpoints = {});

/// ∫_{-∞}^{∞} f(x) dx, split at zero and at any breakpoints.
QuadratureResult integrate_whole_line(const ScalarFunction& f,
                                      const QuadratureSpec& spec = {},
                                      std::span<const double> breakpoints = {});

struct BracketedRootSpec {
    double lo = 0.0;
    double hi = 1.0;
    double tolerance = 1e-13;
    int max_iterations = 200;

    void validate() const;
};

/// Brent's method: inverse quadratic / secant steps guarded by bisection.
/// Returns a point within `tolerance` of a sign change of f.
double find_root(const ScalarFunction& f, const BracketedRootSpec& spec);

struct StepControl {
    double initial_step = 1e-3;
    /// The event is located once the trial step has been halved below this.
    double tolerance = 1e-10;
    /// Largest independent-variable value to integrate to.
    double horizon = 1e3;
};

template <std::size_t N>
struct OdeTerminus {
    double t = 0.0;
    std::array<double, N> state{};
    long steps = 0;
};

namespace detail {

template <std::size_t N>
std::array<double, N> axpy(const std::array<double, N>& y, double h,
                           const std::array<double, N>& k) {
    std::array<double, N> out;
    for (std::size_t i = 0; i < N; ++i) out[i] = y[i] + h * k[i];
    return out;
}

template <std::size_t N, class Rhs>
std::array<double, N> rk4_step(const Rhs& rhs, double t, const std::array<double, N>& y,
                               double h) {
    const auto k1 = rhs(t, y);
    const auto k2 = rhs(t + 0.5 * h, axpy(y, 0.5 * h, k1));
    const auto k3 = rhs(t + 0.5 * h, axpy(y, 0.5 * h, k2));
    const auto k4 = rhs(t + h, axpy(y, h, k3));
    std::array<double, N> out;
    for (std::size_t i = 0; i < N; ++i)
        out[i] = y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    return out;
}

} // namespace detail

/// Integrates dy/dt = rhs(t, y) from (t0, y0) with classical RK4 at a fixed
/// step until event(t, y) first becomes ≤ 0. A step that would cross the event
/// is retried at half size until the step is below control.tolerance; the
/// terminus is then placed by linear interpolation of the event function
/// across that last sub-tolerance step.
///
/// event(t0, y0) must be positive. Throws HorizonError if t passes
/// control.horizon first, DomainError if the state becomes non-finite.
template <std::size_t N, class Rhs, class Event>
OdeTerminus<N> integrate_ode(const Rhs& rhs, double t0, std::array<double, N> y0,
                             const Event& event, const StepControl& control) {
    if (!(control.initial_step > 0.0) || !(control.tolerance > 0.0))
        throw DomainError("integrate_ode: step sizes must be positive");
    double g0 = event(t0, y0);
    if (!(g0 > 0.0)) throw DomainError("integrate_ode: stop event already fired at t0");

    double t = t0;
    auto y = y0;
    double h = control.initial_step;
    long steps = 0;
    while (true) {
        if (t > control.horizon) {
            std::ostringstream msg;
            msg << "integrate_ode: stop event did not fire before horizon t = "
                << control.horizon;
            throw HorizonError(msg.str());
        }
        const auto trial = detail::rk4_step<N>(rhs, t, y, h);
        for (double v : trial)
            if (!std::isfinite(v))
                throw DomainError("integrate_ode: state became non-finite");
        const double g1 = event(t + h, trial);
        if (g1 > 0.0) {
            t += h;
            y = trial;
            g0 = g1;
            ++steps;
            continue;
        }
        if (h <= control.tolerance) {
            const double frac = g0 / (g0 - g1);
            OdeTerminus<N> out;
            out.t = t + frac * h;
            for (std::size_t i = 0; i < N; ++i) out.state[i] = y[i] + frac * (trial[i] - y[i]);
            out.steps = steps;
            return out;
        }
        h *= 0.5;
    }
}

/// Pairwise (cascade) summation; the reduction order depends only on the
/// length of the input, so results are bit-stable.
double pairwise_sum(std::span<const double> values);

/// Least-squares polynomial fit y ≈ Σ c_k x^k, k = 0..degree.
/// Solves the normal equations on centred/scaled abscissae.
std::vector<double> polyfit(std::span<const double> x, std::span<const double> y, int degree);

/// Coefficient of determination of a polynomial fit.
double r_squared(std::span<const double> x, std::span<const double> y,
                 std::span<const double> coefficients);

/// Neville extrapolation of the interpolating polynomial through (x_i, y_i)
/// to x = target.
double neville(std::span<const double> x, std::span<const double> y, double target);

} // namespace xfermi::numerics
