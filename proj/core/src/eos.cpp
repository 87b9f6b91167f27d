#include "xfermi/eos.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "xfermi/errors.hpp"

namespace xfermi::eos {

namespace {

const double kTwoOverSqrtPi = 2.0 / std::sqrt(std::numbers::pi);

void check_eta(double eta, const char* op) {
    if (!std::isfinite(eta)) throw DomainError(std::string(op) + ": eta must be finite");
}

// (2/√π) ∫₀^∞ x^{power} kernel(x − eta) dx with a breakpoint at the Fermi knee.
template <class Kernel>
double moment(double eta, double power, const Kernel& kernel, const numerics::QuadratureSpec& spec) {
    // In the classical regime the integrand is O(z); rescale so the absolute
    // tolerance stays meaningful for tiny fugacities.
    const double scale = eta < 0.0 ? std::exp(-eta) : 1.0;
    const auto integrand = [&](double x) {
        if (x == 0.0) return 0.0;
        return scale * std::pow(x, power) * kernel(x - eta);
    };
    std::array<double, 1> knee{eta};
    const auto r = numerics::integrate_semi_infinite(
        integrand, spec, eta > 0.0 ? std::span<const double>(knee) : std::span<const double>());
    return kTwoOverSqrtPi * r.value / scale;
}

} // namespace

double density(double eta, const OccupancyModel& model, const numerics::QuadratureSpec& spec) {
    check_eta(eta, "density");
    model.validate();
    return moment(eta, 0.5, [&](double x) { return occupation(x, model); }, spec);
}

double energy_density(double eta, const OccupancyModel& model, const numerics::QuadratureSpec& spec) {
    check_eta(eta, "energy_density");
    model.validate();
    return moment(eta, 1.5, [&](double x) { return occupation(x, model); }, spec);
}

double pressure(double eta, const OccupancyModel& model, const numerics::QuadratureSpec& spec) {
    check_eta(eta, "pressure");
    model.validate();
    return moment(eta, 0.5, [&](double x) { return log_partition_factor(x, model); }, spec);
}

ThermoPoint thermo_point(double eta, const OccupancyModel& model, const numerics::QuadratureSpec& spec) {
    ThermoPoint tp;
    tp.eta = eta;
    tp.z = std::exp(eta);
    tp.n_lambda3 = density(eta, model, spec);
    tp.u = energy_density(eta, model, spec);
    tp.p = pressure(eta, model, spec);
    tp.model = model;
    return tp;
}

double solve_fugacity(double n_lambda3, const OccupancyModel& model, const numerics::QuadratureSpec& spec) {
    model.validate();
    if (!(n_lambda3 > 0.0) || !std::isfinite(n_lambda3))
        throw DomainError("solve_fugacity: n_lambda3 must be positive");
    const double eta0 = std::log(n_lambda3 / model.g);
    const auto residual = [&](double eta) { return density(eta, model, spec) / n_lambda3 - 1.0; };

    double lo = eta0;
    double hi = eta0;
    double step = 1.0;
    double f_lo = residual(lo);
    double f_hi = f_lo;
    for (int i = 0; i < 60 && f_lo > 0.0; ++i, step *= 2.0) {
        lo = eta0 - step;
        f_lo = residual(lo);
    }
    step = 1.0;
    for (int i = 0; i < 60 && f_hi < 0.0; ++i, step *= 2.0) {
        hi = eta0 + step;
        f_hi = residual(hi);
    }
    if (f_lo == 0.0) return lo;
    if (f_hi == 0.0) return hi;
    if (f_lo > 0.0 || f_hi < 0.0) {
        std::ostringstream msg;
        msg << "solve_fugacity: could not bracket n_lambda3 = " << n_lambda3;
        throw BracketError(msg.str(), f_lo, f_hi);
    }
    numerics::BracketedRootSpec root;
    root.lo = lo;
    root.hi = hi;
    root.tolerance = 1e-14 * std::max(1.0, std::max(std::abs(lo), std::abs(hi)));
    return numerics::find_root(residual, root);
}

ThermoPoint thermo_point_at_density(double n_lambda3, const OccupancyModel& model,
                                    const numerics::QuadratureSpec& spec) {
    return thermo_point(solve_fugacity(n_lambda3, model, spec), model, spec);
}

double compressibility(double n_lambda3, const OccupancyModel& model, const numerics::QuadratureSpec& spec) {
    const double eta = solve_fugacity(n_lambda3, model, spec);
    return pressure(eta, model, spec) / density(eta, model, spec);
}

double second_virial_coefficient(const OccupancyModel& model) {
    model.validate();
    return model.a / (model.g * std::pow(2.0, 2.5));
}

VirialEstimate virial_pressure(double n_lambda3, const OccupancyModel& model) {
    if (!(n_lambda3 >= 0.0)) throw DomainError("virial_pressure: n_lambda3 must be >= 0");
    return {1.0 + second_virial_coefficient(model) * n_lambda3, n_lambda3 <= kVirialValidityLimit};
}

VirialEstimate virial_fugacity(double n_lambda3, const OccupancyModel& model) {
    if (!(n_lambda3 >= 0.0)) throw DomainError("virial_fugacity: n_lambda3 must be >= 0");
    model.validate();
    const double x = n_lambda3 / model.g;
    return {x * (1.0 + model.a * x / std::pow(2.0, 1.5)), n_lambda3 <= kVirialValidityLimit};
}

} // namespace xfermi::eos
