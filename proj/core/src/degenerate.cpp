#include "xfermi/degenerate.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "xfermi/eos.hpp"
#include "xfermi/errors.hpp"

namespace xfermi::degenerate {

namespace {

constexpr double kPi = std::numbers::pi;

void require_quantum(const OccupancyModel& model, const char* op) {
    model.validate();
    if (!model.is_quantum())
        throw DomainError(std::string(op) + ": Boltzmann statistics has no Fermi surface");
}

void require_positive(double v, const char* what, const char* op) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw DomainError(std::string(op) + ": " + what + " must be positive");
}

// (g/a)·(4/(3√π))·t^{-3/2}: nλ³ of a T = 0 step expressed at k_BT = t·E_F.
double step_n_lambda3(double t, const OccupancyModel& model) {
    return model.step_height() * 4.0 / (3.0 * std::sqrt(kPi)) * std::pow(t, -1.5);
}

} // namespace

double fermi_energy(double density, const OccupancyModel& model) {
    require_quantum(model, "fermi_energy");
    require_positive(density, "density", "fermi_energy");
    return 0.5 * std::pow(6.0 * kPi * kPi * density / model.step_height(), 2.0 / 3.0);
}

FermiScale fermi_scale(double density, const OccupancyModel& model) {
    const double ef = fermi_energy(density, model);
    return {ef, ef, density, model};
}

double step_density(double ef, const OccupancyModel& model) {
    require_quantum(model, "step_density");
    require_positive(ef, "Fermi energy", "step_density");
    return model.step_height() * (2.0 / 3.0) * dos_coefficient(1.0) * std::pow(ef, 1.5);
}

double ground_state_energy(double particle_number, double ef) {
    require_positive(particle_number, "particle number", "ground_state_energy");
    require_positive(ef, "Fermi energy", "ground_state_energy");
    return 0.6 * particle_number * ef;
}

double degeneracy_pressure(double density, double ef) {
    require_positive(density, "density", "degeneracy_pressure");
    require_positive(ef, "Fermi energy", "degeneracy_pressure");
    return 0.4 * density * ef;
}

double sommerfeld_closed_form(int order, double a) {
    require_positive(a, "blocking parameter", "sommerfeld_closed_form");
    const double la = std::log(a);
    switch (order) {
    case 1: return la / a;
    case 2: return (la * la + kPi * kPi / 3.0) / a;
    default: throw DomainError("sommerfeld_closed_form: order must be 1 or 2");
    }
}

SommerfeldConstant sommerfeld_constant(int order, double a, const numerics::QuadratureSpec& spec) {
    if (order != 1 && order != 2) throw DomainError("sommerfeld_constant: order must be 1 or 2");
    require_positive(a, "blocking parameter", "sommerfeld_constant");
    const auto kernel = [a, order](double x) {
        const double xk = order == 1 ? x : x * x;
        if (x > 0.0) {
            const double e = std::exp(-x);
            const double d = 1.0 + a * e;
            return xk * e / (d * d);
        }
        const double e = std::exp(x);
        const double d = e + a;
        return xk * e / (d * d);
    };
    // The kernel peaks at x = ln a.
    const std::array<double, 1> peak{std::log(a)};
    const auto r = numerics::integrate_whole_line(kernel, spec, peak);
    return {order, a, r.value, sommerfeld_closed_form(order, a)};
}

SommerfeldConstants sommerfeld_constants(double a, const numerics::QuadratureSpec& spec) {
    return {sommerfeld_constant(1, a, spec), sommerfeld_constant(2, a, spec)};
}

double sommerfeld_number_factor(double t, const OccupancyModel& model) {
    require_quantum(model, "sommerfeld_number_factor");
    const double a = model.a;
    return 1.0 + 1.5 * a * sommerfeld_closed_form(1, a) * t +
           0.375 * a * sommerfeld_closed_form(2, a) * t * t;
}

double sommerfeld_energy_factor(double t, const OccupancyModel& model) {
    require_quantum(model, "sommerfeld_energy_factor");
    const double a = model.a;
    return 1.0 + 2.5 * a * sommerfeld_closed_form(1, a) * t +
           1.875 * a * sommerfeld_closed_form(2, a) * t * t;
}

double sommerfeld_number(double mu_red, double t, const OccupancyModel& model) {
    require_positive(mu_red, "mu/E_F", "sommerfeld_number");
    return std::pow(mu_red, 1.5) * sommerfeld_number_factor(t, model);
}

double sommerfeld_energy(double mu_red, double t, const OccupancyModel& model) {
    require_positive(mu_red, "mu/E_F", "sommerfeld_energy");
    return std::pow(mu_red, 2.5) * sommerfeld_energy_factor(t, model);
}

double exact_number_ratio(double t, const OccupancyModel& model, const numerics::QuadratureSpec& spec) {
    require_quantum(model, "exact_number_ratio");
    require_positive(t, "k_BT/mu", "exact_number_ratio");
    return eos::density(1.0 / t, model, spec) / step_n_lambda3(t, model);
}

double eta_at_fixed_density(double t, const OccupancyModel& model, const numerics::QuadratureSpec& spec) {
    require_quantum(model, "eta_at_fixed_density");
    require_positive(t, "k_BT/E_F", "eta_at_fixed_density");
    return eos::solve_fugacity(step_n_lambda3(t, model), model, spec);
}

double mu_series_first_order(const OccupancyModel& model) {
    require_quantum(model, "mu_series_first_order");
    return -model.a * sommerfeld_closed_form(1, model.a);
}

double mu_series_second_order(const OccupancyModel& model) {
    require_quantum(model, "mu_series_second_order");
    const double a = model.a;
    const double a1 = sommerfeld_closed_form(1, a);
    return 0.25 * a * a * a1 * a1 - 0.25 * a * sommerfeld_closed_form(2, a);
}

double mu_series_second_order_quoted() {
    const double a1 = sommerfeld_closed_form(1, 2.0);
    const double a2 = sommerfeld_closed_form(2, 2.0);
    return -(0.5 * a2 - 9.0 * a1 * a1);
}

ChemicalPotential chemical_potential_vs_T(double t, const OccupancyModel& model,
                                          const numerics::QuadratureSpec& spec) {
    require_positive(t, "k_BT/E_F", "chemical_potential_vs_T");
    ChemicalPotential out;
    out.t = t;
    out.exact = eta_at_fixed_density(t, model, spec) * t;
    out.series = 1.0 + mu_series_first_order(model) * t + mu_series_second_order(model) * t * t;
    if (model == OccupancyModel::exclusive())
        out.series_quoted = 1.0 + mu_series_first_order(model) * t + mu_series_second_order_quoted() * t * t;
    return out;
}

double energy_per_particle(double t, const OccupancyModel& model, const numerics::QuadratureSpec& spec) {
    const double eta = eta_at_fixed_density(t, model, spec);
    return t * eos::energy_density(eta, model, spec) / eos::density(eta, model, spec);
}

double specific_heat_series_coefficient(const OccupancyModel& model) {
    require_quantum(model, "specific_heat_series_coefficient");
    const double a = model.a;
    const double a1 = sommerfeld_closed_form(1, a);
    return 1.5 * (a * sommerfeld_closed_form(2, a) - a * a * a1 * a1);
}

double specific_heat_quoted_formula_coefficient() {
    const double a1 = sommerfeld_closed_form(1, 2.0);
    return 3.0 * sommerfeld_closed_form(2, 2.0) - 1.2 * a1 * a1;
}

SpecificHeat specific_heat(double t, const OccupancyModel& model, const numerics::QuadratureSpec& spec,
                           double relative_step) {
    require_quantum(model, "specific_heat");
    require_positive(t, "k_BT/E_F", "specific_heat");
    if (!(relative_step >= 1e-6) || !(relative_step <= 0.1)) {
        std::ostringstream msg;
        msg << "specific_heat: relative step " << relative_step
            << " outside [1e-6, 0.1]; smaller steps drown in solver noise";
        throw DomainError(msg.str());
    }
    const auto central = [&](double h) {
        return (energy_per_particle(t + h, model, spec) - energy_per_particle(t - h, model, spec)) / (2.0 * h);
    };
    const double h = relative_step * t;
    const double d1 = central(h);
    const double d2 = central(0.5 * h);

    SpecificHeat out;
    out.t = t;
    out.exact = (4.0 * d2 - d1) / 3.0;
    out.exact_coefficient = out.exact / t;
    out.series_coefficient = specific_heat_series_coefficient(model);
    if (model == OccupancyModel::exclusive())
        out.quoted_formula_coefficient = specific_heat_quoted_formula_coefficient();
    return out;
}

} // namespace xfermi::degenerate
