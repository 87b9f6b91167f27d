#include "xfermi/astro.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "xfermi/errors.hpp"

namespace xfermi::astro {

namespace {

constexpr double kPi = std::numbers::pi;

// α = [K(n+1)/(4πG)]^{1/2} ρ_c^{(1−n)/(2n)}, the Lane-Emden length scale.
double length_scale(const PolytropeEOS& eos, double rho_c, double G) {
    if (!(eos.K > 0.0)) throw DomainError("polytrope: K must be positive");
    if (!(rho_c > 0.0)) throw DomainError("polytrope: central density must be positive");
    if (!(G > 0.0)) throw DomainError("polytrope: G must be positive");
    const double n = eos.polytropic_index();
    return std::sqrt(eos.K * (n + 1.0) / (4.0 * kPi * G)) * std::pow(rho_c, (1.0 - n) / (2.0 * n));
}

} // namespace

double PolytropeEOS::pressure(double density) const {
    if (!(density >= 0.0)) throw DomainError("PolytropeEOS::pressure: density must be >= 0");
    return K * std::pow(density, gamma);
}

PolytropeEOS eos_coefficient(const OccupancyModel& model, Regime regime) {
    model.validate();
    if (!model.is_quantum()) throw DomainError("eos_coefficient: Boltzmann gas has no degeneracy pressure");
    const double orbital = 6.0 * kPi * kPi / model.step_height();
    PolytropeEOS eos;
    eos.model = model;
    eos.regime = regime;
    if (regime == Regime::NonRelativistic) {
        eos.gamma = 5.0 / 3.0;
        eos.K = 0.2 * std::pow(orbital, 2.0 / 3.0);
    } else {
        eos.gamma = 4.0 / 3.0;
        eos.K = 0.25 * std::cbrt(orbital);
    }
    return eos;
}

LaneEmdenSolution lane_emden(double index, double step, double tolerance) {
    if (!(index >= 0.0) || !(index <= 4.9)) throw DomainError("lane_emden: index must lie in [0, 4.9]");
    if (!(step > 0.0) || !(tolerance > 0.0)) throw DomainError("lane_emden: step and tolerance must be positive");
    const double n = index;

    // θ ≈ 1 − ξ²/6 + nξ⁴/120 − n(8n−5)ξ⁶/15120 near the centre.
    const double xi0 = std::min(1e-2, step);
    const double x2 = xi0 * xi0;
    const double c6 = n * (8.0 * n - 5.0) / 15120.0;
    const std::array<double, 2> y0 = {1.0 - x2 / 6.0 + n * x2 * x2 / 120.0 - c6 * x2 * x2 * x2,
                                      -xi0 / 3.0 + n * xi0 * x2 / 30.0 - 6.0 * c6 * xi0 * x2 * x2};

    const auto rhs = [n](double xi, const std::array<double, 2>& y) {
        const double theta = y[0];
        const double power = n == 0.0 ? 1.0 : std::pow(std::max(theta, 0.0), n);
        return std::array<double, 2>{y[1], -power - 2.0 * y[1] / xi};
    };
    const auto surface = [](double, const std::array<double, 2>& y) { return y[0]; };

    numerics::StepControl control;
    control.initial_step = step;
    control.tolerance = tolerance;
    control.horizon = 1e3;
    const auto end = numerics::integrate_ode<2>(rhs, xi0, y0, surface, control);
    return {index, end.t, -end.t * end.t * end.state[1]};
}

double white_dwarf_mass(const PolytropeEOS& eos, double rho_c, double G) {
    const double alpha = length_scale(eos, rho_c, G);
    const auto le = lane_emden(eos.polytropic_index());
    return 4.0 * kPi * alpha * alpha * alpha * rho_c * le.mass_integral;
}

double white_dwarf_radius(const PolytropeEOS& eos, double rho_c, double G) {
    return length_scale(eos, rho_c, G) * lane_emden(eos.polytropic_index()).xi1;
}

ChandrasekharComparison chandrasekhar_comparison(const OccupancyModel& num, const OccupancyModel& den) {
    const auto nr_num = eos_coefficient(num, Regime::NonRelativistic);
    const auto nr_den = eos_coefficient(den, Regime::NonRelativistic);
    const auto ur_num = eos_coefficient(num, Regime::UltraRelativistic);
    const auto ur_den = eos_coefficient(den, Regime::UltraRelativistic);

    ChandrasekharComparison c;
    c.k_nr_ratio = nr_num.K / nr_den.K;
    c.k_ur_ratio = ur_num.K / ur_den.K;
    c.mass_ratio = white_dwarf_mass(ur_num, 1.0) / white_dwarf_mass(ur_den, 1.0);
    c.mass_ratio_closed_form = std::pow(c.k_ur_ratio, 1.5);
    c.nr_mass_ratio_fixed_density = white_dwarf_mass(nr_num, 1.0) / white_dwarf_mass(nr_den, 1.0);
    // For n = 3/2, R ∝ K M^{-1/3}.
    c.nr_radius_ratio_fixed_mass = c.k_nr_ratio;
    return c;
}

double chandrasekhar_ratio(const OccupancyModel& num, const OccupancyModel& den) {
    return chandrasekhar_comparison(num, den).mass_ratio;
}

} // namespace xfermi::astro
