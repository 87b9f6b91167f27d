#include "xfermi/magnetism.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "xfermi/eos.hpp"
#include "xfermi/errors.hpp"

namespace xfermi::magnetism {

namespace {

constexpr double kPi = std::numbers::pi;

// 2∫₀^∞ φ(u² + c) du = ∫₀^∞ x^{-1/2} φ(x + c) dx, with φ evaluated relative
// to its size at u = 0 so that the absolute tolerance never dominates.
double level_integral(double c, double eta, const OccupancyModel& model,
                      const numerics::QuadratureSpec& spec) {
    const double shift = c > eta ? std::min(c - eta, 700.0) : 0.0;
    const double scale = std::exp(shift);
    const auto integrand = [&](double u) { return scale * log_partition_factor(u * u + c - eta, model); };
    const auto r = numerics::integrate_semi_infinite(integrand, spec);
    return 2.0 * r.value / scale;
}

[[noreturn]] void throw_truncation(double s, double running) {
    std::ostringstream msg;
    msg << "Landau level sum at s = " << s << " did not reach relative truncation " << kLandauTruncation
        << " within " << kMaxLandauLevels << " levels; use the small-s asymptotic form";
    throw ConvergenceError(msg.str(), running, running);
}

template <class Level>
LandauSum sum_levels(double s, Level&& level) {
    // Terms fall off like e^{-2ns}; relative size 2s·e^{-2ns} against the total.
    const double needed = std::log(2.0 * s / kLandauTruncation) / (2.0 * s);
    if (needed > static_cast<double>(kMaxLandauLevels)) throw_truncation(s, 0.0);
    std::vector<double> terms;
    double running = 0.0;
    for (std::size_t n = 0; n < kMaxLandauLevels; ++n) {
        const double term = level(n);
        terms.push_back(term);
        running += term;
        if (term <= kLandauTruncation * running)
            return {numerics::pairwise_sum(terms), terms.size()};
    }
    throw_truncation(s, running);
}

void check_s(double s, const char* op) {
    if (!(s > 0.0) || !std::isfinite(s)) throw DomainError(std::string(op) + ": s must be positive");
}

} // namespace

MagneticEnvironment MagneticEnvironment::make(double field, double temperature, double box_length,
                                              const PhysicalConstants& u, double mass) {
    if (!(field >= 0.0)) throw DomainError("MagneticEnvironment: field must be >= 0");
    if (!(temperature > 0.0) || !(box_length > 0.0) || !(mass > 0.0))
        throw DomainError("MagneticEnvironment: temperature, box length and mass must be positive");
    MagneticEnvironment env;
    env.field = field;
    env.bohr_magneton = u.elementary_charge * u.hbar / (2.0 * mass);
    env.cyclotron_frequency = u.elementary_charge * field / mass;
    env.s = u.hbar * env.cyclotron_frequency / (2.0 * u.boltzmann * temperature);
    env.landau_degeneracy = u.elementary_charge * field * box_length * box_length / (2.0 * kPi * u.hbar);
    return env;
}

double MagneticEnvironment::zeeman_ratio(double temperature, const PhysicalConstants& u) const {
    return bohr_magneton * field / (u.boltzmann * temperature);
}

SpinPopulations pauli_populations(double eta, double b_red, const OccupancyModel& model,
                                  const numerics::QuadratureSpec& spec) {
    if (!std::isfinite(b_red)) throw DomainError("pauli_populations: field must be finite");
    return {0.5 * eos::density(eta - b_red, model, spec), 0.5 * eos::density(eta + b_red, model, spec)};
}

MagnetizationResult pauli_magnetization(double eta, double b_red, const OccupancyModel& model,
                                        const numerics::QuadratureSpec& spec) {
    const auto pop = pauli_populations(eta, b_red, model, spec);
    MagnetizationResult r;
    r.n_up = pop.up;
    r.n_down = pop.down;
    r.magnetization = pop.down - pop.up;
    r.reduced_magnetization = r.magnetization / (pop.down + pop.up);
    return r;
}

LandauSum landau_log_partition_density(double z, double s, const OccupancyModel& model,
                                       const numerics::QuadratureSpec& spec) {
    if (!(z > 0.0) || !std::isfinite(z)) throw DomainError("landau_log_partition: z must be positive");
    check_s(s, "landau_log_partition");
    model.validate();
    const double eta = std::log(z);
    auto sum = sum_levels(s, [&](std::size_t n) {
        return level_integral((2.0 * static_cast<double>(n) + 1.0) * s, eta, model, spec);
    });
    sum.value *= 2.0 * s / std::sqrt(kPi);
    return sum;
}

double landau_log_partition(double z, double s, double reduced_volume, const OccupancyModel& model,
                            const numerics::QuadratureSpec& spec) {
    if (!(reduced_volume > 0.0)) throw DomainError("landau_log_partition: volume must be positive");
    return reduced_volume * landau_log_partition_density(z, s, model, spec).value;
}

double landau_linearized_level_sum(double s, const numerics::QuadratureSpec& spec) {
    check_s(s, "landau_linearized_level_sum");
    numerics::QuadratureSpec tight = spec;
    tight.relative_tolerance = std::min(spec.relative_tolerance, 1e-13);
    const double inv_sqrt_pi = 1.0 / std::sqrt(kPi);
    return sum_levels(s, [&](std::size_t n) {
               const double c = (2.0 * static_cast<double>(n) + 1.0) * s;
               const auto r = numerics::integrate_semi_infinite(
                   [](double u) { return std::exp(-u * u); }, tight);
               return 2.0 * inv_sqrt_pi * r.value * std::exp(-c);
           })
        .value;
}

double landau_field_factor(double s) {
    if (s == 0.0) return 1.0;
    return s / std::sinh(s);
}

double landau_small_s_factor(double s) { return 1.0 - s * s / 6.0; }

LandauSusceptibility landau_susceptibility(double n_lambda3, const OccupancyModel& model,
                                           const numerics::QuadratureSpec& spec) {
    model.validate();
    if (!(n_lambda3 > 0.0) || !(n_lambda3 <= 0.1))
        throw DomainError("landau_susceptibility: requires 0 < n_lambda3 <= 0.1 (classical regime)");
    LandauSusceptibility out;
    out.z = n_lambda3 / model.g;

    const auto log_z = [&](double s) { return landau_log_partition_density(out.z, s, model, spec).value; };
    std::array<double, 4> s2{};
    for (std::size_t i = 0; i < kLandauExtrapolationGrid.size(); ++i) {
        const double s = kLandauExtrapolationGrid[i];
        const double h = s / 8.0;
        const double slope =
            (-log_z(s + 2.0 * h) + 8.0 * log_z(s + h) - 8.0 * log_z(s - h) + log_z(s - 2.0 * h)) / (12.0 * h);
        out.samples[i] = slope / (s * n_lambda3);
        s2[i] = s * s;
    }
    out.coefficient = numerics::neville(s2, out.samples, 0.0);
    return out;
}

} // namespace xfermi::magnetism
