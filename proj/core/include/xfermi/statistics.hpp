#pragma once

#include <string>

#include "xfermi/constants.hpp"

namespace xfermi {

/// Occupation law f(x) = g / (eˣ + a), x = β(ε − μ).
///
/// `g` is the numerator weight (the spin multiplicity 2 for electrons) and `a`
/// the blocking parameter: a = 2 forbids double occupancy of an orbital
/// (exclusive fermions), a = 1 is ordinary Fermi-Dirac, a = 0 is Boltzmann.
/// At T = 0 an orbital holds g/a particles.
struct OccupancyModel {
    double g = 2.0;
    double a = 2.0;

    static constexpr OccupancyModel exclusive() noexcept { return {2.0, 2.0}; }
    static constexpr OccupancyModel standard_fd() noexcept { return {2.0, 1.0}; }
    static constexpr OccupancyModel boltzmann() noexcept { return {2.0, 0.0}; }

    /// Throws DomainError unless g > 0 and a ≥ 0.
    void validate() const;
    bool is_quantum() const noexcept { return a > 0.0; }
    /// Particles per orbital in the T = 0 step (g/a); infinite for Boltzmann.
    double step_height() const noexcept;
    /// "exclusive", "fd", "boltzmann", or "g=..,a=..".
    std::string name() const;

    friend constexpr bool operator==(const OccupancyModel&, const OccupancyModel&) = default;
};

/// Parses "exclusive" | "fd" | "boltzmann".
OccupancyModel parse_statistics(const std::string& name);

/// g/(eˣ + a), evaluated without overflow: beyond |x| = 700 the asymptotic
/// forms g/a (x → −∞, a > 0) and g·e^{−x} (x → +∞) are returned.
double occupation(double x, const OccupancyModel& model);

/// ln f(x), finite for any finite x (f underflows past x ≈ 745).
double log_occupation(double x, const OccupancyModel& model);

/// ln(f_num(x)/f_den(x)) without cancellation; positive for num = fd,
/// den = exclusive at every finite x (≈ e^{-x} in the tail).
double log_occupation_ratio(double x, const OccupancyModel& numerator, const OccupancyModel& denominator);

/// Log of the per-orbital grand partition factor, (g/a)·ln(1 + a·e^{−x}),
/// with the Boltzmann limit g·e^{−x}. Its −d/dx is `occupation`.
double log_partition_factor(double x, const OccupancyModel& model);

/// λ = √(2πħ²/(m k_B T)).
double thermal_wavelength(double mass, double temperature,
                          const PhysicalConstants& units = PhysicalConstants::reduced());

/// b in D(ε) = b V ε^{1/2}: b = (2m)^{3/2} / (4π² ħ³).
double dos_coefficient(double mass, const PhysicalConstants& units = PhysicalConstants::reduced());

/// A gas in physical variables. Temperature is in kelvin for SI constants
/// (k_B·T is the thermal energy) and in energy units for reduced ones.
struct GasParameters {
    double mass = 1.0;
    double temperature = 1.0;
    double chemical_potential = 0.0;
    double volume = 1.0;

    void validate() const;
    double beta(const PhysicalConstants& units) const noexcept {
        return 1.0 / (units.boltzmann * temperature);
    }
    double fugacity(const PhysicalConstants& units) const;
};

/// The two dimensionless controls every thermodynamic result depends on.
struct ReducedState {
    double eta = 0.0;                  // βμ
    double degeneracy_parameter = 0.0; // nλ³
};

/// βμ and nλ³ for a gas; nλ³ comes from the finite-temperature density integral.
ReducedState reduce(const GasParameters& gas, const OccupancyModel& model,
                    const PhysicalConstants& units = PhysicalConstants::reduced());

} // namespace xfermi
