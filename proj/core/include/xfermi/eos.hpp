#pragma once

// Finite-temperature equation of state of the ideal gas in reduced variables.
//
// With x = βε and η = βμ, every bulk quantity is a moment of the occupation
// law against the free-particle density of states:
//
//   nλ³        = (2/√π) ∫₀^∞ x^{1/2} f(x − η) dx
//   u = Eλ³/VkT = (2/√π) ∫₀^∞ x^{3/2} f(x − η) dx
//   p = Pλ³/kT  = (2/√π) ∫₀^∞ x^{1/2} ln-factor(x − η) dx
//
// p and u are evaluated independently so that p = (2/3)u is a check, not an
// assumption.

#include "xfermi/numerics.hpp"
#include "xfermi/statistics.hpp"

namespace xfermi::eos {

struct ThermoPoint {
    double eta = 0.0;       // βμ
    double z = 1.0;         // e^η
    double n_lambda3 = 0.0; // nλ³
    double u = 0.0;         // ⟨E⟩λ³/(V k_B T)
    double p = 0.0;         // Pλ³/(k_B T)
    OccupancyModel model{};
};

/// nλ³ at βμ = eta. Strictly increasing in eta.
double density(double eta, const OccupancyModel& model, const numerics::QuadratureSpec& spec = {});

/// ⟨E⟩λ³/(V k_B T).
double energy_density(double eta, const OccupancyModel& model,
                      const numerics::QuadratureSpec& spec = {});

/// Pλ³/(k_B T) from the grand potential (log of the partition factor).
double pressure(double eta, const OccupancyModel& model, const numerics::QuadratureSpec& spec = {});

/// All of the above at one eta.
ThermoPoint thermo_point(double eta, const OccupancyModel& model,
                         const numerics::QuadratureSpec& spec = {});

/// Inverts density(): returns η with density(η) = n_lambda3 to 1e-10 relative.
/// The bracket is grown by doubling from the Boltzmann estimate ln(nλ³/g).
double solve_fugacity(double n_lambda3, const OccupancyModel& model,
                      const numerics::QuadratureSpec& spec = {});

/// ThermoPoint at a prescribed degeneracy parameter.
ThermoPoint thermo_point_at_density(double n_lambda3, const OccupancyModel& model,
                                    const numerics::QuadratureSpec& spec = {});

/// PV/(N k_B T) from exact quadrature at given nλ³.
double compressibility(double n_lambda3, const OccupancyModel& model,
                       const numerics::QuadratureSpec& spec = {});

/// Beyond this nλ³ the two-term virial series is no longer trusted.
inline constexpr double kVirialValidityLimit = 0.2;

struct VirialEstimate {
    double value = 0.0;
    bool within_validity = true; // false when nλ³ > kVirialValidityLimit
};

/// Second virial coefficient B₂ in PV/(Nk_BT) = 1 + B₂·nλ³ + …;
/// B₂ = a / (g·2^{5/2}), i.e. 1/(4√2) exclusive, 1/(8√2) standard FD.
double second_virial_coefficient(const OccupancyModel& model);

/// 1 + B₂·nλ³.
VirialEstimate virial_pressure(double n_lambda3,
                               const OccupancyModel& model = OccupancyModel::exclusive());

/// Two-term fugacity series z ≈ (nλ³/g)(1 + a·nλ³/(g·2^{3/2})).
VirialEstimate virial_fugacity(double n_lambda3,
                               const OccupancyModel& model = OccupancyModel::exclusive());

} // namespace xfermi::eos
