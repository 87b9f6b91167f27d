#pragma once

// Degenerate-star consequences: polytropic equations of state P = K n^γ at
// T = 0, Lane-Emden structure, and Chandrasekhar-type mass ratios between
// statistics. Reduced units ħ = m = c = 1; G is an explicit argument.

#include "xfermi/numerics.hpp"
#include "xfermi/statistics.hpp"

namespace xfermi::astro {

enum class Regime { NonRelativistic, UltraRelativistic };

struct PolytropeEOS {
    double K = 0.0;
    double gamma = 5.0 / 3.0;
    Regime regime = Regime::NonRelativistic;
    OccupancyModel model{};

    double polytropic_index() const noexcept { return 1.0 / (gamma - 1.0); }
    double pressure(double density) const;
};

/// Zero-temperature pressure coefficient for particles filling orbitals to the
/// step height g/a:
///   non-relativistic   P = (2/5) n E_F = (1/5)(6π²/(g/a))^{2/3} n^{5/3}
///   ultra-relativistic P = (1/4) n ε_F = (1/4)(6π²/(g/a))^{1/3} n^{4/3}
PolytropeEOS eos_coefficient(const OccupancyModel& model, Regime regime);

struct LaneEmdenSolution {
    double index = 0.0;
    double xi1 = 0.0;           // first zero of θ
    double mass_integral = 0.0; // −ξ₁² θ′(ξ₁)
};

/// Solves θ″ + (2/ξ)θ′ + θⁿ = 0, θ(0) = 1, θ′(0) = 0 for index ∈ [0, 4.9],
/// starting from the power series near the centre.
LaneEmdenSolution lane_emden(double index, double step = 1e-3, double tolerance = 1e-12);

/// Total mass of a polytrope with central density rho_c:
/// M = 4π·(−ξ₁²θ′(ξ₁))·[K(n+1)/(4πG)]^{3/2}·ρ_c^{(3−n)/(2n)}.
/// For γ = 4/3 (n = 3) it does not depend on rho_c.
double white_dwarf_mass(const PolytropeEOS& eos, double central_density, double gravitational_constant = 1.0);

/// Radius ξ₁·[K(n+1)/(4πG)]^{1/2}·ρ_c^{(1−n)/(2n)}.
double white_dwarf_radius(const PolytropeEOS& eos, double central_density,
                          double gravitational_constant = 1.0);

struct ChandrasekharComparison {
    double k_nr_ratio = 0.0;          // K_NR(numerator)/K_NR(denominator)
    double k_ur_ratio = 0.0;          // K_UR ratio
    double mass_ratio = 0.0;          // limiting mass ratio from the n = 3 pipeline
    double mass_ratio_closed_form = 0.0; // (K_UR ratio)^{3/2}
    double nr_mass_ratio_fixed_density = 0.0; // n = 3/2 mass ratio at equal ρ_c
    double nr_radius_ratio_fixed_mass = 0.0;  // n = 3/2 radius ratio at equal mass
};

/// Limiting-mass comparison between two statistics (default exclusive vs
/// standard Fermi-Dirac).
ChandrasekharComparison chandrasekhar_comparison(
    const OccupancyModel& numerator = OccupancyModel::exclusive(),
    const OccupancyModel& denominator = OccupancyModel::standard_fd());

/// Shorthand for chandrasekhar_comparison(numerator, denominator).mass_ratio.
double chandrasekhar_ratio(const OccupancyModel& numerator = OccupancyModel::exclusive(),
                           const OccupancyModel& denominator = OccupancyModel::standard_fd());

/// Published estimate of the exclusive/standard limiting-mass ratio.
inline constexpr double kQuotedChandrasekharRatio = 1.6;

} // namespace xfermi::astro
