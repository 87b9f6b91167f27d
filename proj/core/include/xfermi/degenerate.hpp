#pragma once

// Zero- and low-temperature behaviour of a degenerate gas: Fermi scale,
// ground-state energy and pressure, the Sommerfeld moment constants, and the
// temperature dependence of μ and of the specific heat.
//
// Every low-temperature series here has an "exact" companion that solves the
// finite-temperature density equation at fixed n by quadrature. The exact
// path is authoritative; the series are kept for comparison.
//
// Reduced units: ħ = m = k_B = 1.

#include <optional>

#include "xfermi/numerics.hpp"
#include "xfermi/statistics.hpp"

namespace xfermi::degenerate {

struct FermiScale {
    double fermi_energy = 0.0;      // E_F
    double fermi_temperature = 0.0; // E_F / k_B
    double density = 0.0;           // n = N/V
    OccupancyModel model{};
};

/// E_F = ½(6π² n/(g/a))^{2/3}: ½(6π²n)^{2/3} exclusive, ½(3π²n)^{2/3} standard.
/// Boltzmann has no Fermi surface and is rejected.
double fermi_energy(double density, const OccupancyModel& model);
FermiScale fermi_scale(double density, const OccupancyModel& model);

/// Particle density of the T = 0 step filled up to fermi_energy:
/// (g/a)·(2/3)·b·E_F^{3/2}.
double step_density(double fermi_energy, const OccupancyModel& model);

/// E = (3/5) N E_F.
double ground_state_energy(double particle_number, double fermi_energy);
/// P = (2/5) n E_F.
double degeneracy_pressure(double density, double fermi_energy);

struct SommerfeldConstant {
    int order = 1;
    double blocking = 2.0;
    double quadrature = 0.0;
    double closed_form = 0.0;
};

/// A_k = ∫ x^k eˣ/(eˣ + a)² dx over the real line, k ∈ {1, 2}, by quadrature,
/// together with the closed forms A₁ = ln(a)/a and A₂ = ((ln a)² + π²/3)/a.
SommerfeldConstant sommerfeld_constant(int order, double blocking,
                                       const numerics::QuadratureSpec& spec = {});

/// Closed-form A_k (k = 1, 2).
double sommerfeld_closed_form(int order, double blocking);

struct SommerfeldConstants {
    SommerfeldConstant a1;
    SommerfeldConstant a2;
};

SommerfeldConstants sommerfeld_constants(double blocking, const numerics::QuadratureSpec& spec = {});

/// Values quoted in the original derivation for a = 2.
inline constexpr double kQuotedA1 = 0.34657;
inline constexpr double kQuotedA2 = 1.88516;
/// Quoted specific-heat coefficients (units k_B² T / E_F).
inline constexpr double kQuotedExclusiveHeatCoefficient = 5.55;
inline constexpr double kQuotedFermiGasHeatCoefficient = 4.93;

/// Past this k_BT/μ the two-term series are not trusted.
inline constexpr double kSeriesValidityLimit = 0.3;

/// Bracketed factor of the particle-number series,
/// 1 + (3/2)·a·A₁·t + (3/8)·a·A₂·t², t = k_BT/μ. For a = 2 this is
/// 1 + 3A₁t + (3/4)A₂t².
double sommerfeld_number_factor(double t, const OccupancyModel& model);
/// Bracketed factor of the energy series, 1 + (5/2)aA₁t + (15/8)aA₂t²
/// (a = 2: 1 + 5A₁t + (15/4)A₂t²).
double sommerfeld_energy_factor(double t, const OccupancyModel& model);

/// N/N_F at chemical potential mu_red = μ/E_F and t = k_BT/μ:
/// mu_red^{3/2} × number factor.
double sommerfeld_number(double mu_red, double t, const OccupancyModel& model);
/// E/(3/5 N_F E_F) at the same point: mu_red^{5/2} × energy factor.
double sommerfeld_energy(double mu_red, double t, const OccupancyModel& model);

/// Exact N/N_F at (μ, T) from the density quadrature, t = k_BT/μ:
/// density(1/t) / ((g/a)(4/(3√π)) t^{-3/2}).
double exact_number_ratio(double t, const OccupancyModel& model,
                          const numerics::QuadratureSpec& spec = {});

/// βμ that keeps n fixed at reduced temperature t = k_BT/E_F.
double eta_at_fixed_density(double t, const OccupancyModel& model,
                            const numerics::QuadratureSpec& spec = {});

struct ChemicalPotential {
    double t = 0.0;                  // k_BT / E_F
    double exact = 0.0;              // μ/E_F by density inversion
    double series = 0.0;             // 1 + c₁t + c₂t², re-derived coefficients
    std::optional<double> series_quoted; // exclusive only: coefficient as originally printed
};

/// μ/E_F at fixed density, t ∈ (0, 0.3).
ChemicalPotential chemical_potential_vs_T(double t, const OccupancyModel& model,
                                          const numerics::QuadratureSpec& spec = {});

/// First- and second-order coefficients of μ/E_F = 1 + c₁t + c₂t² from the
/// order-by-order inversion of the number series: c₁ = −aA₁,
/// c₂ = (aA₁)²/4 − aA₂/4 (exclusive: −2A₁ and A₁² − A₂/2).
double mu_series_first_order(const OccupancyModel& model);
double mu_series_second_order(const OccupancyModel& model);
/// The second-order coefficient as quoted for the exclusive gas, −(A₂/2 − 9A₁²).
double mu_series_second_order_quoted();

/// E/(N E_F) at fixed density and t = k_BT/E_F, by quadrature.
double energy_per_particle(double t, const OccupancyModel& model,
                           const numerics::QuadratureSpec& spec = {});

struct SpecificHeat {
    double t = 0.0;           // k_BT / E_F
    double exact = 0.0;       // c/k_B from d(E/N)/dT
    double exact_coefficient = 0.0; // exact / t
    double series_coefficient = 0.0; // (3/2)(aA₂ − a²A₁²) = π²/2
    std::optional<double> quoted_formula_coefficient; // exclusive: 3A₂ − (6/5)A₁²
};

/// Specific heat per particle at fixed density, t ∈ (0.001, 0.1). The exact
/// path differentiates E/N by a centred difference with relative step
/// `relative_step`, Richardson-extrapolated from steps h and h/2.
SpecificHeat specific_heat(double t, const OccupancyModel& model,
                           const numerics::QuadratureSpec& spec = {}, double relative_step = 1e-3);

/// Linear specific-heat coefficient from the re-derived series; always π²/2.
double specific_heat_series_coefficient(const OccupancyModel& model);
/// 3A₂ − (6/5)A₁² at a = 2, the formula as originally printed.
double specific_heat_quoted_formula_coefficient();

} // namespace xfermi::degenerate
