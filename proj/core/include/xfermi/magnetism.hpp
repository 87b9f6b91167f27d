#pragma once

// Spin (Pauli) and orbital (Landau) magnetic response of the ideal gas.
//
// Pauli: each spin species sees a Zeeman-shifted fugacity y = z·e^{∓βμ_B B}
// and carries numerator weight g/2, so N↑ and N↓ are half-densities at
// η ∓ βμ_B B.
//
// Landau: log Z_G λ³/V = (2s/√π) Σₙ ∫₀^∞ x^{-1/2} φ(x + (2n+1)s) dx,
// φ = log of the per-orbital partition factor, s = ħω_c/(2k_BT).

#include <array>
#include <cstddef>

#include "xfermi/numerics.hpp"
#include "xfermi/statistics.hpp"

namespace xfermi::magnetism {

/// Physical field description; the reduced computations only need
/// b_red = βμ_B B (Pauli) and s = ħω_c/(2k_BT) (Landau).
struct MagneticEnvironment {
    double field = 0.0;          // B
    double bohr_magneton = 1.0;  // μ_B = eħ/2m
    double cyclotron_frequency = 0.0; // ω_c = eB/m
    double s = 0.0;              // ħω_c/(2k_BT)
    double landau_degeneracy = 0.0; // eBL²/(2πħ)

    /// Builds the environment for a particle of charge e and mass m in a cube of side L.
    static MagneticEnvironment make(double field, double temperature, double box_length,
                                    const PhysicalConstants& units, double mass);
    /// βμ_B B.
    double zeeman_ratio(double temperature, const PhysicalConstants& units) const;
};

struct SpinPopulations {
    double up = 0.0;   // N↑λ³/V (moment antiparallel, energy +μ_B B)
    double down = 0.0; // N↓λ³/V
};

struct MagnetizationResult {
    double n_up = 0.0;
    double n_down = 0.0;
    double magnetization = 0.0;     // Mλ³/(V μ_B) = (N↓ − N↑)λ³/V
    double reduced_magnetization = 0.0; // M/(N μ_B)
};

SpinPopulations pauli_populations(double eta, double b_red, const OccupancyModel& model,
                                  const numerics::QuadratureSpec& spec = {});

/// M = −μ_B(N↑ − N↓). Odd in b_red; |M| ≤ Nμ_B.
MagnetizationResult pauli_magnetization(double eta, double b_red, const OccupancyModel& model,
                                        const numerics::QuadratureSpec& spec = {});

/// Landau-level sums are truncated once a level adds less than this
/// fraction of the running total.
inline constexpr double kLandauTruncation = 1e-14;
inline constexpr std::size_t kMaxLandauLevels = 1'000'000;

struct LandauSum {
    double value = 0.0;  // log Z_G λ³ / V
    std::size_t levels = 0;
};

/// log Z_G λ³/V at fugacity z and s = ħω_c/(2k_BT). Throws ConvergenceError
/// when the truncation criterion is not met within kMaxLandauLevels levels.
LandauSum landau_log_partition_density(double z, double s, const OccupancyModel& model,
                                       const numerics::QuadratureSpec& spec = {});

/// log Z_G for a box of reduced volume V/λ³.
double landau_log_partition(double z, double s, double reduced_volume, const OccupancyModel& model,
                            const numerics::QuadratureSpec& spec = {});

/// Σₙ e^{−(2n+1)s}, each term obtained from its own momentum quadrature of the
/// linearised (small-z) integrand. Compare with 1/(2 sinh s).
double landau_linearized_level_sum(double s, const numerics::QuadratureSpec& spec = {});

/// s/sinh s: the small-z field factor log Z_G(s)/log Z_G(0).
double landau_field_factor(double s);
/// 1 − s²/6, its small-s expansion.
double landau_small_s_factor(double s);

/// Sequence of s values the B → 0 limit is extrapolated from.
inline constexpr std::array<double, 4> kLandauExtrapolationGrid = {0.2, 0.1, 0.05, 0.025};

struct LandauSusceptibility {
    double coefficient = 0.0; // χ k_BT / (μ_B² n)
    double z = 0.0;
    std::array<double, 4> samples{}; // L'(s)/(s·nλ³) on kLandauExtrapolationGrid
};

/// Diamagnetic susceptibility in the classical regime (nλ³ ≤ 0.1). The
/// fugacity is eliminated at first order, z = nλ³/g; M = k_BT ∂log Z_G/∂B is
/// a centred difference at fixed z, and χ = lim M/(VB) is extrapolated to
/// s → 0 as a polynomial in s².
LandauSusceptibility landau_susceptibility(double n_lambda3, const OccupancyModel& model,
                                           const numerics::QuadratureSpec& spec = {});

} // namespace xfermi::magnetism
