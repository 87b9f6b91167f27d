#pragma once

// Reference values produced by freeze_oracles.cpp (dense trapezoid grids,
// bisection, independent RK4). Regenerate with the xfermi_freeze_oracles
// target if an oracle changes.

namespace frozen {

// ∫₀^60 √x/(10eˣ + 2) dx, 10⁶-point trapezoid in u = √x.
inline constexpr double kSqrtOver10ExPlus2 = 0.082960733313651627;

// η = 0 moments, g = 2.
inline constexpr double kDensityEta0Exclusive = 1.2813803831597697;
inline constexpr double kEnergyEta0Exclusive = 2.3474720616901328;
inline constexpr double kDensityEta0Fd = 1.5302940492508159;

// η with nλ³ = 1, exclusive, by bisection on the dense-grid density.
inline constexpr double kEtaAtUnitDensityExclusive = -0.34439981945630221;

// N↑λ³/V and N↓λ³/V at η = −3, βμ_B B = 0.5, exclusive.
inline constexpr double kPauliUp = 0.029572985899635074;
inline constexpr double kPauliDown = 0.07770565884942901;

// h/√(2π m_e k_B · 300 K), CODATA 2018.
inline constexpr double kElectronWavelength300K = 4.3034754395952077e-09;

// Lane-Emden, RK4 at step 1e-5.
inline constexpr double kLaneEmden15Xi1 = 3.6537537362305645;
inline constexpr double kLaneEmden15Mass = 2.7140551201539509;
inline constexpr double kLaneEmden3Xi1 = 6.8968486192592318;
inline constexpr double kLaneEmden3Mass = 2.0182359509071013;

// UR pressure coefficient, one vs two particles per orbital, by momentum counting.
inline constexpr double kUrCountingRatio = 1.2599210498948727;

// μ/E_F at fixed density, exclusive, by dense-grid inversion.
struct MuPoint {
    double t;
    double mu;
};
inline constexpr MuPoint kMuExclusive[] = {
    {0.005, 0.99651370166021325},  {0.0075, 0.99475512852093195}, {0.01, 0.99298626930574085},
    {0.0125, 0.99120712000706535}, {0.015, 0.98941767546252135},  {0.0175, 0.98761792934745773},
    {0.02, 0.98580787416573612},   {0.05, 0.96327871123804132},   {0.1, 0.92232651831445944},
    {0.2, 0.82594660328585501},
};

// Intercept of a line through (μ/E_F − 1 + 2A₁t)/t² over t ∈ [0.005, 0.02].
inline constexpr double kMuSecondOrderIntercept = -0.8223065186374231;

} // namespace frozen
