#pragma once

#include <filesystem>
#include <string>

namespace xfermi {

/// A named set of physical constants. The core works in reduced units
/// (ħ = m = k_B = 1); SI values are only used to convert at the boundary.
struct PhysicalConstants {
    std::string name;
    double hbar = 1.0;             // J s
    double boltzmann = 1.0;        // J/K
    double electron_mass = 1.0;    // kg
    double elementary_charge = 1.0; // C
    double speed_of_light = 1.0;   // m/s
    double gravitational = 1.0;    // m^3 kg^-1 s^-2
    double electron_volt = 1.0;    // J

    double bohr_magneton() const noexcept {
        return elementary_charge * hbar / (2.0 * electron_mass);
    }

    static PhysicalConstants reduced();
    /// CODATA 2018 recommended values (exact SI-defining constants where applicable).
    static PhysicalConstants codata2018();

    /// Reads a `key = value` table (see data/physical_constants.ini). Unknown
    /// keys are rejected; `#` and `;` start comments.
    static PhysicalConstants load(const std::filesystem::path& path);
};

} // namespace xfermi
