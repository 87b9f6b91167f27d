#pragma once

// Exact and stochastic checks of the grand-canonical foundation on small,
// explicit level systems. Energies are given in units of k_BT (β = 1).

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "xfermi/statistics.hpp"

namespace xfermi::ensemble {

/// A finite single-particle spectrum. Each orbital carries spin up/down
/// states of equal energy; the model decides whether both may be filled.
class LevelSystem {
public:
    static constexpr std::size_t kMaxEnumerationLevels = 20;

    /// Accepts only the exclusive and standard Fermi-Dirac models.
    LevelSystem(std::vector<double> energies, OccupancyModel model);

    std::span<const double> energies() const noexcept { return energies_; }
    const OccupancyModel& model() const noexcept { return model_; }
    std::size_t size() const noexcept { return energies_.size(); }
    bool exclusive() const noexcept { return exclusive_; }

private:
    std::vector<double> energies_;
    OccupancyModel model_;
    bool exclusive_;
};

enum class Occupancy : std::uint8_t { Empty, Up, Down, Both };

/// One microstate. Exclusive systems never contain Occupancy::Both.
struct OccupationConfig {
    std::vector<Occupancy> levels;
    int particle_number = 0;
};

struct PartitionValue {
    double value = 0.0;     // may overflow to +inf for large systems
    double log_value = 0.0; // always finite for finite inputs
};

/// ∏ᵢ (1 + 2zeᵉⁱ) for exclusive, ∏ᵢ (1 + ze^{−εᵢ})² for standard, in log space.
PartitionValue grand_partition_product(const LevelSystem& system, double z);

/// Brute-force Σ over every legal OccupationConfig of z^N e^{−E}; mixed-radix
/// counter over 3^L (exclusive) or 4^L (standard) states.
/// Throws CapacityError above kMaxEnumerationLevels levels.
double grand_partition_enumerate(const LevelSystem& system, double z);

/// Configuration-weighted ⟨nᵢ⟩ for one level, by enumeration.
double mean_occupancy_enumerate(const LevelSystem& system, double z, std::size_t level_index);

/// Calls `visit` on every legal configuration (for inspection and tests).
void for_each_config(const LevelSystem& system, const std::function<void(const OccupationConfig&)>& visit);

struct McEstimate {
    double mean = 0.0;
    double standard_error = 0.0;
    std::size_t samples = 0;
};

/// Samples the state of a single level with probabilities ∝ {1, y, y} or
/// ∝ {1, y, y, y²} (y = z e^{−ε}) and averages the occupancy. Deterministic
/// for a given (seed, stream); use a distinct stream per level when sampling
/// several levels so that no two share a generator.
McEstimate mc_occupancy(double energy, double z, const OccupancyModel& model, std::size_t samples,
                        std::uint64_t seed, std::uint64_t stream = 0);

inline constexpr std::size_t kMinMcSamples = 1000;

} // namespace xfermi::ensemble
