#include "xfermi/ensemble.hpp"

#include <array>
#include <cmath>
#include <random>
#include <sstream>

#include "xfermi/errors.hpp"

namespace xfermi::ensemble {

namespace {

// Neumaier-compensated accumulator.
struct CompensatedSum {
    double sum = 0.0;
    double comp = 0.0;
    void add(double v) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v)) comp += (sum - t) + v;
        else comp += (v - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

void check_z(double z, const char* op) {
    if (!(z > 0.0) || !std::isfinite(z)) throw DomainError(std::string(op) + ": fugacity must be positive");
}

int occupancy_count(Occupancy o) {
    switch (o) {
    case Occupancy::Empty: return 0;
    case Occupancy::Up:
    case Occupancy::Down: return 1;
    case Occupancy::Both: return 2;
    }
    return 0;
}

// Per-level Boltzmann weight of each occupancy state, indexed by digit.
std::vector<std::array<double, 4>> level_weights(const LevelSystem& s, double z) {
    std::vector<std::array<double, 4>> w;
    w.reserve(s.size());
    for (double e : s.energies()) {
        const double y = z * std::exp(-e);
        w.push_back({1.0, y, y, y * y});
    }
    return w;
}

template <class Visit>
void enumerate(const LevelSystem& s, Visit&& visit) {
    if (s.size() > LevelSystem::kMaxEnumerationLevels) {
        std::ostringstream msg;
        msg << "enumeration supports at most " << LevelSystem::kMaxEnumerationLevels << " levels, got "
            << s.size();
        throw CapacityError(msg.str());
    }
    const int radix = s.exclusive() ? 3 : 4;
    std::vector<int> digits(s.size(), 0);
    while (true) {
        visit(digits);
        std::size_t i = 0;
        while (i < digits.size() && ++digits[i] == radix) digits[i++] = 0;
        if (i == digits.size()) break;
    }
}

} // namespace

LevelSystem::LevelSystem(std::vector<double> energies, OccupancyModel model)
    : energies_(std::move(energies)), model_(model) {
    if (energies_.empty()) throw DomainError("LevelSystem: need at least one level");
    for (double e : energies_)
        if (!std::isfinite(e)) throw DomainError("LevelSystem: energies must be finite");
    if (model_ == OccupancyModel::exclusive()) exclusive_ = true;
    else if (model_ == OccupancyModel::standard_fd()) exclusive_ = false;
    else throw DomainError("LevelSystem: model must be exclusive or standard Fermi-Dirac");
}

PartitionValue grand_partition_product(const LevelSystem& system, double z) {
    check_z(z, "grand_partition_product");
    CompensatedSum log_sum;
    for (double e : system.energies()) {
        const double log_y = std::log(z) - e;
        // log(1 + c·y) with c = 2 (exclusive) or squared (1 + y) for standard.
        const double term = system.exclusive() ? log_partition_factor(-log_y, OccupancyModel::exclusive())
                                               : log_partition_factor(-log_y, OccupancyModel::standard_fd());
        log_sum.add(term);
    }
    const double lg = log_sum.value();
    return {std::exp(lg), lg};
}

double grand_partition_enumerate(const LevelSystem& system, double z) {
    check_z(z, "grand_partition_enumerate");
    const auto w = level_weights(system, z);
    CompensatedSum total;
    enumerate(system, [&](const std::vector<int>& digits) {
        double weight = 1.0;
        for (std::size_t i = 0; i < digits.size(); ++i) weight *= w[i][digits[i]];
        total.add(weight);
    });
    return total.value();
}

double mean_occupancy_enumerate(const LevelSystem& system, double z, std::size_t level_index) {
    check_z(z, "mean_occupancy_enumerate");
    if (level_index >= system.size()) throw DomainError("mean_occupancy_enumerate: level index out of range");
    const auto w = level_weights(system, z);
    constexpr std::array<int, 4> count = {0, 1, 1, 2};
    CompensatedSum total;
    CompensatedSum occupied;
    enumerate(system, [&](const std::vector<int>& digits) {
        double weight = 1.0;
        for (std::size_t i = 0; i < digits.size(); ++i) weight *= w[i][digits[i]];
        total.add(weight);
        occupied.add(weight * count[digits[level_index]]);
    });
    return occupied.value() / total.value();
}

void for_each_config(const LevelSystem& system, const std::function<void(const OccupationConfig&)>& visit) {
    OccupationConfig cfg;
    cfg.levels.resize(system.size());
    enumerate(system, [&](const std::vector<int>& digits) {
        cfg.particle_number = 0;
        for (std::size_t i = 0; i < digits.size(); ++i) {
            cfg.levels[i] = static_cast<Occupancy>(digits[i]);
            cfg.particle_number += occupancy_count(cfg.levels[i]);
        }
        visit(cfg);
    });
}

McEstimate mc_occupancy(double energy, double z, const OccupancyModel& model, std::size_t samples,
                        std::uint64_t seed, std::uint64_t stream) {
    check_z(z, "mc_occupancy");
    if (!std::isfinite(energy)) throw DomainError("mc_occupancy: energy must be finite");
    if (samples == 0) throw DomainError("mc_occupancy: need at least one sample");
    if (samples < kMinMcSamples) throw DomainError("mc_occupancy: need at least 1000 samples");
    const bool exclusive = model == OccupancyModel::exclusive();
    if (!exclusive && !(model == OccupancyModel::standard_fd()))
        throw DomainError("mc_occupancy: model must be exclusive or standard Fermi-Dirac");

    const double y = z * std::exp(-energy);
    // Cumulative weights of {empty, up, down, both}; "both" absent when exclusive.
    const double w_both = exclusive ? 0.0 : y * y;
    const double total = 1.0 + 2.0 * y + w_both;
    const double c0 = 1.0 / total;
    const double c2 = (1.0 + 2.0 * y) / total;

    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    std::mt19937_64 rng(seq);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);

    CompensatedSum sum;
    CompensatedSum sum_sq;
    for (std::size_t i = 0; i < samples; ++i) {
        const double r = uniform(rng);
        const double n = r < c0 ? 0.0 : r < c2 ? 1.0 : 2.0;
        sum.add(n);
        sum_sq.add(n * n);
    }
    const double count = static_cast<double>(samples);
    const double mean = sum.value() / count;
    const double var = std::max(0.0, sum_sq.value() / count - mean * mean) * count / (count - 1.0);
    return {mean, std::sqrt(var / count), samples};
}

} // namespace xfermi::ensemble
