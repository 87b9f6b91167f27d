#include "xfermi/statistics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "xfermi/eos.hpp"
#include "xfermi/errors.hpp"

namespace xfermi {

namespace {
constexpr double kOverflowCut = 700.0;
}

void OccupancyModel::validate() const {
    if (!(g > 0.0) || !std::isfinite(g)) throw DomainError("OccupancyModel: g must be positive");
    if (!(a >= 0.0) || !std::isfinite(a)) throw DomainError("OccupancyModel: a must be >= 0");
}

double OccupancyModel::step_height() const noexcept {
    return a > 0.0 ? g / a : std::numeric_limits<double>::infinity();
}

std::string OccupancyModel::name() const {
    if (*this == exclusive()) return "exclusive";
    if (*this == standard_fd()) return "fd";
    if (*this == boltzmann()) return "boltzmann";
    std::ostringstream s;
    s << "g=" << g << ",a=" << a;
    return s.str();
}

OccupancyModel parse_statistics(const std::string& name) {
    if (name == "exclusive") return OccupancyModel::exclusive();
    if (name == "fd" || name == "standard") return OccupancyModel::standard_fd();
    if (name == "boltzmann") return OccupancyModel::boltzmann();
    throw DomainError("unknown statistics '" + name + "' (expected exclusive, fd or boltzmann)");
}

double occupation(double x, const OccupancyModel& m) {
    if (x >= kOverflowCut) return m.g * std::exp(-x);
    if (x <= -kOverflowCut && m.a > 0.0) return m.g / m.a;
    if (x > 0.0) {
        const double e = std::exp(-x);
        return m.g * e / (1.0 + m.a * e);
    }
    return m.g / (std::exp(x) + m.a);
}

double log_occupation(double x, const OccupancyModel& m) {
    const double lg = std::log(m.g);
    if (m.a == 0.0) return lg - x;
    if (x > 0.0) return lg - x - std::log1p(m.a * std::exp(-x));
    return lg - std::log(m.a) - std::log1p(std::exp(x) / m.a);
}

double log_occupation_ratio(double x, const OccupancyModel& num, const OccupancyModel& den) {
    // f_num/f_den = (g_n/g_d)·(e^x + a_d)/(e^x + a_n) = (g_n/g_d)/(1 + (a_n − a_d)·w), w = 1/(e^x + a_d)
    const double w = x > 0.0 ? std::exp(-x) / (1.0 + den.a * std::exp(-x)) : 1.0 / (std::exp(x) + den.a);
    return std::log(num.g / den.g) - std::log1p((num.a - den.a) * w);
}

double log_partition_factor(double x, const OccupancyModel& m) {
    if (m.a == 0.0) return m.g * std::exp(-x);
    if (x > 0.0) return m.g / m.a * std::log1p(m.a * std::exp(-x));
    // ln(1 + a e^{-x}) = -x + ln a + ln(1 + e^{x}/a)
    return m.g / m.a * (-x + std::log(m.a) + std::log1p(std::exp(x) / m.a));
}

double thermal_wavelength(double mass, double temperature, const PhysicalConstants& u) {
    if (!(mass > 0.0) || !(temperature > 0.0))
        throw DomainError("thermal_wavelength: mass and temperature must be positive");
    return std::sqrt(2.0 * std::numbers::pi * u.hbar * u.hbar / (mass * u.boltzmann * temperature));
}

double dos_coefficient(double mass, const PhysicalConstants& u) {
    if (!(mass > 0.0)) throw DomainError("dos_coefficient: mass must be positive");
    constexpr double pi = std::numbers::pi;
    return std::pow(2.0 * mass, 1.5) / (4.0 * pi * pi * u.hbar * u.hbar * u.hbar);
}

void GasParameters::validate() const {
    if (!(mass > 0.0)) throw DomainError("GasParameters: mass must be positive");
    if (!(temperature > 0.0)) throw DomainError("GasParameters: temperature must be positive");
    if (!(volume > 0.0)) throw DomainError("GasParameters: volume must be positive");
    if (!std::isfinite(chemical_potential))
        throw DomainError("GasParameters: chemical potential must be finite");
}

double GasParameters::fugacity(const PhysicalConstants& units) const {
    return std::exp(beta(units) * chemical_potential);
}

ReducedState reduce(const GasParameters& gas, const OccupancyModel& model,
                    const PhysicalConstants& units) {
    gas.validate();
    const double eta = gas.beta(units) * gas.chemical_potential;
    return {eta, eos::density(eta, model)};
}

} // namespace xfermi
