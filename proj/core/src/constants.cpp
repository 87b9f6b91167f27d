#include "xfermi/constants.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "xfermi/errors.hpp"

namespace xfermi {

PhysicalConstants PhysicalConstants::reduced() {
    PhysicalConstants c;
    c.name = "reduced";
    return c;
}

PhysicalConstants PhysicalConstants::codata2018() {
    PhysicalConstants c;
    c.name = "CODATA-2018";
    c.hbar = 1.054571817e-34;
    c.boltzmann = 1.380649e-23;
    c.electron_mass = 9.1093837015e-31;
    c.elementary_charge = 1.602176634e-19;
    c.speed_of_light = 299792458.0;
    c.gravitational = 6.67430e-11;
    c.electron_volt = 1.602176634e-19;
    return c;
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

} // namespace

PhysicalConstants PhysicalConstants::load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open constants file " + path.string());

    PhysicalConstants c;
    const std::map<std::string, double PhysicalConstants::*> fields = {
        {"hbar", &PhysicalConstants::hbar},
        {"boltzmann", &PhysicalConstants::boltzmann},
        {"electron_mass", &PhysicalConstants::electron_mass},
        {"elementary_charge", &PhysicalConstants::elementary_charge},
        {"speed_of_light", &PhysicalConstants::speed_of_light},
        {"gravitational", &PhysicalConstants::gravitational},
        {"electron_volt", &PhysicalConstants::electron_volt},
    };

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find_first_of("#;");
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty() || line.front() == '[') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw DomainError(path.string() + ":" + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key == "name") {
            c.name = value;
            continue;
        }
        const auto it = fields.find(key);
        if (it == fields.end())
            throw DomainError(path.string() + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
        std::istringstream parse(value);
        double v = 0.0;
        if (!(parse >> v) || !(v > 0.0))
            throw DomainError(path.string() + ":" + std::to_string(lineno) + ": bad value for " + key);
        c.*(it->second) = v;
    }
    return c;
}

} // namespace xfermi
