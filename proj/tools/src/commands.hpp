#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "report.hpp"
#include "xfermi/constants.hpp"
#include "xfermi/numerics.hpp"
#include "xfermi/statistics.hpp"

namespace xfermi::cli {

enum class Units { Reduced, Si };

/// Everything a subcommand needs besides its own grid point.
struct Context {
    OccupancyModel model;
    Units units = Units::Reduced;
    PhysicalConstants constants = PhysicalConstants::reduced();
    numerics::QuadratureSpec quadrature;
    std::uint64_t seed = 0;
    std::string reference = "fd"; // star: denominator statistics
    std::string group = "all";    // compare: quantity group
};

/// One output row before the grid-point columns are prepended.
struct Entry {
    std::string model;
    std::string quantity;
    Value value;
    std::string provenance; // quadrature | series | closed-form | paper-constant | ode | enumeration | monte-carlo
};

using Point = std::map<std::string, double>;

struct Param {
    enum class In { Both, Reduced, Si };

    Param(std::string name, std::vector<double> defaults, std::string help, In units = In::Both,
          std::string replaces = {}, bool integer = false)
        : name(std::move(name)), defaults(std::move(defaults)), help(std::move(help)), units(units),
          replaces(std::move(replaces)), integer(integer) {}

    std::string name;
    std::vector<double> defaults; // empty: only present when given
    std::string help;
    In units;
    std::string replaces; // when present, this param suppresses `replaces`
    bool integer;
};

struct Command {
    std::string name;
    std::string description;
    std::vector<Param> params;
    std::function<std::vector<Entry>(const Context&, const Point&)> evaluate;
};

const std::vector<Command>& commands();

} // namespace xfermi::cli
