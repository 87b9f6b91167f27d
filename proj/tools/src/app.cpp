#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <future>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "report.hpp"
#include "xfermi/cli.hpp"
#include "xfermi/errors.hpp"

namespace xfermi::cli {

namespace {

constexpr std::uint64_t kDefaultSeed = 20240611;

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Sweep {
    std::string variable;
    std::vector<double> grid;
};

double parse_double(const std::string& s, const std::string& what) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size()) throw UsageError("bad number '" + s + "' in " + what);
    return v;
}

// var:start:stop:points[:linear|log]
Sweep parse_sweep(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
    if (parts.size() != 4 && parts.size() != 5)
        throw UsageError("--sweep expects var:start:stop:points[:linear|log], got '" + text + "'");
    const double start = parse_double(parts[1], "--sweep");
    const double stop = parse_double(parts[2], "--sweep");
    const double points_d = parse_double(parts[3], "--sweep");
    const std::string scale = parts.size() == 5 ? parts[4] : "linear";
    if (points_d < 2.0 || points_d != std::floor(points_d) || points_d > 1e6)
        throw UsageError("--sweep needs an integer number of points >= 2");
    if (scale != "linear" && scale != "log") throw UsageError("--sweep scale must be linear or log");
    if (scale == "log" && !(start > 0.0 && stop > 0.0)) throw UsageError("--sweep log scale needs positive bounds");
    const auto n = static_cast<std::size_t>(points_d);
    Sweep sweep{parts[0], {}};
    for (std::size_t i = 0; i < n; ++i) {
        const double f = static_cast<double>(i) / static_cast<double>(n - 1);
        sweep.grid.push_back(scale == "log" ? std::exp(std::log(start) + f * (std::log(stop) - std::log(start)))
                                            : start + f * (stop - start));
    }
    return sweep;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

// key = value lines; values fill options that were not given on the command line.
void apply_config(const std::string& path, CLI::App& root, CLI::App& sub) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open config file " + path);
    std::string line;
    for (int lineno = 1; std::getline(in, line); ++lineno) {
        line = trim(line.substr(0, line.find('#')));
        if (line.empty() || line.front() == '[') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw UsageError(path + ":" + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
        if (key == "config") throw UsageError(path + ": config files cannot include other config files");
        CLI::Option* opt = sub.get_option_no_throw("--" + key);
        if (!opt) opt = root.get_option_no_throw("--" + key);
        if (!opt) throw UsageError(path + ":" + std::to_string(lineno) + ": unknown key '" + key + "'");
        if (opt->count() > 0) continue;
        opt->add_result(value);
        opt->run_callback();
    }
}

std::vector<Point> build_grid(const Command& cmd, const std::vector<const Param*>& active,
                              const std::map<std::string, double>& given, const std::optional<Sweep>& sweep) {
    std::vector<Point> grid{Point{}};
    for (const Param* p : active) {
        std::vector<double> values;
        if (sweep && sweep->variable == p->name) values = sweep->grid;
        else if (given.count(p->name)) values = {given.at(p->name)};
        else values = p->defaults;
        std::vector<Point> next;
        for (const auto& pt : grid) {
            for (double v : values) {
                auto q = pt;
                q[p->name] = v;
                next.push_back(std::move(q));
            }
        }
        grid = std::move(next);
    }
    (void)cmd;
    return grid;
}

std::vector<std::vector<Entry>> evaluate(const Command& cmd, const Context& ctx, const std::vector<Point>& grid,
                                         unsigned jobs) {
    std::vector<std::vector<Entry>> out(grid.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < grid.size(); ++i) out[i] = cmd.evaluate(ctx, grid[i]);
        return out;
    }
    for (std::size_t start = 0; start < grid.size(); start += jobs) {
        const std::size_t stop = std::min(grid.size(), start + jobs);
        std::vector<std::future<std::vector<Entry>>> batch;
        for (std::size_t i = start; i < stop; ++i)
            batch.push_back(std::async(std::launch::async, [&, i] { return cmd.evaluate(ctx, grid[i]); }));
        for (std::size_t i = start; i < stop; ++i) out[i] = batch[i - start].get();
    }
    return out;
}

std::string number_text(double v) { return format_number(v, 10); }

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Thermodynamics of ideal Fermi gases with exclusive, standard and classical occupancy", "xfermi"};
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

    std::string statistics = "exclusive", units = "reduced", format = "table", sweep_text, config_path;
    std::string constants_path = XFERMI_DATA_DIR "/physical_constants.ini";
    std::uint64_t seed = kDefaultSeed;
    double rtol = 1e-10, atol = 1e-14;
    int max_subdivisions = 4000;
    unsigned jobs = 1;

    app.add_option("--statistics", statistics, "exclusive | fd | boltzmann")
        ->check(CLI::IsMember({"exclusive", "fd", "boltzmann"}));
    app.add_option("--units", units, "reduced | si")->check(CLI::IsMember({"reduced", "si"}));
    app.add_option("--format", format, "table | csv | json")->check(CLI::IsMember({"table", "csv", "json"}));
    app.add_option("--sweep", sweep_text, "var:start:stop:points[:linear|log]");
    auto* seed_opt = app.add_option("--seed", seed, "random seed (fallback: XFERMI_SEED)");
    app.add_option("--rtol", rtol, "quadrature relative tolerance");
    app.add_option("--atol", atol, "quadrature absolute tolerance");
    app.add_option("--max-subdivisions", max_subdivisions, "quadrature subdivision budget");
    app.add_option("--jobs", jobs, "worker threads for sweeps")->check(CLI::Range(1u, 256u));
    app.add_option("--config", config_path, "key = value file; flags override it");
    app.add_option("--constants", constants_path, "physical constants table for --units si");

    Context ctx;
    std::map<std::string, std::map<std::string, double>> storage;
    std::map<std::string, CLI::App*> subs;
    for (const auto& cmd : commands()) {
        auto* sub = app.add_subcommand(cmd.name, cmd.description);
        sub->fallthrough();
        subs[cmd.name] = sub;
        for (const auto& p : cmd.params)
            if (!sub->get_option_no_throw("--" + p.name))
                sub->add_option("--" + p.name, storage[cmd.name][p.name], p.help);
        if (cmd.name == "star")
            sub->add_option("--reference", ctx.reference, "denominator statistics")
                ->check(CLI::IsMember({"exclusive", "fd", "boltzmann"}));
        if (cmd.name == "compare")
            sub->add_option("--quantity", ctx.group, "all | occupation | virial | fermi | sommerfeld | mu | heat | star")
                ->check(CLI::IsMember({"all", "occupation", "virial", "fermi", "sommerfeld", "mu", "heat", "star"}));
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsage;
    }

    const Command* cmd = nullptr;
    CLI::App* sub = nullptr;
    for (const auto& c : commands()) {
        if (subs[c.name]->parsed()) {
            cmd = &c;
            sub = subs[c.name];
        }
    }

    try {
        if (!config_path.empty()) apply_config(config_path, app, *sub);
        if (seed_opt->count() == 0) {
            if (const char* env = std::getenv("XFERMI_SEED")) {
                try {
                    std::size_t used = 0;
                    seed = std::stoull(env, &used);
                    if (used != std::string(env).size()) throw std::invalid_argument(env);
                } catch (const std::exception&) {
                    throw UsageError(std::string("XFERMI_SEED is not an unsigned integer: ") + env);
                }
            }
        }

        ctx.model = parse_statistics(statistics);
        ctx.units = units == "si" ? Units::Si : Units::Reduced;
        ctx.constants = ctx.units == Units::Si ? PhysicalConstants::load(constants_path) : PhysicalConstants::reduced();
        ctx.quadrature.relative_tolerance = rtol;
        ctx.quadrature.absolute_tolerance = atol;
        ctx.quadrature.max_subdivisions = max_subdivisions;
        ctx.quadrature.validate();
        ctx.seed = seed;

        std::optional<Sweep> sweep;
        if (!sweep_text.empty()) sweep = parse_sweep(sweep_text);

        std::map<std::string, double> given;
        std::vector<const Param*> active;
        for (const auto& p : cmd->params) {
            const bool in_units = p.units == Param::In::Both ||
                                  (p.units == Param::In::Si) == (ctx.units == Units::Si);
            const bool set = sub->get_option("--" + p.name)->count() > 0;
            if (!in_units) {
                if (set) throw UsageError("--" + p.name + " does not apply with --units " + units);
                continue;
            }
            if (set) given[p.name] = storage[cmd->name][p.name];
            if (set && sweep && sweep->variable == p.name)
                throw UsageError("--" + p.name + " conflicts with --sweep over the same variable");
            const bool swept = sweep && sweep->variable == p.name;
            if (p.defaults.empty() && !set && !swept) continue;
            active.push_back(&p);
        }
        for (const auto* p : std::vector<const Param*>(active)) {
            if (p->replaces.empty()) continue;
            if (given.count(p->replaces))
                throw UsageError("--" + p->name + " and --" + p->replaces + " are mutually exclusive");
            active.erase(std::remove_if(active.begin(), active.end(),
                                        [&](const Param* q) { return q->name == p->replaces; }),
                         active.end());
        }
        if (sweep && std::none_of(active.begin(), active.end(),
                                  [&](const Param* p) { return p->name == sweep->variable; }))
            throw UsageError("--sweep variable '" + sweep->variable + "' is not a parameter of " + cmd->name);

        const auto grid = build_grid(*cmd, active, given, sweep);
        const auto results = evaluate(*cmd, ctx, grid, jobs);

        Report report;
        report.meta = {
            {"command", cmd->name},
            {"statistics", cmd->name == "compare" ? std::string("exclusive,fd,boltzmann") : ctx.model.name()},
            {"g", cmd->name == "compare" ? Value{2.0} : Value{ctx.model.g}},
            {"a", cmd->name == "compare" ? Value{std::string("2,1,0")} : Value{ctx.model.a}},
            {"units", units},
            {"constants", ctx.constants.name},
            {"rtol", rtol},
            {"atol", atol},
            {"max_subdivisions", static_cast<long long>(max_subdivisions)},
            {"seed", std::to_string(seed)},
        };
        if (sweep) report.meta.emplace_back("sweep", sweep_text);
        if (cmd->name == "star") report.meta.emplace_back("reference", ctx.reference);
        if (cmd->name == "compare") report.meta.emplace_back("quantity", ctx.group);

        for (const auto* p : active) report.columns.push_back(p->name);
        for (const char* c : {"model", "quantity", "value", "provenance"}) report.columns.emplace_back(c);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            for (const auto& e : results[i]) {
                std::vector<Value> row;
                for (const auto* p : active) {
                    const double v = grid[i].at(p->name);
                    if (p->integer && v == std::floor(v) && std::abs(v) < 1e15) row.emplace_back(static_cast<long long>(v));
                    else row.emplace_back(v);
                }
                row.emplace_back(e.model);
                row.emplace_back(e.quantity);
                row.push_back(e.value);
                row.emplace_back(e.provenance);
                report.rows.push_back(std::move(row));
            }
        }

        const Format fmt = format == "csv" ? Format::Csv : format == "json" ? Format::Json : Format::Table;
        emit(report, fmt, out);
        return kSuccess;
    } catch (const UsageError& e) {
        err << "xfermi: usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const CLI::ParseError& e) {
        err << "xfermi: usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const NumericalError& e) {
        err << "xfermi: numerical failure in " << cmd->name << " (rtol=" << number_text(rtol)
            << ", atol=" << number_text(atol) << ", max_subdivisions=" << max_subdivisions << "): " << e.what()
            << '\n';
        return kNumerical;
    } catch (const Error& e) {
        err << "xfermi: error: " << e.what() << '\n';
        return kUsage;
    }
}

} // namespace xfermi::cli
