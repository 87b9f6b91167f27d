#include "commands.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "xfermi/astro.hpp"
#include "xfermi/degenerate.hpp"
#include "xfermi/ensemble.hpp"
#include "xfermi/eos.hpp"
#include "xfermi/errors.hpp"
#include "xfermi/magnetism.hpp"

namespace xfermi::cli {

namespace {

constexpr double kPi = std::numbers::pi;

using P = Param::In;

double at(const Point& p, const std::string& key) { return p.at(key); }

std::vector<Entry> occupation_rows(const Context& ctx, const Point& p) {
    return {{ctx.model.name(), "f", occupation(at(p, "x"), ctx.model), "closed-form"}};
}

std::vector<Entry> eos_rows(const Context& ctx, const Point& p) {
    const auto& m = ctx.model;
    const auto& q = ctx.quadrature;
    const std::string name = m.name();
    if (ctx.units == Units::Si) {
        const auto& u = ctx.constants;
        const double T = at(p, "temperature");
        const double lambda = thermal_wavelength(u.electron_mass, T, u);
        const double kt = u.boltzmann * T;
        const auto tp = eos::thermo_point_at_density(at(p, "density") * lambda * lambda * lambda, m, q);
        return {
            {name, "thermal_wavelength_m", lambda, "closed-form"},
            {name, "n_lambda3", tp.n_lambda3, "closed-form"},
            {name, "eta", tp.eta, "quadrature"},
            {name, "pressure_Pa", tp.p * kt / (lambda * lambda * lambda), "quadrature"},
            {name, "energy_per_particle_eV", tp.u / tp.n_lambda3 * kt / u.electron_volt, "quadrature"},
            {name, "compressibility", tp.p / tp.n_lambda3, "quadrature"},
        };
    }
    const auto tp = p.count("n-lambda3") ? eos::thermo_point_at_density(at(p, "n-lambda3"), m, q)
                                         : eos::thermo_point(at(p, "eta"), m, q);
    return {
        {name, "eta", tp.eta, p.count("n-lambda3") ? "quadrature" : "closed-form"},
        {name, "z", tp.z, p.count("n-lambda3") ? "quadrature" : "closed-form"},
        {name, "n_lambda3", tp.n_lambda3, "quadrature"},
        {name, "u", tp.u, "quadrature"},
        {name, "p", tp.p, "quadrature"},
        {name, "p_over_u", tp.p / tp.u, "quadrature"},
        {name, "compressibility", tp.p / tp.n_lambda3, "quadrature"},
    };
}

std::vector<Entry> virial_rows(const Context& ctx, const Point& p) {
    const auto& m = ctx.model;
    const std::string name = m.name();
    const double x = at(p, "n-lambda3");
    const auto series = eos::virial_pressure(x, m);
    const double exact = eos::compressibility(x, m, ctx.quadrature);
    const auto z_series = eos::virial_fugacity(x, m);
    const double z_exact = std::exp(eos::solve_fugacity(x, m, ctx.quadrature));
    return {
        {name, "B2", eos::second_virial_coefficient(m), "closed-form"},
        {name, "pv_over_nkt", series.value, "series"},
        {name, "pv_over_nkt", exact, "quadrature"},
        {name, "pv_gap", exact - series.value, "quadrature"},
        {name, "z", z_series.value, "series"},
        {name, "z", z_exact, "quadrature"},
        {name, "series_valid", static_cast<long long>(series.within_validity), "series"},
    };
}

std::vector<Entry> fermi_rows(const Context& ctx, const Point& p) {
    const auto& m = ctx.model;
    const std::string name = m.name();
    const double n = at(p, "density");
    if (ctx.units == Units::Si) {
        const auto& u = ctx.constants;
        // E_F = ħ²/(2m)·(6π²n/(g/a))^{2/3}; the reduced formula carries ħ = m = 1.
        const double ef = degenerate::fermi_energy(n, m) * u.hbar * u.hbar / u.electron_mass;
        return {
            {name, "fermi_energy_eV", ef / u.electron_volt, "closed-form"},
            {name, "fermi_temperature_K", ef / u.boltzmann, "closed-form"},
            {name, "energy_per_particle_eV", 0.6 * ef / u.electron_volt, "closed-form"},
            {name, "degeneracy_pressure_Pa", degenerate::degeneracy_pressure(n, ef), "closed-form"},
        };
    }
    const double ef = degenerate::fermi_energy(n, m);
    return {
        {name, "fermi_energy", ef, "closed-form"},
        {name, "fermi_temperature", ef, "closed-form"},
        {name, "energy_per_particle", degenerate::ground_state_energy(1.0, ef), "closed-form"},
        {name, "degeneracy_pressure", degenerate::degeneracy_pressure(n, ef), "closed-form"},
    };
}

std::vector<Entry> sommerfeld_rows(const Context& ctx, const Point& p) {
    const double a = p.count("blocking") ? at(p, "blocking") : ctx.model.a;
    const auto c = degenerate::sommerfeld_constants(a, ctx.quadrature);
    const std::string name = ctx.model.name();
    std::vector<Entry> rows = {
        {name, "A1", c.a1.quadrature, "quadrature"},
        {name, "A1", c.a1.closed_form, "closed-form"},
    };
    if (a == 2.0) rows.push_back({name, "A1", degenerate::kQuotedA1, "paper-constant"});
    rows.push_back({name, "A2", c.a2.quadrature, "quadrature"});
    rows.push_back({name, "A2", c.a2.closed_form, "closed-form"});
    if (a == 2.0) rows.push_back({name, "A2", degenerate::kQuotedA2, "paper-constant"});
    return rows;
}

std::vector<Entry> mu_rows(const Context& ctx, const Point& p) {
    const auto& m = ctx.model;
    const std::string name = m.name();
    const double t = at(p, "t");
    const auto mu = degenerate::chemical_potential_vs_T(t, m, ctx.quadrature);
    std::vector<Entry> rows = {
        {name, "mu_over_EF", mu.exact, "quadrature"},
        {name, "mu_over_EF", mu.series, "series"},
    };
    if (mu.series_quoted) rows.push_back({name, "mu_over_EF_printed_series", *mu.series_quoted, "paper-constant"});
    rows.push_back({name, "c1", degenerate::mu_series_first_order(m), "series"});
    rows.push_back({name, "c2", degenerate::mu_series_second_order(m), "series"});
    if (mu.series_quoted) rows.push_back({name, "c2_printed", degenerate::mu_series_second_order_quoted(), "paper-constant"});
    rows.push_back({name, "series_valid", static_cast<long long>(t < degenerate::kSeriesValidityLimit), "series"});
    return rows;
}

std::vector<Entry> heat_rows(const Context& ctx, const Point& p) {
    const std::string name = ctx.model.name();
    const auto c = degenerate::specific_heat(at(p, "t"), ctx.model, ctx.quadrature);
    std::vector<Entry> rows = {
        {name, "c", c.exact, "quadrature"},
        {name, "c_over_t", c.exact_coefficient, "quadrature"},
        {name, "c_over_t", c.series_coefficient, "series"},
    };
    if (c.quoted_formula_coefficient) {
        rows.push_back({name, "c_over_t_printed_formula", *c.quoted_formula_coefficient, "series"});
        rows.push_back({name, "c_over_t_quoted", degenerate::kQuotedExclusiveHeatCoefficient, "paper-constant"});
        rows.push_back({name, "c_over_t_quoted_fd", degenerate::kQuotedFermiGasHeatCoefficient, "paper-constant"});
    }
    return rows;
}

std::vector<Entry> pauli_rows(const Context& ctx, const Point& p) {
    const std::string name = ctx.model.name();
    double b = 0.0;
    std::vector<Entry> rows;
    if (ctx.units == Units::Si) {
        const auto& u = ctx.constants;
        b = u.bohr_magneton() * at(p, "field") / (u.boltzmann * at(p, "temperature"));
        rows.push_back({name, "b", b, "closed-form"});
    } else {
        b = at(p, "b");
    }
    const auto r = magnetism::pauli_magnetization(std::log(at(p, "z")), b, ctx.model, ctx.quadrature);
    rows.push_back({name, "n_up", r.n_up, "quadrature"});
    rows.push_back({name, "n_down", r.n_down, "quadrature"});
    rows.push_back({name, "magnetization", r.magnetization, "quadrature"});
    rows.push_back({name, "reduced_magnetization", r.reduced_magnetization, "quadrature"});
    rows.push_back({name, "reduced_magnetization", std::tanh(b), "closed-form"});
    return rows;
}

std::vector<Entry> landau_rows(const Context& ctx, const Point& p) {
    const auto& m = ctx.model;
    const std::string name = m.name();
    const double n = at(p, "n-lambda3");
    const double z = n / m.g;
    std::vector<Entry> rows;
    double s = 0.0;
    if (ctx.units == Units::Si) {
        const auto& u = ctx.constants;
        s = u.bohr_magneton() * at(p, "field") / (u.boltzmann * at(p, "temperature"));
        rows.push_back({name, "s", s, "closed-form"});
    } else {
        s = at(p, "s");
    }
    const auto sum = magnetism::landau_log_partition_density(z, s, m, ctx.quadrature);
    const double free = eos::pressure(std::log(z), m, ctx.quadrature);
    const auto chi = magnetism::landau_susceptibility(n, m, ctx.quadrature);
    rows.push_back({name, "log_partition_density", sum.value, "quadrature"});
    rows.push_back({name, "levels", static_cast<long long>(sum.levels), "quadrature"});
    rows.push_back({name, "field_factor", sum.value / free, "quadrature"});
    rows.push_back({name, "field_factor", magnetism::landau_field_factor(s), "closed-form"});
    rows.push_back({name, "field_factor", magnetism::landau_small_s_factor(s), "series"});
    rows.push_back({name, "chi_coefficient", chi.coefficient, "quadrature"});
    rows.push_back({name, "chi_coefficient", -1.0 / 3.0, "paper-constant"});
    return rows;
}

std::vector<Entry> star_rows(const Context& ctx, const Point&) {
    const auto den = parse_statistics(ctx.reference);
    const auto c = astro::chandrasekhar_comparison(ctx.model, den);
    const std::string pair = ctx.model.name() + "/" + den.name();
    const std::string name = ctx.model.name();
    const auto le15 = astro::lane_emden(1.5);
    const auto le3 = astro::lane_emden(3.0);
    return {
        {name, "K_NR", astro::eos_coefficient(ctx.model, astro::Regime::NonRelativistic).K, "closed-form"},
        {name, "K_UR", astro::eos_coefficient(ctx.model, astro::Regime::UltraRelativistic).K, "closed-form"},
        {"n=1.5", "lane_emden_xi1", le15.xi1, "ode"},
        {"n=1.5", "lane_emden_mass", le15.mass_integral, "ode"},
        {"n=3", "lane_emden_xi1", le3.xi1, "ode"},
        {"n=3", "lane_emden_mass", le3.mass_integral, "ode"},
        {pair, "K_NR_ratio", c.k_nr_ratio, "closed-form"},
        {pair, "K_UR_ratio", c.k_ur_ratio, "closed-form"},
        {pair, "chandrasekhar_ratio", c.mass_ratio, "ode"},
        {pair, "chandrasekhar_ratio", c.mass_ratio_closed_form, "closed-form"},
        {pair, "chandrasekhar_ratio", astro::kQuotedChandrasekharRatio, "paper-constant"},
        {pair, "nr_mass_ratio_equal_density", c.nr_mass_ratio_fixed_density, "ode"},
        {pair, "nr_radius_ratio_equal_mass", c.nr_radius_ratio_fixed_mass, "closed-form"},
    };
}

std::vector<Entry> oracle_rows(const Context& ctx, const Point& p) {
    const double levels_d = at(p, "levels");
    const double samples_d = at(p, "samples");
    if (!(levels_d >= 1.0) || levels_d != std::floor(levels_d))
        throw DomainError("oracle: --levels must be a positive integer");
    if (!(samples_d >= 1.0) || samples_d != std::floor(samples_d))
        throw DomainError("oracle: --samples must be a positive integer");
    const auto levels = static_cast<std::size_t>(levels_d);
    const auto samples = static_cast<std::size_t>(samples_d);
    const double z = at(p, "z");
    const std::string name = ctx.model.name();

    std::mt19937_64 rng(ctx.seed);
    std::vector<double> energies(levels);
    for (auto& e : energies) e = 5.0 * std::generate_canonical<double, 53>(rng);
    const ensemble::LevelSystem sys(energies, ctx.model);

    const double product = ensemble::grand_partition_product(sys, z).value;
    const double enumerated = ensemble::grand_partition_enumerate(sys, z);
    std::vector<Entry> rows = {
        {name, "partition", product, "closed-form"},
        {name, "partition", enumerated, "enumeration"},
    };
    for (std::size_t k = 0; k < levels; ++k) {
        const std::string tag = "level" + std::to_string(k) + ".";
        const auto mc = ensemble::mc_occupancy(energies[k], z, ctx.model, samples, ctx.seed, k);
        rows.push_back({name, tag + "energy", energies[k], "input"});
        rows.push_back({name, tag + "occupancy", occupation(energies[k] - std::log(z), ctx.model), "closed-form"});
        rows.push_back({name, tag + "occupancy", ensemble::mean_occupancy_enumerate(sys, z, k), "enumeration"});
        rows.push_back({name, tag + "occupancy", mc.mean, "monte-carlo"});
        rows.push_back({name, tag + "standard_error", mc.standard_error, "monte-carlo"});
    }
    return rows;
}

std::vector<Entry> compare_rows(const Context& ctx, const Point& p) {
    const auto want = [&](const char* g) { return ctx.group == "all" || ctx.group == g; };
    std::vector<Entry> rows;
    for (const auto& m : {OccupancyModel::exclusive(), OccupancyModel::standard_fd(), OccupancyModel::boltzmann()}) {
        const std::string name = m.name();
        if (want("occupation")) {
            rows.push_back({name, "f", occupation(at(p, "x"), m), "closed-form"});
            if (m.is_quantum()) rows.push_back({name, "step_height", m.step_height(), "closed-form"});
        }
        if (want("virial")) {
            const double x = at(p, "n-lambda3");
            rows.push_back({name, "B2", eos::second_virial_coefficient(m), "closed-form"});
            rows.push_back({name, "pv_over_nkt", eos::virial_pressure(x, m).value, "series"});
            rows.push_back({name, "pv_over_nkt", eos::compressibility(x, m, ctx.quadrature), "quadrature"});
        }
        if (!m.is_quantum()) continue;
        if (want("fermi")) {
            rows.push_back({name, "fermi_energy", degenerate::fermi_energy(at(p, "density"), m), "closed-form"});
        }
        if (want("sommerfeld")) {
            rows.push_back({name, "A1", degenerate::sommerfeld_closed_form(1, m.a), "closed-form"});
            rows.push_back({name, "A2", degenerate::sommerfeld_closed_form(2, m.a), "closed-form"});
        }
        if (want("mu")) {
            rows.push_back({name, "mu_c1", degenerate::mu_series_first_order(m), "series"});
            rows.push_back({name, "mu_c2", degenerate::mu_series_second_order(m), "series"});
        }
        if (want("heat")) {
            rows.push_back({name, "heat_coefficient", degenerate::specific_heat_series_coefficient(m), "series"});
            rows.push_back({name, "heat_coefficient",
                            degenerate::specific_heat(at(p, "t"), m, ctx.quadrature).exact_coefficient, "quadrature"});
        }
        if (want("star")) {
            rows.push_back({name, "K_NR", astro::eos_coefficient(m, astro::Regime::NonRelativistic).K, "closed-form"});
            rows.push_back({name, "K_UR", astro::eos_coefficient(m, astro::Regime::UltraRelativistic).K, "closed-form"});
        }
    }
    return rows;
}

} // namespace

const std::vector<Command>& commands() {
    static const std::vector<Command> all = {
        {"occupation", "occupation law f = g/(e^x + a)",
         {{"x", {-2, -1, 0, 1, 2}, "beta*(epsilon - mu)"}},
         occupation_rows},
        {"eos", "density, energy and pressure at given eta or n*lambda^3",
         {{"eta", {0}, "beta*mu", P::Reduced},
          {"n-lambda3", {}, "degeneracy parameter (solves for eta)", P::Reduced, "eta"},
          {"temperature", {300}, "temperature [K]", P::Si},
          {"density", {1e28}, "electron density [m^-3]", P::Si}},
         eos_rows},
        {"virial", "two-term virial series against exact quadrature",
         {{"n-lambda3", {0.01, 0.05, 0.1, 0.2}, "degeneracy parameter"}},
         virial_rows},
        {"fermi", "Fermi energy, ground-state energy and degeneracy pressure",
         {{"density", {1}, "particle density (reduced, or m^-3 with --units si)", P::Reduced},
          {"density", {1e28}, "particle density (reduced, or m^-3 with --units si)", P::Si}},
         fermi_rows},
        {"sommerfeld", "Sommerfeld moment constants A1, A2",
         {{"blocking", {}, "blocking parameter a (default: from --statistics)"}},
         sommerfeld_rows},
        {"mu-of-t", "chemical potential at fixed density, exact vs series",
         {{"t", {0.01, 0.02, 0.05, 0.1, 0.2}, "k_B T / E_F"}},
         mu_rows},
        {"heat-capacity", "specific heat per particle, exact vs series",
         {{"t", {0.005, 0.01, 0.02, 0.05}, "k_B T / E_F"}},
         heat_rows},
        {"pauli", "spin populations and magnetization",
         {{"z", {1e-4}, "fugacity"},
          {"b", {0.1, 0.3, 1.0}, "mu_B B / k_B T", P::Reduced},
          {"field", {1}, "magnetic field [T]", P::Si},
          {"temperature", {1}, "temperature [K]", P::Si}},
         pauli_rows},
        {"landau", "Landau-level partition sum and diamagnetic susceptibility",
         {{"n-lambda3", {2e-4}, "degeneracy parameter (<= 0.1)"},
          {"s", {0.5, 1, 2}, "hbar omega_c / (2 k_B T)", P::Reduced},
          {"field", {1}, "magnetic field [T]", P::Si},
          {"temperature", {1}, "temperature [K]", P::Si}},
         landau_rows},
        {"star", "polytrope constants and limiting-mass ratios", {}, star_rows},
        {"oracle", "enumeration and Monte Carlo checks on a random level system",
         {{"levels", {6}, "number of levels", P::Both, "", true},
          {"z", {0.7}, "fugacity"},
          {"samples", {100000}, "Monte Carlo samples per level", P::Both, "", true}},
         oracle_rows},
        {"compare", "quantities side by side for exclusive, fd and boltzmann",
         {{"x", {0}, "beta*(epsilon - mu) for occupation"},
          {"n-lambda3", {0.1}, "degeneracy parameter for virial"},
          {"density", {1}, "reduced density for the Fermi energy"},
          {"t", {0.01}, "k_B T / E_F for the heat coefficient"}},
         compare_rows},
    };
    return all;
}

} // namespace xfermi::cli
