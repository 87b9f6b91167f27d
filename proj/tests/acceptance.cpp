// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on failure.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "frozen_values.hpp"
#include "xfermi/astro.hpp"
#include "xfermi/cli.hpp"
#include "xfermi/degenerate.hpp"
#include "xfermi/ensemble.hpp"
#include "xfermi/eos.hpp"
#include "xfermi/magnetism.hpp"
#include "xfermi/numerics.hpp"

using namespace xfermi;

namespace {

// Same default the CLI uses.
constexpr std::uint64_t kSeed = 20240611;
constexpr double kPi = std::numbers::pi;
const auto kExcl = OccupancyModel::exclusive();
const auto kFd = OccupancyModel::standard_fd();
const double kA1 = std::log(2.0) / 2.0;
const double kA2 = (std::log(2.0) * std::log(2.0) + kPi * kPi / 3.0) / 2.0;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

double rel(double a, double b) { return std::abs(a / b - 1.0); }

Outcome foundation() {
    Outcome o;
    std::mt19937_64 rng(1);
    std::uniform_int_distribution<int> nlev(1, 8);
    std::uniform_real_distribution<double> e(0.0, 5.0), zd(0.1, 2.0);
    double worst_z = 0.0, worst_f = 0.0;
    for (int i = 0; i < 100; ++i) {
        std::vector<double> levels(static_cast<std::size_t>(nlev(rng)));
        for (auto& x : levels) x = e(rng);
        const double z = zd(rng);
        for (const auto& m : {kExcl, kFd}) {
            const ensemble::LevelSystem sys(levels, m);
            worst_z = std::max(worst_z, rel(ensemble::grand_partition_enumerate(sys, z),
                                            ensemble::grand_partition_product(sys, z).value));
            for (std::size_t k = 0; k < levels.size(); ++k)
                worst_f = std::max(worst_f, rel(ensemble::mean_occupancy_enumerate(sys, z, k),
                                                occupation(levels[k] - std::log(z), m)));
        }
    }
    o.require(worst_z <= 1e-12, "partition");
    o.require(worst_f <= 1e-12, "occupancy");
    o.detail << "200 systems, max rel gap Z " << worst_z << ", f " << worst_f;
    return o;
}

Outcome monte_carlo() {
    Outcome o;
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> e(0.0, 5.0), zd(0.1, 2.0);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
        const double eps = e(rng), z = zd(rng);
        const auto& m = i % 2 ? kFd : kExcl;
        const auto r = ensemble::mc_occupancy(eps, z, m, 1'000'000, kSeed, static_cast<std::uint64_t>(i));
        worst = std::max(worst, std::abs(r.mean - occupation(eps - std::log(z), m)) / r.standard_error);
    }
    o.require(worst <= 3.0, "3 standard errors");
    o.detail << "20 points x 1e6 samples, worst deviation " << worst << " sigma";
    return o;
}

Outcome equation_of_state() {
    Outcome o;
    double worst = 0.0;
    for (const auto& m : {kExcl, kFd})
        for (double eta : {-5.0, -1.0, 0.0, 2.0, 5.0, 10.0})
            worst = std::max(worst, rel(eos::pressure(eta, m), 2.0 / 3.0 * eos::energy_density(eta, m)));
    o.require(worst <= 1e-8, "p = 2u/3");
    o.detail << "max |p/(2u/3) - 1| = " << worst;
    return o;
}

Outcome virial() {
    Outcome o;
    double worst = 0.0;
    for (double x : {0.01, 0.05, 0.1, 0.2}) {
        const double exact = eos::compressibility(x, kExcl);
        const double gap = std::abs(exact - (1.0 + x / (4.0 * std::sqrt(2.0))));
        worst = std::max(worst, gap / (x * x));
        o.require(exact > eos::compressibility(x, kFd), "exclusive > fd at " + std::to_string(x));
    }
    o.require(worst <= 0.5, "remainder <= 0.5 x^2");
    o.detail << "max |exact - series|/x^2 = " << worst << "; exclusive above fd at all 4 points";
    return o;
}

Outcome fermi_scale() {
    Outcome o;
    const double ratio = degenerate::fermi_energy(0.37, kExcl) / degenerate::fermi_energy(0.37, kFd);
    o.require(std::abs(ratio - std::cbrt(4.0)) <= 1e-12, "E_F ratio");

    // Fill the T = 0 step of D(ε) = (g/a)·b·ε^{1/2} and integrate N and E directly.
    double worst = 0.0;
    for (const auto& m : {kExcl, kFd}) {
        const double n = 2.5;
        const double ef = degenerate::fermi_energy(n, m);
        numerics::QuadratureSpec tight;
        tight.relative_tolerance = 1e-14;
        const double b = m.step_height() * dos_coefficient(1.0);
        const double N = numerics::integrate([&](double e) { return b * std::sqrt(e); }, 0.0, ef, tight).value;
        const double E = numerics::integrate([&](double e) { return b * e * std::sqrt(e); }, 0.0, ef, tight).value;
        worst = std::max(worst, rel(N, n));
        worst = std::max(worst, rel(degenerate::ground_state_energy(N, ef), E));
        worst = std::max(worst, rel(degenerate::degeneracy_pressure(N, ef), 2.0 / 3.0 * E));
    }
    o.require(worst <= 1e-12, "E = 3/5 N E_F and P = 2/5 n E_F");

    double low_t = 0.0;
    for (const auto& m : {kExcl, kFd}) {
        const double t = 0.01;
        const double eta = degenerate::eta_at_fixed_density(t, m);
        low_t = std::max(low_t, rel(t * eos::pressure(eta, m) / eos::density(eta, m), 0.4));
    }
    o.require(low_t <= 0.01, "low-T pressure");
    o.detail << "E_F ratio - 2^(2/3) = " << ratio - std::cbrt(4.0) << "; identities " << worst
             << "; P(T/T_F=0.01)/P_deg - 1 = " << low_t;
    return o;
}

Outcome sommerfeld() {
    Outcome o;
    const auto c = degenerate::sommerfeld_constants(2.0);
    o.require(std::abs(c.a1.quadrature - 0.34657) <= 1e-5, "A1 quoted");
    o.require(std::abs(c.a2.quadrature - 1.88516) <= 1e-5, "A2 quoted");
    o.require(std::abs(c.a1.quadrature - std::log(2.0) / 2.0) <= 1e-10, "A1 closed form");
    o.require(std::abs(c.a2.quadrature - kA2) <= 1e-10, "A2 closed form");
    o.detail.precision(12);
    o.detail << "A1 = " << c.a1.quadrature << ", A2 = " << c.a2.quadrature;
    return o;
}

Outcome chemical_potential() {
    Outcome o;
    std::vector<double> t, first, second;
    for (int i = 0; i <= 6; ++i) {
        const double ti = 0.005 + 0.0025 * i;
        const double mu = degenerate::chemical_potential_vs_T(ti, kExcl).exact;
        t.push_back(ti);
        first.push_back((mu - 1.0) / ti);
        second.push_back((mu - 1.0 + 2.0 * kA1 * ti) / (ti * ti));
    }
    const double slope = numerics::polyfit(t, first, 2)[0];
    const double c2 = numerics::polyfit(t, second, 1)[0];
    o.require(rel(slope, -2.0 * kA1) <= 0.005, "slope");
    o.require(rel(c2, kA1 * kA1 - kA2 / 2.0) <= 0.02, "second order");
    o.require(std::abs(c2 - frozen::kMuSecondOrderIntercept) <= 1e-3, "inversion oracle");

    bool monotone = true;
    double prev = 1.0;
    for (int i = 1; i <= 30; ++i) {
        const double mu = degenerate::chemical_potential_vs_T(0.3 * i / 31.0, kExcl).exact;
        monotone = monotone && mu < prev;
        prev = mu;
    }
    o.require(monotone, "strictly decreasing");
    o.detail << "slope " << slope << " (-2A1 = " << -2.0 * kA1 << "), c2 " << c2 << " (A1^2 - A2/2 = "
             << kA1 * kA1 - kA2 / 2.0 << ", oracle " << frozen::kMuSecondOrderIntercept << ", printed "
             << degenerate::mu_series_second_order_quoted() << " reported only)";
    return o;
}

Outcome specific_heat() {
    Outcome o;
    const double target = kPi * kPi / 2.0;
    double worst = 0.0;
    for (const auto& m : {kExcl, kFd})
        for (double t : {0.005, 0.01, 0.015, 0.02})
            worst = std::max(worst, rel(degenerate::specific_heat(t, m).exact_coefficient, target));
    o.require(worst <= 0.01, "c/t within 1% of pi^2/2");
    o.detail << "max |c/t / (pi^2/2) - 1| = " << worst << " (exclusive and fd); printed "
             << degenerate::kQuotedExclusiveHeatCoefficient << " emitted as comparison only";
    return o;
}

Outcome pauli() {
    Outcome o;
    const double eta = std::log(1e-4);
    double worst = 0.0, model_gap = 0.0;
    bool odd = true;
    for (double b : {0.1, 0.3, 1.0}) {
        const auto e = magnetism::pauli_magnetization(eta, b, kExcl);
        const auto f = magnetism::pauli_magnetization(eta, b, kFd);
        worst = std::max(worst, rel(e.reduced_magnetization, std::tanh(b)));
        worst = std::max(worst, rel(f.reduced_magnetization, std::tanh(b)));
        model_gap = std::max(model_gap, rel(e.reduced_magnetization, f.reduced_magnetization));
        for (const auto& m : {kExcl, kFd})
            odd = odd && magnetism::pauli_magnetization(eta, -b, m).magnetization ==
                             -magnetism::pauli_magnetization(eta, b, m).magnetization;
    }
    o.require(worst <= 1e-3, "tanh law");
    o.require(odd, "odd in B");
    o.require(model_gap <= 1e-3, "model independence");
    o.detail << "max tanh deviation " << worst << ", exclusive vs fd " << model_gap << ", odd exactly";
    return o;
}

Outcome landau() {
    Outcome o;
    double worst = 0.0;
    for (const auto& m : {kExcl, kFd}) {
        const auto chi = magnetism::landau_susceptibility(m.g * 1e-4, m);
        worst = std::max(worst, rel(chi.coefficient, -1.0 / 3.0));
        o.detail << m.name() << " chi " << chi.coefficient << "; ";
    }
    double geo = 0.0;
    for (double s : {0.5, 1.0, 2.0}) geo = std::max(geo, rel(magnetism::landau_linearized_level_sum(s), 0.5 / std::sinh(s)));
    o.require(worst <= 0.01, "chi = -1/3");
    o.require(geo <= 1e-10, "geometric level sum");
    o.detail << "level sum vs 1/(2 sinh s) " << geo;
    return o;
}

Outcome astro_pipeline() {
    Outcome o;
    const auto n0 = astro::lane_emden(0.0);
    const auto n1 = astro::lane_emden(1.0);
    o.require(std::abs(n0.xi1 - std::sqrt(6.0)) <= 1e-6 && std::abs(n0.mass_integral - std::pow(6.0, 1.5) / 3.0) <= 1e-6,
              "n = 0");
    o.require(std::abs(n1.xi1 - kPi) <= 1e-6 && std::abs(n1.mass_integral - kPi) <= 1e-6, "n = 1");
    const auto n3 = astro::lane_emden(3.0);
    const auto fine = astro::lane_emden(3.0, 1e-4);
    o.require(std::abs(n3.xi1 - fine.xi1) <= 1e-5 && std::abs(n3.mass_integral - fine.mass_integral) <= 1e-5,
              "n = 3 vs finer step");

    const auto ur = astro::eos_coefficient(kExcl, astro::Regime::UltraRelativistic);
    double spread = 0.0;
    const double m0 = astro::white_dwarf_mass(ur, 1.0);
    for (double rho : {10.0, 100.0, 1e3, 1e4}) spread = std::max(spread, rel(astro::white_dwarf_mass(ur, rho), m0));
    o.require(spread <= 1e-8, "gamma = 4/3 mass independent of density");

    const auto c = astro::chandrasekhar_comparison();
    o.require(std::abs(c.k_nr_ratio - std::cbrt(4.0)) <= 1e-10, "K_NR ratio");
    o.require(std::abs(c.k_ur_ratio - std::cbrt(2.0)) <= 1e-10, "K_UR ratio");
    o.require(std::abs(c.mass_ratio - std::sqrt(2.0)) <= 1e-10, "mass ratio");

    std::ostringstream out, err;
    const int code = cli::run({"star", "--format", "csv"}, out, err);
    const bool quoted = out.str().find(",chandrasekhar_ratio,1.6,paper-constant") != std::string::npos;
    o.require(code == 0 && quoted, "1.6 in star report");
    o.detail.precision(10);
    o.detail << "xi1(3) " << n3.xi1 << ", mass(3) " << n3.mass_integral << ", ratio " << c.mass_ratio
             << ", density spread " << spread << ", star report carries 1.6";
    return o;
}

Outcome determinism() {
    Outcome o;
    const std::vector<std::vector<std::string>> runs = {
        {"occupation"}, {"eos"}, {"virial"}, {"fermi"}, {"sommerfeld"}, {"mu-of-t"}, {"heat-capacity"},
        {"pauli"}, {"landau"}, {"star"}, {"oracle", "--seed", "99"}, {"compare"},
        {"--format", "json", "oracle", "--sweep", "z:0.2:1.5:4", "--samples", "20000"},
        {"--format", "csv", "--units", "si", "eos", "--sweep", "temperature:100:1000:4:log"},
    };
    int identical = 0;
    for (const auto& args : runs) {
        std::ostringstream a, b, ea, eb;
        const int ca = cli::run(args, a, ea);
        const int cb = cli::run(args, b, eb);
        if (ca == 0 && cb == 0 && a.str() == b.str() && !a.str().empty()) ++identical;
        else o.require(false, args.front());
    }
    std::ostringstream serial, parallel, e1, e2;
    cli::run({"--format", "csv", "--jobs", "1", "oracle", "--sweep", "z:0.2:1.5:4", "--samples", "20000"}, serial, e1);
    cli::run({"--format", "csv", "--jobs", "4", "oracle", "--sweep", "z:0.2:1.5:4", "--samples", "20000"}, parallel, e2);
    o.require(serial.str() == parallel.str(), "--jobs changes output");
    o.detail << identical << "/" << runs.size() << " invocations byte-identical; --jobs 1 vs 4 identical";
    return o;
}

} // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"foundation equivalence", foundation},
        {"monte carlo occupation law", monte_carlo},
        {"equation of state p = 2u/3", equation_of_state},
        {"virial series and pressure ordering", virial},
        {"fermi scale and degeneracy pressure", fermi_scale},
        {"sommerfeld constants", sommerfeld},
        {"chemical potential vs temperature", chemical_potential},
        {"specific heat coefficient", specific_heat},
        {"pauli paramagnetism", pauli},
        {"landau diamagnetism", landau},
        {"polytropes and limiting-mass ratio", astro_pipeline},
        {"cli determinism", determinism},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << "exception: " << e.what();
        }
        if (!o.pass) ++failures;
        std::printf("[%s] AC%-2zu %-36s %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                    o.detail.str().c_str());
    }
    std::printf("%zu/%zu acceptance criteria passed\n", criteria.size() - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
