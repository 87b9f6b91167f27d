#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "xfermi/cli.hpp"

using xfermi::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(line);
    for (std::string p; std::getline(ss, p, sep);) parts.push_back(p);
    return parts;
}

struct Csv {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

Csv parse_csv(const std::string& text) {
    Csv csv;
    std::stringstream ss(text);
    for (std::string line; std::getline(ss, line);) {
        if (line.empty() || line[0] == '#') continue;
        if (csv.header.empty()) csv.header = split(line, ',');
        else csv.rows.push_back(split(line, ','));
    }
    return csv;
}

// value of the first row with the given quantity and provenance
double lookup(const Csv& csv, const std::string& model, const std::string& quantity, const std::string& provenance) {
    const auto col = [&](const std::string& name) {
        return static_cast<std::size_t>(std::find(csv.header.begin(), csv.header.end(), name) - csv.header.begin());
    };
    for (const auto& r : csv.rows)
        if (r[col("model")] == model && r[col("quantity")] == quantity && r[col("provenance")] == provenance)
            return std::stod(r[col("value")]);
    ADD_FAILURE() << "no row " << model << "/" << quantity << "/" << provenance;
    return std::nan("");
}

} // namespace

TEST(Cli, OccupationAtZero) {
    const auto r = invoke({"occupation", "--statistics", "exclusive", "--x", "0", "--format", "csv"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_NE(r.out.find("0,exclusive,f,0.6666666667,closed-form"), std::string::npos) << r.out;
    const auto table = invoke({"occupation", "--x", "0"});
    EXPECT_NE(table.out.find("0.666667"), std::string::npos);
}

TEST(Cli, SommerfeldRows) {
    const auto csv = parse_csv(invoke({"sommerfeld", "--format", "csv"}).out);
    EXPECT_NEAR(lookup(csv, "exclusive", "A1", "quadrature"), 0.3465736, 5e-8);
    EXPECT_NEAR(lookup(csv, "exclusive", "A1", "closed-form"), 0.3465736, 5e-8);
    EXPECT_EQ(lookup(csv, "exclusive", "A1", "paper-constant"), 0.34657);
    EXPECT_EQ(lookup(csv, "exclusive", "A2", "paper-constant"), 1.88516);
}

TEST(Cli, StarReport) {
    const auto r = invoke({"star"});
    ASSERT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("1.6 "), std::string::npos);
    const auto csv = parse_csv(invoke({"star", "--format", "csv"}).out);
    EXPECT_NEAR(lookup(csv, "exclusive/fd", "K_NR_ratio", "closed-form"), 1.5874011, 1e-7);
    EXPECT_NEAR(lookup(csv, "exclusive/fd", "chandrasekhar_ratio", "ode"), 1.4142136, 1e-7);
    EXPECT_EQ(lookup(csv, "exclusive/fd", "chandrasekhar_ratio", "paper-constant"), 1.6);
    const auto same = parse_csv(invoke({"star", "--statistics", "fd", "--format", "csv"}).out);
    EXPECT_NEAR(lookup(same, "fd/fd", "chandrasekhar_ratio", "ode"), 1.0, 1e-12);
}

TEST(Cli, CompareReproducesFreeElectronValues) {
    const auto csv = parse_csv(invoke({"compare", "--statistics", "fd", "--format", "csv"}).out);
    EXPECT_NEAR(lookup(csv, "fd", "B2", "closed-form"), std::pow(2.0, -3.5), 1e-10);
    EXPECT_NEAR(lookup(csv, "fd", "heat_coefficient", "series"), std::numbers::pi * std::numbers::pi / 2.0, 1e-9);
    EXPECT_NEAR(lookup(csv, "fd", "heat_coefficient", "quadrature") / (std::numbers::pi * std::numbers::pi / 2.0),
                1.0, 0.01);
    EXPECT_NEAR(lookup(csv, "exclusive", "B2", "closed-form"), 1.0 / (4.0 * std::sqrt(2.0)), 1e-10);
    EXPECT_EQ(lookup(csv, "boltzmann", "B2", "closed-form"), 0.0);
}

TEST(Cli, CsvAndJsonCarrySameNumbers) {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"virial"}, {"mu-of-t"}, {"pauli"}, {"oracle", "--samples", "2000"}, {"compare"}}) {
        auto csv_args = args;
        csv_args.insert(csv_args.end(), {"--format", "csv"});
        auto json_args = args;
        json_args.insert(json_args.end(), {"--format", "json"});
        const auto csv = parse_csv(invoke(csv_args).out);
        const auto doc = nlohmann::json::parse(invoke(json_args).out);
        ASSERT_EQ(doc["rows"].size(), csv.rows.size()) << args.front();
        for (std::size_t i = 0; i < csv.rows.size(); ++i) {
            for (std::size_t c = 0; c < csv.header.size(); ++c) {
                const auto& cell = doc["rows"][i][csv.header[c]];
                if (cell.is_string()) EXPECT_EQ(cell.get<std::string>(), csv.rows[i][c]);
                else EXPECT_EQ(cell.get<double>(), std::stod(csv.rows[i][c])) << args.front() << " " << csv.header[c];
            }
        }
        EXPECT_EQ(doc["meta"]["command"], args.front());
    }
}

TEST(Cli, OutputsAreNewlineTerminated) {
    for (const char* fmt : {"table", "csv", "json"}) {
        const auto r = invoke({"fermi", "--format", fmt});
        ASSERT_FALSE(r.out.empty());
        EXPECT_EQ(r.out.back(), '\n');
    }
}

TEST(Cli, MetaRecordsModelAndTolerances) {
    const auto doc = nlohmann::json::parse(invoke({"eos", "--rtol", "1e-9", "--format", "json"}).out);
    EXPECT_EQ(doc["meta"]["statistics"], "exclusive");
    EXPECT_EQ(doc["meta"]["g"], 2.0);
    EXPECT_EQ(doc["meta"]["a"], 2.0);
    EXPECT_EQ(doc["meta"]["rtol"], 1e-9);
    EXPECT_EQ(doc["meta"]["atol"], 1e-14);
    EXPECT_EQ(doc["meta"]["constants"], "reduced");
    for (const auto& row : doc["rows"]) EXPECT_TRUE(row.contains("provenance"));
}

TEST(Cli, Determinism) {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"oracle", "--seed", "3"}, {"heat-capacity"}, {"landau", "--format", "json"}}) {
        EXPECT_EQ(invoke(args).out, invoke(args).out);
    }
}

TEST(Cli, SeedFromEnvironmentAndFlagWins) {
    ::setenv("XFERMI_SEED", "11", 1);
    const auto env = invoke({"oracle", "--samples", "1000", "--format", "csv"});
    const auto flag = invoke({"oracle", "--samples", "1000", "--format", "csv", "--seed", "12"});
    ::unsetenv("XFERMI_SEED");
    const auto explicit11 = invoke({"oracle", "--samples", "1000", "--format", "csv", "--seed", "11"});
    EXPECT_NE(env.out.find("# seed: 11"), std::string::npos);
    EXPECT_NE(flag.out.find("# seed: 12"), std::string::npos);
    EXPECT_EQ(env.out, explicit11.out);
    ::setenv("XFERMI_SEED", "not-a-number", 1);
    EXPECT_EQ(invoke({"oracle"}).code, 1);
    ::unsetenv("XFERMI_SEED");
}

TEST(Cli, ConfigFileWithFlagOverride) {
    const std::string path = ::testing::TempDir() + "xfermi_cli_test.conf";
    {
        std::ofstream f(path);
        f << "# defaults\nstatistics = fd\nformat = csv\n[occupation]\nx = 1.5\n";
    }
    const auto from_file = invoke({"occupation", "--config", path});
    EXPECT_NE(from_file.out.find("1.5,fd,f,"), std::string::npos) << from_file.out;
    const auto overridden = invoke({"occupation", "--config", path, "--x", "0", "--statistics", "exclusive"});
    EXPECT_NE(overridden.out.find("0,exclusive,f,0.6666666667"), std::string::npos) << overridden.out;
    {
        std::ofstream f(path);
        f << "no_such_flag = 1\n";
    }
    EXPECT_EQ(invoke({"occupation", "--config", path}).code, 1);
    EXPECT_EQ(invoke({"occupation", "--config", path + ".missing"}).code, 1);
}

TEST(Cli, Sweep) {
    const auto csv = parse_csv(invoke({"occupation", "--sweep", "x:-1:1:5", "--format", "csv"}).out);
    ASSERT_EQ(csv.rows.size(), 5u);
    EXPECT_EQ(csv.rows.front()[0], "-1");
    EXPECT_EQ(csv.rows[2][0], "0");
    const auto logs = parse_csv(invoke({"virial", "--sweep", "n-lambda3:0.001:0.1:3:log", "--format", "csv"}).out);
    ASSERT_EQ(logs.rows.size(), 3u * 7u);
    EXPECT_EQ(logs.rows[7][0], "0.01");
}

TEST(Cli, JobsKeepRowOrder) {
    const std::vector<std::string> base = {"mu-of-t", "--sweep", "t:0.01:0.25:6", "--format", "csv"};
    auto parallel = base;
    parallel.insert(parallel.begin(), {"--jobs", "3"});
    EXPECT_EQ(invoke(base).out, invoke(parallel).out);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(invoke({}).code, 1);
    EXPECT_EQ(invoke({"nonsense"}).code, 1);
    EXPECT_EQ(invoke({"occupation", "--bogus"}).code, 1);
    EXPECT_EQ(invoke({"occupation", "--statistics", "bose"}).code, 1);
    EXPECT_EQ(invoke({"occupation", "--sweep", "x:0:1:1"}).code, 1);
    EXPECT_EQ(invoke({"occupation", "--sweep", "y:0:1:3"}).code, 1);
    EXPECT_EQ(invoke({"occupation", "--sweep", "x:0:1:3:cubic"}).code, 1);
    EXPECT_EQ(invoke({"occupation", "--sweep", "x:0:1:3", "--x", "2"}).code, 1);
    EXPECT_EQ(invoke({"eos", "--eta", "1", "--n-lambda3", "0.5"}).code, 1);
    EXPECT_EQ(invoke({"eos", "--units", "si", "--eta", "1"}).code, 1);
    EXPECT_EQ(invoke({"eos", "--rtol", "-1"}).code, 1);
    const auto help = invoke({"--help"});
    EXPECT_EQ(help.code, 0);
    EXPECT_NE(help.out.find("heat-capacity"), std::string::npos);
}

TEST(Cli, DomainErrorsExitOne) {
    const auto r = invoke({"fermi", "--statistics", "boltzmann"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("fermi_energy"), std::string::npos);
    EXPECT_EQ(invoke({"landau", "--n-lambda3", "0.5"}).code, 1);
    EXPECT_EQ(invoke({"oracle", "--statistics", "boltzmann"}).code, 1);
    EXPECT_EQ(invoke({"oracle", "--levels", "25"}).code, 1);
}

TEST(Cli, NumericalFailureExitTwo) {
    const auto r = invoke({"eos", "--max-subdivisions", "1", "--rtol", "1e-15"});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("integrate"), std::string::npos) << r.err;
    EXPECT_NE(r.err.find("rtol=1e-15"), std::string::npos) << r.err;
    EXPECT_TRUE(r.out.empty());
}

TEST(Cli, SiUnits) {
    const auto csv = parse_csv(invoke({"fermi", "--units", "si", "--statistics", "fd", "--format", "csv"}).out);
    // Free-electron gas at 10^28 m^-3: E_F ≈ 1.69 eV.
    EXPECT_NEAR(lookup(csv, "fd", "fermi_energy_eV", "closed-form"), 1.6925, 1e-3);
    const auto eos = parse_csv(invoke({"eos", "--units", "si", "--format", "csv"}).out);
    EXPECT_NEAR(lookup(eos, "exclusive", "thermal_wavelength_m", "closed-form"), 4.3034754e-9, 1e-15);
    const auto meta = invoke({"eos", "--units", "si"}).out;
    EXPECT_NE(meta.find("# constants: CODATA-2018"), std::string::npos);
}
