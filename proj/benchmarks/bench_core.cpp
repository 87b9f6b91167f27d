#include <benchmark/benchmark.h>

#include <vector>

#include "xfermi/astro.hpp"
#include "xfermi/degenerate.hpp"
#include "xfermi/ensemble.hpp"
#include "xfermi/eos.hpp"
#include "xfermi/magnetism.hpp"

using namespace xfermi;

namespace {

const auto kExcl = OccupancyModel::exclusive();

void BM_Density(benchmark::State& state) {
    const double eta = static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(eos::density(eta, kExcl));
}
BENCHMARK(BM_Density)->Arg(-5)->Arg(0)->Arg(20)->Arg(200);

void BM_SolveFugacity(benchmark::State& state) {
    const double n = state.range(0) / 100.0;
    for (auto _ : state) benchmark::DoNotOptimize(eos::solve_fugacity(n, kExcl));
}
BENCHMARK(BM_SolveFugacity)->Arg(1)->Arg(100)->Arg(10000);

void BM_SommerfeldConstants(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(degenerate::sommerfeld_constants(2.0));
}
BENCHMARK(BM_SommerfeldConstants);

void BM_ChemicalPotential(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(degenerate::chemical_potential_vs_T(0.01, kExcl));
}
BENCHMARK(BM_ChemicalPotential);

void BM_LandauSum(benchmark::State& state) {
    const double s = 1.0 / static_cast<double>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(magnetism::landau_log_partition_density(1e-4, s, kExcl));
}
BENCHMARK(BM_LandauSum)->Arg(1)->Arg(10)->Arg(40);

void BM_LandauSusceptibility(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(magnetism::landau_susceptibility(2e-4, kExcl));
}
BENCHMARK(BM_LandauSusceptibility)->Unit(benchmark::kMillisecond);

void BM_Enumeration(benchmark::State& state) {
    std::vector<double> e;
    for (int i = 0; i < state.range(0); ++i) e.push_back(0.25 * i);
    const ensemble::LevelSystem sys(e, kExcl);
    for (auto _ : state) benchmark::DoNotOptimize(ensemble::grand_partition_enumerate(sys, 0.7));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Enumeration)->DenseRange(4, 12, 4);

void BM_MonteCarlo(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(ensemble::mc_occupancy(0.5, 1.0, kExcl, static_cast<std::size_t>(state.range(0)), 1, 0));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_MonteCarlo)->Arg(100000);

void BM_LaneEmden(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(astro::lane_emden(3.0));
}
BENCHMARK(BM_LaneEmden);

} // namespace

// The distro benchmark_main archive carries LTO bytecode from another GCC build.
BENCHMARK_MAIN();
