#include <benchmark/benchmark.h>

#include <phasesfs/blockcounting.hpp>
#include <phasesfs/estimators.hpp>
#include <phasesfs/intweight.hpp>
#include <phasesfs/inversion.hpp>
#include <phasesfs/linalg.hpp>
#include <phasesfs/sfs.hpp>
#include <phasesfs/simulate.hpp>

using namespace phasesfs;

static void BM_BuildModel(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_model(n));
    }
    state.SetLabel(std::to_string(state_count(n)) + " states");
}
BENCHMARK(BM_BuildModel)->Arg(10)->Arg(15)->Arg(20)->Arg(25)->Arg(30);

static void BM_MatrixExponential(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const BlockCountingModel model = build_model(n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(matrix_exponential(model.T, 1.0));
    }
    state.SetLabel(std::to_string(model.size()) + "x" +
                   std::to_string(model.size()));
}
BENCHMARK(BM_MatrixExponential)->Arg(8)->Arg(12)->Arg(16)->Arg(20);

static void BM_CountPmfTable(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const SfsModel sm = make_sfs_model(n, 1.0);
    for (auto _ : state) {
        const DiscPhaseType law = count_law(sm, 1);
        benchmark::DoNotOptimize(law.statistic_pmf_table(100));
    }
}
BENCHMARK(BM_CountPmfTable)->Arg(6)->Arg(10)->Arg(14);

static void BM_IntWeightPmf(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const SfsModel sm = make_sfs_model(n, 1.0);
    std::vector<long> c;
    for (int i = 1; i < n; ++i) {
        c.push_back(i * (n - i));  // pairwise-difference weights
    }
    for (auto _ : state) {
        const IntWeightedLaw law = build_intweight_law(sm, c);
        benchmark::DoNotOptimize(law.pmf_table(50));
    }
}
BENCHMARK(BM_IntWeightPmf)->Arg(4)->Arg(6)->Arg(8);

static void BM_CharacteristicFunction(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const SfsModel sm = make_sfs_model(n, 1.0);
    const RealVector c = classical_coefficients("taj_D", n);
    double t = 0.1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(characteristic_function(sm, c, t));
        t += 0.05;
    }
}
BENCHMARK(BM_CharacteristicFunction)->Arg(4)->Arg(8)->Arg(12);

static void BM_InvertCdf(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const SfsModel sm = make_sfs_model(n, 1.0);
    const RealVector c = classical_coefficients("taj_D", n);
    InversionGrid grid = default_grid(sm, c);
    grid.H = 2048;  // same span, coarser lattice: a quick-look table
    for (auto _ : state) {
        benchmark::DoNotOptimize(invert_cdf(sm, c, grid));
    }
}
BENCHMARK(BM_InvertCdf)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_SimulateSfs(benchmark::State& state) {
    const BlockCountingModel model = build_model(8);
    SimConfig cfg;
    cfg.n = 8;
    cfg.theta = 1.0;
    cfg.replicates = state.range(0);
    cfg.seed = 7;
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate_sfs(model, cfg));
    }
    state.SetItemsProcessed(state.iterations() * cfg.replicates);
}
BENCHMARK(BM_SimulateSfs)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
