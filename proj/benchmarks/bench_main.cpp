#include <benchmark/benchmark.h>

#include "sunbranch/branching.hpp"
#include "sunbranch/gelfand_tsetlin.hpp"
#include "sunbranch/kernels.hpp"
#include "sunbranch/minor_mc.hpp"
#include "sunbranch/spectral.hpp"

using namespace sunbranch;

static void BM_Kbar(benchmark::State& state) {
    const RealSpectrum alpha({9, 6, 4, 0});
    const RealSpectrum gamma({5, 2, 0});
    for (auto _ : state) {
        benchmark::DoNotOptimize(kbar(alpha, gamma));
    }
}
BENCHMARK(BM_Kbar);

static void BM_Kbar4Closed(benchmark::State& state) {
    const RealSpectrum alpha({9, 6, 4, 0});
    const RealSpectrum gamma({5, 2, 0});
    for (auto _ : state) {
        benchmark::DoNotOptimize(kbar4_closed(alpha, gamma));
    }
}
BENCHMARK(BM_Kbar4Closed);

static void BM_BranchSu(benchmark::State& state) {
    const YoungWeight alpha({6, 4, 3, 0});
    for (auto _ : state) {
        benchmark::DoNotOptimize(branch_su(alpha));
    }
}
BENCHMARK(BM_BranchSu);

static void BM_BranchSuOracle(benchmark::State& state) {
    const YoungWeight alpha({6, 4, 3, 0});
    for (auto _ : state) {
        benchmark::DoNotOptimize(branch_su_oracle(alpha));
    }
}
BENCHMARK(BM_BranchSuOracle);

static void BM_GtCount(benchmark::State& state) {
    const YoungWeight alpha({12, 8, 5, 2, 0});
    for (auto _ : state) {
        benchmark::DoNotOptimize(gt_count(alpha));
    }
}
BENCHMARK(BM_GtCount);

static void BM_SchurPoly(benchmark::State& state) {
    const YoungWeight lambda({6, 4, 3, 0});
    const ComplexVector x{{0.9, 0.1}, {-0.4, 0.8}, {0.2, -0.6}, {1.1, 0.3}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(schur_poly(lambda, x));
    }
}
BENCHMARK(BM_SchurPoly);

static void BM_MinorSample(benchmark::State& state) {
    const RealSpectrum alpha({4, 1, 0});
    const auto count = static_cast<std::int64_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_minor_spectrum(alpha, count, 42));
    }
    state.SetItemsProcessed(state.iterations() * count);
}
BENCHMARK(BM_MinorSample)->Arg(100)->Arg(1000);

BENCHMARK_MAIN();
