#include <benchmark/benchmark.h>

#include "begdob/region.hpp"
#include "begdob/specification.hpp"
#include "begdob/verify.hpp"

namespace {

void BM_ExactMaxTV(benchmark::State& state) {
    const begdob::ModelParams params{.x = -4, .y = 0.5, .beta = 1.0, .d = static_cast<int>(state.range(0))};
    for (auto _ : state) benchmark::DoNotOptimize(begdob::exact_max_tv(params));
    state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * begdob::completion_count(params.d)));
}
BENCHMARK(BM_ExactMaxTV)->DenseRange(1, 4);

void BM_ComputeTd(benchmark::State& state) {
    const int d = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(begdob::compute_t_d(d));
}
BENCHMARK(BM_ComputeTd)->Arg(2)->Arg(3)->Arg(7);

void BM_RunSweep(benchmark::State& state) {
    const auto spec = begdob::default_certification_spec(2, 5);
    const auto workers = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(begdob::run_sweep(spec, workers));
}
BENCHMARK(BM_RunSweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
