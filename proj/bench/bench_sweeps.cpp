// Serial reference vs OpenMP kernels for the exhaustive sweeps.

#include <benchmark/benchmark.h>

#include "hwz/curves.hpp"
#include "hwz/sweep.hpp"

using hwz::sweep::Exec;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(1) ? Exec::Parallel : Exec::Serial; }

void BM_OracleSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hwz::sweep::oracle_sweep(state.range(0), exec_of(state)));
}

void BM_Labels2(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hwz::sweep::labels2(state.range(0), exec_of(state)));
}

void BM_Label3Census(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hwz::sweep::label3_census(state.range(0), exec_of(state)));
}

void BM_TraceProfile(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hwz::curves::integrate_profile(1, 2, 1, 0.0, state.range(0)));
}

}  // namespace

BENCHMARK(BM_OracleSweep)->ArgsProduct({{6, 10}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Labels2)->ArgsProduct({{10, 20}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Label3Census)->ArgsProduct({{6, 8}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_TraceProfile)->Arg(1000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
