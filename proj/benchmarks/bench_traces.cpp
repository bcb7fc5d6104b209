#include <benchmark/benchmark.h>

#include "rtfcheck/permchar/partition.hpp"
#include "rtfcheck/tensorrep/tensorrep.hpp"

using namespace rtfcheck::tensorrep;
using rtfcheck::permchar::CycleType;

static void BM_StructuredTrace(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto classes = rtfcheck::permchar::partitions_of(n);
  for (auto _ : state) {
    for (const auto& p : classes) benchmark::DoNotOptimize(structured_trace(n, 6, CycleType(p)));
  }
}
BENCHMARK(BM_StructuredTrace)->DenseRange(2, 8, 2);

static void BM_BruteTrace(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto classes = rtfcheck::permchar::partitions_of(n);
  for (auto _ : state) {
    const BruteTracer tracer(n, 6);
    for (const auto& p : classes) benchmark::DoNotOptimize(tracer.trace(6, CycleType(p)));
  }
}
BENCHMARK(BM_BruteTrace)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_IsotypicProjector(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(isotypic_projector(rtfcheck::permchar::two_row(n, n - 1), n));
}
BENCHMARK(BM_IsotypicProjector)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_IsotypicCharpoly(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (int k = (n + 1) / 2; k <= n; ++k) benchmark::DoNotOptimize(isotypic_charpoly(n, k));
  }
}
BENCHMARK(BM_IsotypicCharpoly)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);
