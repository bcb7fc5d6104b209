#include <benchmark/benchmark.h>

#include "rtfcheck/curves/shapes.hpp"
#include "rtfcheck/curves/zeta.hpp"
#include "rtfcheck/rtf/quadratic.hpp"

using rtfcheck::exactnum::BigInt;

static void BM_EnumerateShapes(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  const rtfcheck::curves::ZetaData z(3, {BigInt(1), BigInt(0), BigInt(6), BigInt(0), BigInt(9)});
  const auto counts = rtfcheck::curves::closed_point_counts(z, degree);
  for (auto _ : state) benchmark::DoNotOptimize(rtfcheck::curves::enumerate_shapes(counts, degree));
}
BENCHMARK(BM_EnumerateShapes)->DenseRange(2, 12, 2);

static void BM_OrbitCensus(benchmark::State& state) {
  const rtfcheck::rtf::QuadraticModel model(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(rtfcheck::rtf::orbit_census(model));
}
BENCHMARK(BM_OrbitCensus)->Arg(3)->Arg(5)->Arg(7)->Arg(11)->Unit(benchmark::kMillisecond);
