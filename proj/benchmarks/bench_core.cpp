// Timings for the hot paths: Groebner-backed searches, fixed rings and the
// enveloping algebra dimension count.

#include <benchmark/benchmark.h>

#include "pwb/envelope.hpp"
#include "pwb/families.hpp"
#include "pwb/fixed.hpp"
#include "pwb/symmetry.hpp"

using namespace pwb;

static void BM_CycloMultiply(benchmark::State& state) {
  Cyclo a = Cyclo::zeta(12) + Cyclo(3), b = Cyclo::zeta(12, 5) - Cyclo(2);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CycloMultiply);

static void BM_NormalFindJacobian(benchmark::State& state) {
  auto a = jacobian_fpq(Cyclo(-1), Cyclo(1));
  for (auto _ : state) benchmark::DoNotOptimize(normal_find_deg1(a));
}
BENCHMARK(BM_NormalFindJacobian)->Unit(benchmark::kMillisecond);

static void BM_FindReflectionsQuantum2(benchmark::State& state) {
  auto a = quantum_matrices(2);
  for (auto _ : state) benchmark::DoNotOptimize(find_reflections(a));
}
BENCHMARK(BM_FindReflectionsQuantum2)->Unit(benchmark::kMillisecond);

static void BM_FixedGroupJacobian(benchmark::State& state) {
  auto a = jacobian_fpq(Cyclo(0), Cyclo(1));
  auto g = group_closure({GradedMap(Matrix::diagonal({Cyclo::zeta(3), Cyclo(1), Cyclo(1)}))});
  for (auto _ : state) benchmark::DoNotOptimize(fixed_group(a, g));
}
BENCHMARK(BM_FixedGroupJacobian)->Unit(benchmark::kMillisecond);

static void BM_EnvelopeDims(benchmark::State& state) {
  auto a = homogenized_weyl(1);
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(envelope_dims(a, d));
}
BENCHMARK(BM_EnvelopeDims)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
