#include <benchmark/benchmark.h>

#include "foliage/assembly.hpp"
#include "foliage/cohomology.hpp"
#include "foliage/exterior.hpp"
#include "foliage/random_forms.hpp"

using namespace foliage;

static void BM_Wedge(benchmark::State& state) {
  const FoliationModel m = build_model(ModelName::product_j1);
  const int bandwidth = static_cast<int>(state.range(0));
  const BasicForm a = random_form(m, RandomFormSpec{1, bandwidth, {}, 1.0, false});
  const BasicForm b = random_form(m, RandomFormSpec{2, bandwidth, {}, 1.0, false});
  for (auto _ : state) benchmark::DoNotOptimize(wedge(a, b));
}
BENCHMARK(BM_Wedge)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMicrosecond);

static void BM_AssembleDeltaB(benchmark::State& state) {
  const FoliationModel m = build_model(ModelName::product_j1);
  const int K = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(laplacian(m, OperatorKind::Delta_B, K, Component::degree(2)));
}
BENCHMARK(BM_AssembleDeltaB)->Arg(1)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_BettiTable(benchmark::State& state) {
  const FoliationModel m = build_model(state.range(0) == 0 ? ModelName::carriere : ModelName::product_j1);
  const int K = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(betti_table(m, K));
}
BENCHMARK(BM_BettiTable)->Args({0, 8})->Args({1, 6})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
