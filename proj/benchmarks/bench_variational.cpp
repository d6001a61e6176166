#include <benchmark/benchmark.h>

#include "eulerl2/families.hpp"
#include "eulerl2/variational.hpp"

using namespace eulerl2;

static void BM_FirstVariation(benchmark::State& state) {
  const ParamCurve c = family_curve(
      make_family(FamilyClass::SpacelikeCMinus, 2.0, std::nullopt, Interval{-1.0, 1.0}));
  const PerturbationSpec p = bump_suite(c.domain, 1, 7).front();
  for (auto _ : state) benchmark::DoNotOptimize(first_variation(c, -2.0, p, 1e-4));
}
BENCHMARK(BM_FirstVariation);

static void BM_MaximizerCheck(benchmark::State& state) {
  const EndpointPair ends = EndpointPair::make({1.0, 0.0}, {2.0, 0.0});
  const int competitors = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(maximizer_check(ends, 2.0, competitors, 1).max_excess);
  }
}
BENCHMARK(BM_MaximizerCheck)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);

static void BM_DivergenceProbe(benchmark::State& state) {
  const std::vector<double> eps{1e-1, 1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
  for (auto _ : state) benchmark::DoNotOptimize(divergence_probe(-1.0, eps));
}
BENCHMARK(BM_DivergenceProbe);
