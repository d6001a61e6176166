#include <benchmark/benchmark.h>

#include "eulerl2/families.hpp"

using namespace eulerl2;

static void BM_FamilyResidual(benchmark::State& state) {
  const FamilySpec spec = make_family(FamilyClass::SpacelikeCMinus, 2.0);
  const ParamCurve c = family_curve(spec);
  const auto samples = sample_parameters(c.domain, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(stationary_residual(c, 2.0, samples).max_abs_residual);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_FamilyResidual)->Arg(200)->Arg(2000);

static void BM_InvertedFamilyResidual(benchmark::State& state) {
  const ParamCurve c = invert_curve(family_curve(make_family(FamilyClass::SpacelikeCPlus, -2.0)));
  const auto samples = sample_parameters(c.domain, 200);
  for (auto _ : state) {
    benchmark::DoNotOptimize(stationary_residual(c, 0.0, samples).max_abs_residual);
  }
}
BENCHMARK(BM_InvertedFamilyResidual);

static void BM_Energy(benchmark::State& state) {
  const ParamCurve c = family_curve(make_family(FamilyClass::SpacelikeCMinus, 0.5));
  for (auto _ : state) benchmark::DoNotOptimize(energy(c, 0.5));
}
BENCHMARK(BM_Energy);

static void BM_GluedCurve(benchmark::State& state) {
  for (auto _ : state) {
    const PiecewiseCurve g = glued_mixed_curve(-2.0);
    benchmark::DoNotOptimize(closure_gap(g));
  }
}
BENCHMARK(BM_GluedCurve);
