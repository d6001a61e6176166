#include <benchmark/benchmark.h>

#include "eulerl2/ode.hpp"

using namespace eulerl2;

static void BM_Integrate(benchmark::State& state) {
  const double step = 1.0 / static_cast<double>(state.range(0));
  const OdeProblem p{PolarOde::K1, 3.0, 1.0, 0.0, 0.0, 1.0, step};
  IntegrateOptions opts;
  opts.verify_order = false;
  for (auto _ : state) benchmark::DoNotOptimize(integrate(p, opts).nodes.back().rho);
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Integrate)->Arg(100)->Arg(1000)->Arg(10000);

static void BM_IntegrateWithOrderCheck(benchmark::State& state) {
  const OdeProblem p{PolarOde::K2, -2.0, 1.0, 0.5, 0.0, 1.0, 1e-3};
  for (auto _ : state) benchmark::DoNotOptimize(integrate(p).nodes.back().rho);
}
BENCHMARK(BM_IntegrateWithOrderCheck);

static void BM_ShootMatch(benchmark::State& state) {
  const FamilySpec spec = make_family(FamilyClass::SpacelikeCPlus, 2.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(shoot_match(spec, {0.2, 1.0}, 1e-3).max_abs_error);
  }
}
BENCHMARK(BM_ShootMatch);
