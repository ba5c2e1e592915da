#include <benchmark/benchmark.h>

#include "dihg/families.hpp"
#include "dihg/finite.hpp"
#include "dihg/invariants.hpp"
#include "dihg/margins.hpp"
#include "dihg/configurations.hpp"
#include "dihg/partition.hpp"

namespace {

void BM_Atomize(benchmark::State& state) {
  dihg::DIntervalHypergraph h = dihg::grid_family(2, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    dihg::Atomization a = dihg::atomize(h);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_Atomize)->Arg(4)->Arg(8);

void BM_PremiseCheck(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  dihg::DIntervalHypergraph h = dihg::grid_family(2, m);
  for (auto _ : state) {
    dihg::PremiseResult r = dihg::premise_check(h, m, dihg::PredicateMode::ContainedIn);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_PremiseCheck)->Arg(2)->Arg(3)->Arg(4);

void BM_MarginSums(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  dihg::DIntervalHypergraph h = dihg::grid_family(3, 4);
  dihg::ProductPoint x = dihg::ProductPoint::uniform(3, n);
  dihg::Rat eps = dihg::make_rat(1, 8);
  for (auto _ : state) {
    dihg::LayerArray arr = dihg::t_array(x, h, eps);
    dihg::LayerSums sums = dihg::layer_sums(arr);
    benchmark::DoNotOptimize(sums);
  }
}
BENCHMARK(BM_MarginSums)->Arg(2)->Arg(4);

void BM_FractionalCover(benchmark::State& state) {
  dihg::FiniteHypergraph f =
      dihg::atomize(dihg::grid_family(2, static_cast<int>(state.range(0)))).hyper;
  for (auto _ : state) {
    dihg::FractionalValue v = dihg::lp_fractional(f, dihg::FractionalKind::RhoStar);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_FractionalCover)->Arg(3)->Arg(5);

}  // namespace

BENCHMARK_MAIN();
