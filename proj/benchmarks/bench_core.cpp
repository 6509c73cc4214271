#include <benchmark/benchmark.h>

#include "weuler/qseries.hpp"

using namespace weuler;

namespace {

static void BM_WreathGroupBuild(benchmark::State& state) {
  const GroupPtr base = state.range(0) == 2 ? cyclic_group(2) : symmetric_group(3).group;
  const std::size_t n = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) {
    WreathGroup w = wreath_group(base, n);
    benchmark::DoNotOptimize(w.group);
  }
}
BENCHMARK(BM_WreathGroupBuild)->Args({2, 3})->Args({6, 2})->Args({6, 3})
    ->Unit(benchmark::kMillisecond);

static void BM_ConjugacyClasses(benchmark::State& state) {
  const WreathGroup w = wreath_group(symmetric_group(3).group, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    ConjugacyTable t = conjugacy_classes(*w.group);
    benchmark::DoNotOptimize(t.classes);
  }
}
BENCHMARK(BM_ConjugacyClasses)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_CommutingPairEnumeration(benchmark::State& state) {
  const WreathGroup w = wreath_group(symmetric_group(3).group, static_cast<std::size_t>(state.range(0)));
  const Presentation k = Presentation::free_abelian(2);
  for (auto _ : state) {
    HomSet h = hom_set(k, *w.group);
    benchmark::DoNotOptimize(h.homs);
  }
}
BENCHMARK(BM_CommutingPairEnumeration)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_OrderD(benchmark::State& state) {
  const GSet nat = GSet::from_permutations(symmetric_group(3));
  const GSet power = wreath_power(nat, 2);
  const unsigned d = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    BigInt v = chi_d(power, d);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_OrderD)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_ClosedSeries(benchmark::State& state) {
  const std::size_t order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    PowerSeries s = symmetric_series_product(BigInt(6), 2, order);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_ClosedSeries)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_SubgroupLattice(benchmark::State& state) {
  const GroupPtr g = direct_product(symmetric_group(3).group, cyclic_group(2));
  for (auto _ : state) {
    auto lattice = all_subgroups(g);
    benchmark::DoNotOptimize(lattice);
  }
}
BENCHMARK(BM_SubgroupLattice)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
