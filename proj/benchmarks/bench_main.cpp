#include <benchmark/benchmark.h>

#include "heckepos/checks.hpp"
#include "heckepos/dihedral.hpp"
#include "heckepos/hecke.hpp"
#include "heckepos/klbase.hpp"

using namespace heckepos;

namespace {

const char* const kGroups[] = {"H3", "F4", "H4"};

void BM_BuildGroup(benchmark::State& state) {
  const char* name = kGroups[state.range(0)];
  for (auto _ : state) benchmark::DoNotOptimize(build_group(name).size());
  state.SetLabel(name);
}
BENCHMARK(BM_BuildGroup)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_BruhatIdeals(benchmark::State& state) {
  const GroupTable g = build_group(kGroups[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(BruhatIdeals(g).ideal_size(0));
  state.SetLabel(kGroups[state.range(0)]);
}
BENCHMARK(BM_BruhatIdeals)->Arg(0)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_KLStore(benchmark::State& state) {
  const GroupTable g = build_group(kGroups[state.range(0)]);
  for (auto _ : state) {
    KLStore store(g);
    benchmark::DoNotOptimize(store.distinct_polynomials().size());
  }
  state.SetLabel(kGroups[state.range(0)]);
}
BENCHMARK(BM_KLStore)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

// One column per iteration, cycling through y so every length is sampled.
void BM_Column(benchmark::State& state) {
  const GroupTable g = build_group(kGroups[state.range(0)]);
  const WGraph wg = build_wgraph(KLStore(g));
  const ElementId stride = static_cast<ElementId>(g.size() / 16) | 1;
  ElementId y = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(column(wg, y).max_coefficient());
    y = static_cast<ElementId>((y + stride) % g.size());
  }
  state.SetLabel(kGroups[state.range(0)]);
}
BENCHMARK(BM_Column)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_H3Sweep(benchmark::State& state) {
  const GroupTable g = build_group("H3");
  const WGraph wg = build_wgraph(KLStore(g));
  for (auto _ : state) benchmark::DoNotOptimize(check_p3(wg, 0, static_cast<ElementId>(g.size())).passed);
}
BENCHMARK(BM_H3Sweep)->Unit(benchmark::kMillisecond);

void BM_DihedralClosedForm(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state)
    for (int k = 1; k <= m; ++k)
      for (int i = 1; i <= m; ++i) benchmark::DoNotOptimize(dihedral::finite_product(m, dihedral::Side::Same, i, k));
}
BENCHMARK(BM_DihedralClosedForm)->Arg(12)->Arg(30);

}  // namespace

BENCHMARK_MAIN();
