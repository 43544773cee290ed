#include <benchmark/benchmark.h>

#include "feitlab/chartab.hpp"

using namespace feitlab;

namespace {

const char* const kSpecs[] = {"sym:4", "sl2:3", "dihedral:30", "extraspecial:27", "alt:5", "sym:5"};

void BM_ComputeTable(benchmark::State& state) {
  const PermGroup g = parse_group_spec(kSpecs[state.range(0)]);
  state.SetLabel(kSpecs[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(compute_table(g));
}
BENCHMARK(BM_ComputeTable)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_GroupFromSpec(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(parse_group_spec("sym:5"));
}
BENCHMARK(BM_GroupFromSpec)->Unit(benchmark::kMillisecond);

void BM_JsonRoundTrip(benchmark::State& state) {
  const CharacterTable t = compute_table(symmetric(5));
  for (auto _ : state) benchmark::DoNotOptimize(save_table(load_table(save_table(t))));
}
BENCHMARK(BM_JsonRoundTrip)->Unit(benchmark::kMicrosecond);

}  // namespace
