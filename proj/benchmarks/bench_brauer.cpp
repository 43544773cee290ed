#include <benchmark/benchmark.h>

#include "feitlab/brauer.hpp"

using namespace feitlab;

namespace {

const char* const kSpecs[] = {"sym:3", "dihedral:8", "alt:4", "sl2:3", "sym:4"};

void BM_MonomialPoset(benchmark::State& state) {
  const PermGroup g = parse_group_spec(kSpecs[state.range(0)]);
  state.SetLabel(kSpecs[state.range(0)]);
  for (auto _ : state) benchmark::DoNotOptimize(MonomialPoset(g).size());
}
BENCHMARK(BM_MonomialPoset)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_ChainFormula(benchmark::State& state) {
  const PermGroup g = parse_group_spec(kSpecs[state.range(0)]);
  const CharacterTable t = compute_table(g);
  state.SetLabel(kSpecs[state.range(0)]);
  for (auto _ : state) {
    const MonomialPoset poset(g);
    for (std::size_t i = 0; i < t.num_characters(); ++i) benchmark::DoNotOptimize(a_g_chains(poset, t.character(i)));
  }
}
BENCHMARK(BM_ChainFormula)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_OrbitChainFormula(benchmark::State& state) {
  const PermGroup g = parse_group_spec(kSpecs[state.range(0)]);
  const CharacterTable t = compute_table(g);
  state.SetLabel(kSpecs[state.range(0)]);
  for (auto _ : state) {
    const MonomialPoset poset(g);
    for (std::size_t i = 0; i < t.num_characters(); ++i)
      benchmark::DoNotOptimize(a_g_orbit_chains(poset, t.character(i)));
  }
}
BENCHMARK(BM_OrbitChainFormula)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

}  // namespace
