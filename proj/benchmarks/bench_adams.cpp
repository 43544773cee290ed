#include <benchmark/benchmark.h>

#include "feitlab/adams.hpp"

using namespace feitlab;

namespace {

void BM_SInvariantAll(benchmark::State& state) {
  const CharacterTable t = compute_table(symmetric(5));
  const auto ns = numth::divisors(t.exponent());
  for (auto _ : state)
    for (std::size_t i = 0; i < t.num_characters(); ++i)
      for (Int n : ns) benchmark::DoNotOptimize(s_invariant(t, i, n));
}
BENCHMARK(BM_SInvariantAll)->Unit(benchmark::kMicrosecond);

void BM_FeitIndicator(benchmark::State& state) {
  const CharacterTable t = compute_table(alternating(5));
  for (auto _ : state)
    for (std::size_t i = 0; i < t.num_characters(); ++i) benchmark::DoNotOptimize(feit_indicator(t, i));
}
BENCHMARK(BM_FeitIndicator)->Unit(benchmark::kMicrosecond);

void BM_TechnicalDirect(benchmark::State& state) {
  const Cyclotomic zeta = Cyclotomic::zeta(12);
  for (auto _ : state) benchmark::DoNotOptimize(numth::technical_direct(60, 6, 60, zeta));
}
BENCHMARK(BM_TechnicalDirect);

}  // namespace
