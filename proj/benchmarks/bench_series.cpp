#include <benchmark/benchmark.h>

#include "krzyz/config.hpp"
#include "krzyz/series.hpp"
#include "krzyz/special.hpp"

namespace {

void BM_FSeries(benchmark::State& state) {
  const auto cfg = krzyz::reference_config(8);
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(krzyz::f_series(cfg, order));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FSeries)->RangeMultiplier(4)->Range(16, 1024)->Complexity();

void BM_ObjectiveValue(benchmark::State& state) {
  const auto cfg = krzyz::reference_config(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(krzyz::m_n(cfg));
}
BENCHMARK(BM_ObjectiveValue)->DenseRange(2, 10, 4);

void BM_BetaSup(benchmark::State& state) {
  const int j = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(krzyz::beta_sup(j));
}
BENCHMARK(BM_BetaSup)->Arg(2)->Arg(8)->Arg(32);

}  // namespace
