#include <benchmark/benchmark.h>

#include "krzyz/config.hpp"
#include "krzyz/optimizer.hpp"

namespace {

void BM_Gradient(benchmark::State& state) {
  const auto cfg = krzyz::reference_config(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(krzyz::objective_and_gradient(cfg));
}
BENCHMARK(BM_Gradient)->Arg(2)->Arg(4)->Arg(8);

// Single-threaded so the timing reflects the ascent itself.
void BM_Maximize(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  krzyz::OptimizerOptions opts;
  opts.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(krzyz::maximize(n, n, 8, 1, opts));
}
BENCHMARK(BM_Maximize)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
