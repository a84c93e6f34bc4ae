#include <benchmark/benchmark.h>

#include <random>

#include "krzyz/config.hpp"
#include "krzyz/poly.hpp"

namespace {

krzyz::ComplexPoly random_poly(std::size_t degree) {
  std::mt19937_64 rng(degree);
  std::normal_distribution<double> g;
  std::vector<krzyz::cplx> c(degree + 1);
  for (auto& x : c) x = {g(rng), g(rng)};
  return krzyz::ComplexPoly(std::move(c));
}

void BM_Roots(benchmark::State& state) {
  const auto p = random_poly(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(krzyz::roots(p));
}
BENCHMARK(BM_Roots)->RangeMultiplier(2)->Range(4, 64);

void BM_FejerRieszReference(benchmark::State& state) {
  const auto cfg = krzyz::reference_config(static_cast<int>(state.range(0)));
  const auto T = krzyz::TrigPolyReal::real_part_on_circle(krzyz::build_P(cfg));
  for (auto _ : state) benchmark::DoNotOptimize(krzyz::fejer_riesz(T));
}
BENCHMARK(BM_FejerRieszReference)->Arg(2)->Arg(4)->Arg(8);

}  // namespace
