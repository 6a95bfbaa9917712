#include <benchmark/benchmark.h>

#include <numeric>

#include "fincat/limits.hpp"

using namespace fincat;

namespace {

FinFunction mod_map(std::size_t dom, std::size_t cod) {
  std::vector<std::size_t> t(dom);
  for (std::size_t i = 0; i < dom; ++i) t[i] = i % cod;
  return FinFunction(dom, cod, t);
}

}  // namespace

static void BM_Pullback(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto f = mod_map(n, 3), g = mod_map(n + 1, 3);
  for (auto _ : state) benchmark::DoNotOptimize(pullback(f, g));
}
BENCHMARK(BM_Pullback)->RangeMultiplier(4)->Range(4, 256);

static void BM_Coequalizer(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<std::size_t> shift(n);
  std::iota(shift.begin(), shift.end(), std::size_t{1});
  shift.back() = 0;
  auto f = mod_map(n, n), g = FinFunction(n, n, shift);
  for (auto _ : state) benchmark::DoNotOptimize(coequalizer(f, g));
}
BENCHMARK(BM_Coequalizer)->RangeMultiplier(4)->Range(4, 4096);

static void BM_UniversalPullback(benchmark::State& state) {
  auto d = cospan_diagram(mod_map(3, 2), mod_map(3, 2));
  auto l = limit(d);
  for (auto _ : state) benchmark::DoNotOptimize(check_universal(d, l.cone));
}
BENCHMARK(BM_UniversalPullback);
