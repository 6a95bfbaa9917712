#include <benchmark/benchmark.h>

#include "fincat/algebraic.hpp"
#include "fincat/finvect.hpp"
#include "fincat/hopf.hpp"

using namespace fincat;

static void BM_Kron(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto a = identity_matrix(n, 5), b = swap_matrix(n, n, 5);
  for (auto _ : state) benchmark::DoNotOptimize(kron(a, b));
}
BENCHMARK(BM_Kron)->DenseRange(2, 6, 2);

static void BM_CheckHopfGroupAlgebra(benchmark::State& state) {
  auto g = symmetric_group(static_cast<std::size_t>(state.range(0)));
  auto h = group_algebra(g, 5);
  for (auto _ : state) benchmark::DoNotOptimize(check_hopf(h));
  state.counters["dim"] = static_cast<double>(g.order());
}
BENCHMARK(BM_CheckHopfGroupAlgebra)->Arg(2)->Arg(3);

static void BM_SolveAntipode(benchmark::State& state) {
  auto g = cyclic_group(static_cast<std::size_t>(state.range(0)));
  auto h = group_algebra(g, 3);
  for (auto _ : state) benchmark::DoNotOptimize(solve_antipode(h.bimonoid));
}
BENCHMARK(BM_SolveAntipode)->DenseRange(2, 6, 2);
