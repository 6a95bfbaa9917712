#include <benchmark/benchmark.h>

#include "fincat/algebraic.hpp"
#include "fincat/functor.hpp"
#include "fincat/skeleton.hpp"
#include "fincat/standard.hpp"

using namespace fincat;

static void BM_ValidateChain(benchmark::State& state) {
  auto c = chain_category(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(validate_category(c));
  state.counters["morphisms"] = static_cast<double>(c.morphism_count());
}
BENCHMARK(BM_ValidateChain)->Arg(4)->Arg(8)->Arg(12);

static void BM_ValidateFinSetSkeleton(benchmark::State& state) {
  auto s = finset_skeleton(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(validate_category(*s.category));
  state.counters["morphisms"] = static_cast<double>(s.category->morphism_count());
}
BENCHMARK(BM_ValidateFinSetSkeleton)->DenseRange(1, 3);

static void BM_ClassifySkeleton(benchmark::State& state) {
  auto s = finset_skeleton(3);
  const auto& c = *s.category;
  for (auto _ : state)
    for (MorId f : c.morphisms()) benchmark::DoNotOptimize(classify_morphism(c, f));
}
BENCHMARK(BM_ClassifySkeleton);

static void BM_FunctorCategory(benchmark::State& state) {
  auto k = share(chain_category(2));
  auto l = share(chain_category(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(functor_category(k, l));
}
BENCHMARK(BM_FunctorCategory)->DenseRange(2, 4);
