#include <benchmark/benchmark.h>

#include "fincat/skeleton.hpp"
#include "fincat/standard.hpp"
#include "fincat/yoneda.hpp"

using namespace fincat;

static void BM_YonedaBijectionPowerset(benchmark::State& state) {
  auto s = finset_skeleton(static_cast<std::size_t>(state.range(0)));
  auto p = powerset_functor(s, Variance::Contravariant);
  const ObjId top{s.max_size()};
  for (auto _ : state) benchmark::DoNotOptimize(yoneda_bijection(p, top));
}
BENCHMARK(BM_YonedaBijectionPowerset)->DenseRange(1, 3);

static void BM_YonedaEmbedding(benchmark::State& state) {
  auto s = finset_skeleton(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(yoneda_embedding(s.category));
}
BENCHMARK(BM_YonedaEmbedding)->DenseRange(1, 3);

static void BM_FindRepresentation(benchmark::State& state) {
  auto c = share(chain_category(static_cast<std::size_t>(state.range(0))));
  auto h = hom_functor(c, ObjId{0}, Variance::Covariant);
  for (auto _ : state) benchmark::DoNotOptimize(find_representation(h));
}
BENCHMARK(BM_FindRepresentation)->DenseRange(2, 6, 2);
