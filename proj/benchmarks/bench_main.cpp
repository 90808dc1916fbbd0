#include "clusterlab/exchange_graph.hpp"
#include "clusterlab/gfan.hpp"
#include "clusterlab/pattern.hpp"
#include "clusterlab/seed.hpp"

#include <benchmark/benchmark.h>

using namespace clusterlab;

namespace {

const ExchangeMatrix kA3(IntMatrix{{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}});
const ExchangeMatrix kNonSym3(IntMatrix{{0, 1, 1}, {-1, 0, 1}, {-2, -1, 0}});

void BM_MatrixMutation(benchmark::State& state) {
  IntMatrix m = kNonSym3.matrix();
  std::size_t k = 0;
  for (auto _ : state) {
    m = mutate_matrix(m, k);
    k = (k + 1) % 3;
    benchmark::DoNotOptimize(m);
  }
}
BENCHMARK(BM_MatrixMutation);

void BM_SeedMutation(benchmark::State& state) {
  const Path path{0, 1, 2, 0, 1, 2};
  const Seed s0 = make_principal_seed(kNonSym3);
  for (auto _ : state) benchmark::DoNotOptimize(mutate_along(s0, path));
}
BENCHMARK(BM_SeedMutation);

void BM_ExploreA3(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(explore(kA3).nodes().size());
}
BENCHMARK(BM_ExploreA3);

void BM_PatternWalk(benchmark::State& state) {
  const auto depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(walk_pattern(kNonSym3, depth, [](const PatternNode&) { return true; }));
}
BENCHMARK(BM_PatternWalk)->Arg(4)->Arg(6)->Arg(8);

void BM_FanCheckA3(benchmark::State& state) {
  const GFan fan = enumerate_gfan(kA3, 12);
  for (auto _ : state) benchmark::DoNotOptimize(check_fan(fan.cones).is_fan());
}
BENCHMARK(BM_FanCheckA3);

}  // namespace

BENCHMARK_MAIN();
