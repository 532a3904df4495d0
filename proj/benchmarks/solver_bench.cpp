#include <benchmark/benchmark.h>

#include "nwsteiner/budgeted.hpp"
#include "nwsteiner/graph.hpp"
#include "nwsteiner/instance_gen.hpp"
#include "nwsteiner/pcsf.hpp"

namespace {

using namespace nwsteiner;

Instance randomInstance(std::size_t n, std::size_t demands, std::uint64_t seed) {
  gen::RandomParams params;
  params.seed = seed;
  params.vertices = n;
  params.chords = n / 2;
  params.demands = demands;
  params.maxPenalty = 60;
  return gen::genRandom(params);
}

void BM_ShortestPaths(benchmark::State& state) {
  Instance g = randomInstance(static_cast<std::size_t>(state.range(0)), 0, 7);
  CostFunction c(g);
  std::vector<VertexId> source{0};
  for (auto _ : state) benchmark::DoNotOptimize(shortestPaths(g, c, source));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ShortestPaths)->RangeMultiplier(2)->Range(16, 512)->Complexity();

void BM_SolvePcsf(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Instance g = normalizeDemands(randomInstance(n, static_cast<std::size_t>(state.range(1)), 11));
  for (auto _ : state) benchmark::DoNotOptimize(pcsf::solvePcsf(g));
}
BENCHMARK(BM_SolvePcsf)->ArgsProduct({{16, 64, 256}, {2, 8}})->Unit(benchmark::kMillisecond);

void BM_TrimUnrooted(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  gen::Rng rng(5);
  Instance g;
  for (std::size_t i = 0; i < n; ++i) g.addVertex("t" + std::to_string(i), rng.rational(0, 4, 1), rng.rational(0, 9, 1));
  for (std::size_t i = 1; i < n; ++i) g.addEdge(rng.below(i), i);
  std::vector<VertexId> all(n);
  for (VertexId v = 0; v < n; ++v) all[v] = v;
  auto tree = budgeted::RootedTree::fromVertexSet(g, 0, all);
  const Rational B = tree.cost / 3 + 8;
  for (auto _ : state) benchmark::DoNotOptimize(budgeted::trimUnrooted(tree, g, B));
}
BENCHMARK(BM_TrimUnrooted)->RangeMultiplier(4)->Range(64, 4096);

}  // namespace

BENCHMARK_MAIN();
