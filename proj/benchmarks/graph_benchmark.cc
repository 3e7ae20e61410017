#include <benchmark/benchmark.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "groupmatch/cleanup.h"
#include "groupmatch/graph.h"
#include "groupmatch/graph_algorithms.h"
#include "groupmatch/random.h"

namespace groupmatch {
namespace {

using EdgeList = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

// Cliques of `size` nodes with p = 0.8 inner density, each joined to the
// previous one by `links` edges: the shape cleanup sees on fused groups.
EdgeList FusedCliques(std::size_t cliques, std::size_t size, std::uint64_t seed,
                      std::uint32_t links = 1) {
  Rng rng(seed);
  EdgeList edges;
  for (std::size_t c = 0; c < cliques; ++c) {
    const auto base = static_cast<std::uint32_t>(c * size);
    for (std::uint32_t i = 0; i < size; ++i) {
      for (std::uint32_t j = i + 1; j < size; ++j) {
        if (j == i + 1 || rng.Bernoulli(0.8)) edges.emplace_back(base + i, base + j);
      }
    }
    if (c == 0) continue;
    for (std::uint32_t k = 0; k < links; ++k) {
      edges.emplace_back(base - static_cast<std::uint32_t>(size) + k, base + k);
    }
  }
  return edges;
}

void BM_EdgeBetweenness(benchmark::State& state) {
  const auto cliques = static_cast<std::size_t>(state.range(0));
  const SimpleGraph g(cliques * 5, FusedCliques(cliques, 5, 1));
  for (auto _ : state) benchmark::DoNotOptimize(EdgeBetweenness(g));
  state.SetComplexityN(static_cast<std::int64_t>(g.node_count()));
}
BENCHMARK(BM_EdgeBetweenness)->RangeMultiplier(2)->Range(2, 32)->Complexity();

// Three links per join: a bridge would end the search at the first sink.
void BM_MinimumEdgeCut(benchmark::State& state) {
  const auto cliques = static_cast<std::size_t>(state.range(0));
  const SimpleGraph g(cliques * 5, FusedCliques(cliques, 5, 2, 3));
  for (auto _ : state) benchmark::DoNotOptimize(MinimumEdgeCut(g));
  state.SetComplexityN(static_cast<std::int64_t>(g.node_count()));
}
BENCHMARK(BM_MinimumEdgeCut)->RangeMultiplier(2)->Range(2, 32)->Complexity();

MatchGraph ManyComponents(std::size_t components, std::size_t cliques) {
  const std::size_t per = cliques * 5;
  std::vector<RecordId> nodes;
  for (std::size_t i = 0; i < components * per; ++i) {
    nodes.emplace_back("r" + std::to_string(1000000 + i));
  }
  MatchGraph g(nodes);
  for (std::size_t c = 0; c < components; ++c) {
    for (auto [u, v] : FusedCliques(cliques, 5, c)) {
      g.AddEdge(RecordPair(nodes[c * per + u], nodes[c * per + v]),
                {1.0, {BlockingKind::kIdOverlap}});
    }
  }
  return g;
}

void BM_GraphCleanup(benchmark::State& state) {
  const MatchGraph g = ManyComponents(50, 8);
  const auto threads = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(GraphCleanup(g, {25, 5, 50}, threads));
}
BENCHMARK(BM_GraphCleanup)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace groupmatch
