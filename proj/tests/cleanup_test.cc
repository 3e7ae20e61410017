#include "groupmatch/cleanup.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "testing/helpers.h"
#include "testing/oracles.h"

namespace groupmatch {
namespace {

using testing::Edge;
using testing::GraphFromEdges;

std::vector<Edge> Clique(std::uint32_t first, std::uint32_t size) {
  std::vector<Edge> edges;
  for (std::uint32_t i = first; i < first + size; ++i) {
    for (std::uint32_t j = i + 1; j < first + size; ++j) edges.push_back({i, j});
  }
  return edges;
}

std::set<RecordPair> EdgeSet(const MatchGraph& g) {
  const auto edges = g.Edges();
  return {edges.begin(), edges.end()};
}

std::size_t MaxComponent(const std::vector<Component>& components) {
  std::size_t m = 0;
  for (const auto& c : components) m = std::max(m, c.size());
  return m;
}

TEST(CleanupParamsTest, ForSources) {
  const auto p = CleanupParams::ForSources(8);
  EXPECT_EQ(p.mu, 8u);
  EXPECT_EQ(p.gamma, 40u);
}

TEST(CleanupParamsTest, Validate) {
  EXPECT_NO_THROW((CleanupParams{25, 5, 50}.Validate()));
  EXPECT_NO_THROW((CleanupParams{5, 5, 50}.Validate()));
  EXPECT_NO_THROW((CleanupParams{kUnboundedSize, 5, 50}.Validate()));
  EXPECT_THROW((CleanupParams{4, 5, 50}.Validate()), std::invalid_argument);
  EXPECT_THROW((CleanupParams{5, 0, 50}.Validate()), std::invalid_argument);
  EXPECT_THROW((CleanupParams{25, 5, 0}.Validate()), std::invalid_argument);
}

TEST(GraphCleanupTest, SmallComponentsAreUntouched) {
  auto edges = Clique(0, 5);
  auto more = Clique(5, 3);
  edges.insert(edges.end(), more.begin(), more.end());
  const MatchGraph g = GraphFromEdges(9, edges);
  const auto r = GraphCleanup(g, {25, 5, 50});
  EXPECT_TRUE(r.removed.empty());
  EXPECT_EQ(r.graph, g);
  EXPECT_EQ(r.components.size(), 3u);  // two cliques and node n008
}

TEST(GraphCleanupTest, BridgedCliquesSplitIntoTruthGroups) {
  auto edges = Clique(0, 4);
  auto right = Clique(4, 4);
  edges.insert(edges.end(), right.begin(), right.end());
  edges.push_back({3, 4});
  const auto r = GraphCleanup(GraphFromEdges(8, edges), {25, 4, 50});
  ASSERT_EQ(r.removed.size(), 1u);
  EXPECT_EQ(r.removed[0].pair, testing::Pair("n003", "n004"));
  EXPECT_EQ(r.removed[0].phase, RemovalPhase::kBetweenness);
  ASSERT_EQ(r.components.size(), 2u);
  EXPECT_EQ(r.components[0].members, testing::NodeIds(4));
}

TEST(GraphCleanupTest, MinCutRunsAboveGammaOnly) {
  // Two 6-cliques joined by one edge: 12 nodes > gamma = 10.
  auto edges = Clique(0, 6);
  auto right = Clique(6, 6);
  edges.insert(edges.end(), right.begin(), right.end());
  edges.push_back({0, 6});
  const auto r = GraphCleanup(GraphFromEdges(12, edges), {10, 6, 50});
  ASSERT_EQ(r.removed.size(), 1u);
  EXPECT_EQ(r.removed[0].phase, RemovalPhase::kMinCut);
  EXPECT_EQ(MaxComponent(r.components), 6u);
}

TEST(GraphCleanupTest, GammaEqualMuUsesOnlyMinCuts) {
  Rng rng(3);
  const auto edges = testing::PlantedCommunities(rng, 4, 6, 0.7, 4);
  const auto r = GraphCleanup(GraphFromEdges(24, edges), {5, 5, 50});
  EXPECT_FALSE(r.removed.empty());
  for (const auto& e : r.removed) EXPECT_EQ(e.phase, RemovalPhase::kMinCut);
  EXPECT_LE(MaxComponent(r.components), 5u);
}

TEST(GraphCleanupTest, UnboundedGammaUsesOnlyBetweenness) {
  Rng rng(4);
  const auto edges = testing::PlantedCommunities(rng, 4, 6, 0.7, 4);
  const auto r = GraphCleanup(GraphFromEdges(24, edges), {kUnboundedSize, 5, 50});
  EXPECT_FALSE(r.removed.empty());
  for (const auto& e : r.removed) EXPECT_EQ(e.phase, RemovalPhase::kBetweenness);
  EXPECT_LE(MaxComponent(r.components), 5u);
}

TEST(GraphCleanupTest, ContractOnPlantedCommunities) {
  Rng rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t blocks = 2 + rng.Uniform(4);
    const std::size_t size = 3 + rng.Uniform(6);
    const auto edges = testing::PlantedCommunities(rng, blocks, size, 0.6, rng.Uniform(6));
    const std::size_t n = blocks * size;
    const MatchGraph g = GraphFromEdges(n, edges);
    const std::size_t mu = 2 + rng.Uniform(5);
    const CleanupParams params{mu + rng.Uniform(10), mu, 50};

    const auto r = GraphCleanup(g, params, 1);
    EXPECT_LE(MaxComponent(r.components), mu) << "trial " << trial;

    const auto in = EdgeSet(g);
    const auto out = EdgeSet(r.graph);
    EXPECT_TRUE(std::includes(in.begin(), in.end(), out.begin(), out.end()));
    EXPECT_EQ(out.size() + r.removed.size(), in.size());
    for (const auto& e : r.removed) {
      EXPECT_TRUE(in.contains(e.pair));
      EXPECT_FALSE(out.contains(e.pair));
    }

    const auto again = GraphCleanup(g, params, 1);
    EXPECT_EQ(again.graph, r.graph);
    EXPECT_EQ(again.removed, r.removed);
    EXPECT_EQ(again.components, r.components);

    const auto parallel = GraphCleanup(g, params, 4);
    EXPECT_EQ(parallel.graph, r.graph) << "trial " << trial;
    EXPECT_EQ(parallel.removed, r.removed);

    const auto global = GraphCleanupGlobalLoop(g, params);
    EXPECT_EQ(global.graph, r.graph) << "trial " << trial;
    EXPECT_EQ(global.components, r.components);
  }
}

TEST(GraphCleanupTest, ComponentsCoverEveryNode) {
  Rng rng(8);
  const auto edges = testing::PlantedCommunities(rng, 3, 7, 0.5, 3);
  const auto r = GraphCleanup(GraphFromEdges(21, edges), {25, 5, 50});
  std::size_t total = 0;
  for (const auto& c : r.components) total += c.size();
  EXPECT_EQ(total, 21u);
}

TEST(PreCleanupTest, DropsTokenOnlyEdgesInOversizedComponents) {
  // A path of 6 nodes: edges alternate token-only and id-backed.
  MatchGraph g(testing::NodeIds(6));
  const Provenance token{BlockingKind::kTokenOverlap};
  const Provenance both{BlockingKind::kIdOverlap, BlockingKind::kTokenOverlap};
  g.AddEdge(testing::Pair("n000", "n001"), {1.0, token});
  g.AddEdge(testing::Pair("n001", "n002"), {1.0, both});
  g.AddEdge(testing::Pair("n002", "n003"), {1.0, token});
  g.AddEdge(testing::Pair("n003", "n004"), {1.0, both});
  g.AddEdge(testing::Pair("n004", "n005"), {1.0, token});

  const auto r = PreCleanup(g, 5);
  EXPECT_EQ(r.passes, 1u);
  ASSERT_EQ(r.removed.size(), 3u);
  for (const auto& e : r.removed) EXPECT_EQ(e.phase, RemovalPhase::kPreCleanup);
  EXPECT_EQ(r.graph.edge_count(), 2u);
  EXPECT_TRUE(r.graph.HasEdge(testing::Pair("n001", "n002")));
}

TEST(PreCleanupTest, TokenStarOfFiftyOneShatters) {
  std::vector<Edge> star;
  for (std::uint32_t i = 1; i < 51; ++i) star.push_back({0, i});
  const auto r = PreCleanup(GraphFromEdges(51, star, {BlockingKind::kTokenOverlap}), 50);
  EXPECT_EQ(r.graph.edge_count(), 0u);
  EXPECT_EQ(r.removed.size(), 50u);
  EXPECT_EQ(ConnectedComponents(r.graph).size(), 51u);
}

TEST(PreCleanupTest, TokenStarOfFiftyIsKept) {
  std::vector<Edge> star;
  for (std::uint32_t i = 1; i < 50; ++i) star.push_back({0, i});
  const MatchGraph g = GraphFromEdges(50, star, {BlockingKind::kTokenOverlap});
  EXPECT_EQ(PreCleanup(g, 50).graph, g);
}

TEST(GraphCleanupTest, BarbellWithSyntheticThresholds) {
  auto edges = Clique(0, 4);
  auto right = Clique(4, 4);
  edges.insert(edges.end(), right.begin(), right.end());
  edges.push_back({0, 4});
  const auto r = GraphCleanup(GraphFromEdges(8, edges), {25, 5, 50});
  ASSERT_EQ(r.removed.size(), 1u);
  EXPECT_EQ(r.removed[0].pair, testing::Pair("n000", "n004"));
  EXPECT_EQ(r.components.size(), 2u);
}

TEST(PreCleanupTest, ComponentsAtLimitAreKept) {
  const MatchGraph g = GraphFromEdges(5, Clique(0, 5), {BlockingKind::kTokenOverlap});
  const auto r = PreCleanup(g, 5);
  EXPECT_EQ(r.passes, 0u);
  EXPECT_EQ(r.graph, g);
}

TEST(PreCleanupTest, StopsWhenNothingRemovable) {
  // Oversized but id-backed: nothing can go, and the loop must terminate.
  const MatchGraph g = GraphFromEdges(8, Clique(0, 8));
  const auto r = PreCleanup(g, 3);
  EXPECT_EQ(r.passes, 0u);
  EXPECT_TRUE(r.removed.empty());
}

}  // namespace
}  // namespace groupmatch
