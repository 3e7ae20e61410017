// Copyright 2026 The groupmatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "groupmatch/cleanup.h"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "groupmatch/graph_algorithms.h"
#include "groupmatch/parallel.h"

namespace groupmatch {

namespace {

constexpr std::uint32_t kAbsent = std::numeric_limits<std::uint32_t>::max();

struct LocalRemoval {
  std::uint32_t u;
  std::uint32_t v;
  RemovalPhase phase;
};

// Splits `nodes` into connected pieces over the live edges of `graph`.
std::vector<std::vector<std::uint32_t>> Pieces(
    const SimpleGraph& graph, const std::vector<bool>& alive,
    const std::vector<std::uint32_t>& nodes, std::vector<std::uint32_t>& mark,
    std::uint32_t stamp) {
  for (auto u : nodes) mark[u] = stamp;
  std::vector<std::vector<std::uint32_t>> pieces;
  std::vector<std::uint32_t> stack;
  for (auto start : nodes) {
    if (mark[start] != stamp) continue;
    std::vector<std::uint32_t> piece;
    mark[start] = stamp + 1;
    stack.push_back(start);
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      piece.push_back(u);
      for (const auto& arc : graph.arcs(u)) {
        if (!alive[arc.edge] || mark[arc.to] != stamp) continue;
        mark[arc.to] = stamp + 1;
        stack.push_back(arc.to);
      }
    }
    std::sort(piece.begin(), piece.end());
    pieces.push_back(std::move(piece));
  }
  return pieces;
}

// Runs both cleanup phases on one connected component.
std::vector<LocalRemoval> CleanComponent(const SimpleGraph& graph,
                                         const CleanupParams& params) {
  const std::size_t n = graph.node_count();
  std::vector<bool> alive(graph.edge_count(), true);
  std::vector<std::uint32_t> mark(n, 0);
  std::uint32_t stamp = 1;
  std::vector<std::uint32_t> local(n, kAbsent);
  std::vector<LocalRemoval> removed;

  std::vector<std::vector<std::uint32_t>> work;
  {
    std::vector<std::uint32_t> all(n);
    for (std::uint32_t i = 0; i < n; ++i) all[i] = i;
    work.push_back(std::move(all));
  }
  while (!work.empty()) {
    std::vector<std::uint32_t> nodes = std::move(work.back());
    work.pop_back();
    if (nodes.size() <= params.mu) continue;

    // Induced live subgraph, re-indexed in the same (sorted) node order so
    // that edge order and tie-breaking match the parent graph.
    for (std::uint32_t i = 0; i < nodes.size(); ++i) local[nodes[i]] = i;
    std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> sub;
    for (auto u : nodes) {
      for (const auto& arc : graph.arcs(u)) {
        if (alive[arc.edge] && u < arc.to && local[arc.to] != kAbsent) {
          sub.emplace_back(local[u], local[arc.to], arc.edge);
        }
      }
    }
    std::sort(sub.begin(), sub.end());
    std::vector<std::pair<std::uint32_t, std::uint32_t>> sub_edges;
    sub_edges.reserve(sub.size());
    for (const auto& [a, b, e] : sub) sub_edges.emplace_back(a, b);
    const SimpleGraph piece_graph(nodes.size(), std::move(sub_edges));
    for (auto u : nodes) local[u] = kAbsent;

    auto remove = [&](std::size_t sub_edge, RemovalPhase phase) {
      const std::uint32_t e = std::get<2>(sub[sub_edge]);
      alive[e] = false;
      removed.push_back({graph.edge(e).first, graph.edge(e).second, phase});
    };
    if (nodes.size() > params.gamma) {
      for (auto e : MinimumEdgeCut(piece_graph)) remove(e, RemovalPhase::kMinCut);
    } else {
      remove(ArgmaxBetweenness(EdgeBetweenness(piece_graph)),
             RemovalPhase::kBetweenness);
    }

    auto pieces = Pieces(graph, alive, nodes, mark, stamp);
    stamp += 2;
    // Reverse so the piece holding the smallest node is processed first.
    for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) {
      work.push_back(std::move(*it));
    }
  }
  return removed;
}

const Component& Largest(const std::vector<Component>& components) {
  const Component* best = &components.front();
  for (const auto& c : components) {
    if (c.size() > best->size()) best = &c;
  }
  return *best;
}

}  // namespace

CleanupParams CleanupParams::ForSources(std::size_t num_sources) {
  CleanupParams p;
  p.mu = num_sources;
  p.gamma = 5 * num_sources;
  return p;
}

void CleanupParams::Validate() const {
  if (mu < 1) throw std::invalid_argument("mu must be at least 1");
  if (gamma < mu) throw std::invalid_argument("gamma must be >= mu");
  if (pre_cleanup_limit < 1) {
    throw std::invalid_argument("pre-cleanup limit must be positive");
  }
}

std::string_view RemovalPhaseName(RemovalPhase phase) {
  switch (phase) {
    case RemovalPhase::kPreCleanup:
      return "precleanup";
    case RemovalPhase::kMinCut:
      return "mincut";
    case RemovalPhase::kBetweenness:
      return "betweenness";
  }
  return "unknown";
}

PreCleanupResult PreCleanup(MatchGraph graph, std::size_t limit) {
  PreCleanupResult result;
  while (true) {
    std::vector<RecordPair> doomed;
    for (const auto& c : ConnectedComponents(graph)) {
      if (c.size() <= limit) continue;
      for (const auto& e : c.edges) {
        if (graph.FindEdge(e)->provenance.IsExactly(BlockingKind::kTokenOverlap)) {
          doomed.push_back(e);
        }
      }
    }
    if (doomed.empty()) break;
    for (const auto& e : doomed) {
      graph.RemoveEdge(e);
      result.removed.push_back({e, RemovalPhase::kPreCleanup});
    }
    ++result.passes;
  }
  result.graph = std::move(graph);
  return result;
}

CleanupResult GraphCleanup(MatchGraph graph, const CleanupParams& params,
                           int threads) {
  params.Validate();
  const auto components = ConnectedComponents(graph);
  std::vector<const Component*> oversized;
  for (const auto& c : components) {
    if (c.size() > params.mu) oversized.push_back(&c);
  }

  std::vector<std::vector<RemovedEdge>> removed(oversized.size());
  ParallelFor(oversized.size(), threads, [&](std::size_t i) {
    const Component& c = *oversized[i];
    for (const auto& r : CleanComponent(ToSimpleGraph(c), params)) {
      removed[i].push_back(
          {RecordPair(c.members[r.u], c.members[r.v]), r.phase});
    }
  });

  CleanupResult result;
  for (auto& list : removed) {
    for (auto& r : list) {
      graph.RemoveEdge(r.pair);
      result.removed.push_back(std::move(r));
    }
  }
  result.components = ConnectedComponents(graph);
  result.graph = std::move(graph);
  return result;
}

CleanupResult GraphCleanupGlobalLoop(MatchGraph graph,
                                     const CleanupParams& params) {
  params.Validate();
  CleanupResult result;
  auto components = ConnectedComponents(graph);
  while (!components.empty() && Largest(components).size() > params.gamma) {
    for (const auto& e : MinEdgeCut(Largest(components))) {
      graph.RemoveEdge(e);
      result.removed.push_back({e, RemovalPhase::kMinCut});
    }
    components = ConnectedComponents(graph);
  }
  while (!components.empty() && Largest(components).size() > params.mu) {
    const auto centrality = EdgeBetweenness(Largest(components));
    std::vector<double> values;
    values.reserve(centrality.size());
    for (const auto& [pair, value] : centrality) values.push_back(value);
    const RecordPair e = centrality[ArgmaxBetweenness(values)].first;
    graph.RemoveEdge(e);
    result.removed.push_back({e, RemovalPhase::kBetweenness});
    components = ConnectedComponents(graph);
  }
  result.components = std::move(components);
  result.graph = std::move(graph);
  return result;
}

}  // namespace groupmatch
