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

#ifndef GROUPMATCH_GRAPH_ALGORITHMS_H_
#define GROUPMATCH_GRAPH_ALGORITHMS_H_

// Exact global minimum edge cut and edge betweenness centrality on small
// undirected, unweighted graphs (one connected component at a time).

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "groupmatch/graph.h"
#include "groupmatch/model.h"

namespace groupmatch {

// Compact undirected simple graph over nodes 0..n-1. Edges are stored as
// (u, v) with u < v, sorted, so edge order is lexicographic.
class SimpleGraph {
 public:
  struct Arc {
    std::uint32_t to;
    std::uint32_t edge;
  };

  // Normalizes, sorts and deduplicates `edges`. Throws std::invalid_argument
  // on self-loops or out-of-range endpoints.
  SimpleGraph(std::size_t node_count,
              std::vector<std::pair<std::uint32_t, std::uint32_t>> edges);

  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::pair<std::uint32_t, std::uint32_t>& edge(std::size_t e) const {
    return edges_[e];
  }
  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges() const {
    return edges_;
  }
  const std::vector<Arc>& arcs(std::uint32_t u) const { return adjacency_[u]; }

  bool IsConnected() const;

 private:
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_;
  std::vector<std::vector<Arc>> adjacency_;
};

// Builds the local graph of a component; node i is component.members[i].
SimpleGraph ToSimpleGraph(const Component& component);

// Edge indices of a globally minimum edge cut of a connected graph with at
// least two nodes. The edge connectivity is found as the minimum over
// t = 1..n-1 of the unit-capacity max-flow from node 0 to t; the cut is the
// residual source side of the first t attaining it, which makes the result a
// deterministic function of the input. Throws std::invalid_argument for
// graphs that are disconnected or have fewer than two nodes.
std::vector<std::size_t> MinimumEdgeCut(const SimpleGraph& graph);

// Unnormalized edge betweenness per edge index: for each edge, the sum over
// unordered node pairs {s, t} of the fraction of shortest s-t paths that use
// it. Brandes' accumulation; disconnected pairs contribute nothing.
std::vector<double> EdgeBetweenness(const SimpleGraph& graph);

// Index of the edge with maximum centrality; near-ties (relative 1e-9) go to
// the lexicographically smallest edge. Requires at least one edge.
std::size_t ArgmaxBetweenness(const std::vector<double>& centrality);

// Component-level wrappers over RecordIds.
// Throws std::invalid_argument for singleton or disconnected components.
std::vector<RecordPair> MinEdgeCut(const Component& component);
std::vector<std::pair<RecordPair, double>> EdgeBetweenness(
    const Component& component);

}  // namespace groupmatch

#endif  // GROUPMATCH_GRAPH_ALGORITHMS_H_
