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

#ifndef GROUPMATCH_GRAPH_H_
#define GROUPMATCH_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "groupmatch/blocking.h"
#include "groupmatch/matcher.h"
#include "groupmatch/model.h"

namespace groupmatch {

struct EdgeAttributes {
  double score = 0.0;
  Provenance provenance;

  friend bool operator==(const EdgeAttributes&, const EdgeAttributes&) = default;
};

// Undirected simple graph of positive match predictions. Every record of the
// dataset is a node, isolated or not. Node indices follow RecordId order.
class MatchGraph {
 public:
  using NodeIndex = std::uint32_t;

  MatchGraph() = default;
  // Duplicate ids are collapsed.
  explicit MatchGraph(std::vector<RecordId> nodes);

  // Adds an edge for every prediction labeled match. Repeated pairs keep the
  // highest score and the union of provenance. Throws LookupError if a
  // prediction references an id outside `nodes`.
  static MatchGraph Build(std::span<const Prediction> predictions,
                          std::vector<RecordId> nodes);

  // Merges into an existing edge as Build() does. Throws LookupError.
  void AddEdge(const RecordPair& pair, EdgeAttributes attributes);
  // Returns false if the edge was absent.
  bool RemoveEdge(const RecordPair& pair);

  bool HasEdge(const RecordPair& pair) const;
  const EdgeAttributes* FindEdge(const RecordPair& pair) const;

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<RecordId>& nodes() const { return nodes_; }
  // All edges, sorted.
  std::vector<RecordPair> Edges() const;

  bool ContainsNode(const RecordId& id) const { return index_.contains(id); }
  // Throws LookupError.
  NodeIndex IndexOf(const RecordId& id) const;
  const RecordId& NodeId(NodeIndex index) const { return nodes_[index]; }
  // Sorted neighbor indices.
  const std::vector<NodeIndex>& Neighbors(NodeIndex index) const {
    return adjacency_[index];
  }

  friend bool operator==(const MatchGraph& a, const MatchGraph& b) {
    return a.nodes_ == b.nodes_ && a.edges_ == b.edges_;
  }

 private:
  using NodePair = std::pair<NodeIndex, NodeIndex>;
  NodePair Key(const RecordPair& pair) const;

  std::vector<RecordId> nodes_;
  std::unordered_map<RecordId, NodeIndex> index_;
  std::vector<std::vector<NodeIndex>> adjacency_;
  std::map<NodePair, EdgeAttributes> edges_;
};

// A maximal connected node set with its induced edges.
struct Component {
  std::vector<RecordId> members;  // sorted
  std::vector<RecordPair> edges;  // sorted

  std::size_t size() const { return members.size(); }
  friend bool operator==(const Component&, const Component&) = default;
};

// Components ordered by their smallest member.
std::vector<Component> ConnectedComponents(const MatchGraph& graph);

// Every within-component unordered pair, sorted.
std::vector<RecordPair> TransitiveCompletion(std::span<const Component> components);

std::vector<std::vector<RecordId>> ComponentMembers(
    std::span<const Component> components);

}  // namespace groupmatch

#endif  // GROUPMATCH_GRAPH_H_
