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

#include "groupmatch/graph.h"

#include <algorithm>
#include <numeric>

#include "groupmatch/errors.h"

namespace groupmatch {

MatchGraph::MatchGraph(std::vector<RecordId> nodes) : nodes_(std::move(nodes)) {
  std::sort(nodes_.begin(), nodes_.end());
  nodes_.erase(std::unique(nodes_.begin(), nodes_.end()), nodes_.end());
  index_.reserve(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    index_.emplace(nodes_[i], static_cast<NodeIndex>(i));
  }
  adjacency_.resize(nodes_.size());
}

MatchGraph MatchGraph::Build(std::span<const Prediction> predictions,
                             std::vector<RecordId> nodes) {
  MatchGraph graph(std::move(nodes));
  for (const auto& p : predictions) {
    if (!p.is_match()) continue;
    graph.AddEdge(p.pair, {p.score, p.provenance});
  }
  return graph;
}

MatchGraph::NodeIndex MatchGraph::IndexOf(const RecordId& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) {
    throw LookupError(id.str(),
                      "record '" + id.str() + "' is not a node of the graph");
  }
  return it->second;
}

MatchGraph::NodePair MatchGraph::Key(const RecordPair& pair) const {
  return {IndexOf(pair.first()), IndexOf(pair.second())};
}

void MatchGraph::AddEdge(const RecordPair& pair, EdgeAttributes attributes) {
  const NodePair key = Key(pair);
  auto [it, inserted] = edges_.emplace(key, attributes);
  if (!inserted) {
    it->second.score = std::max(it->second.score, attributes.score);
    it->second.provenance.Merge(attributes.provenance);
    return;
  }
  auto link = [](std::vector<NodeIndex>& adj, NodeIndex v) {
    adj.insert(std::lower_bound(adj.begin(), adj.end(), v), v);
  };
  link(adjacency_[key.first], key.second);
  link(adjacency_[key.second], key.first);
}

bool MatchGraph::RemoveEdge(const RecordPair& pair) {
  const NodePair key = Key(pair);
  if (edges_.erase(key) == 0) return false;
  auto unlink = [](std::vector<NodeIndex>& adj, NodeIndex v) {
    auto it = std::lower_bound(adj.begin(), adj.end(), v);
    adj.erase(it);
  };
  unlink(adjacency_[key.first], key.second);
  unlink(adjacency_[key.second], key.first);
  return true;
}

bool MatchGraph::HasEdge(const RecordPair& pair) const {
  return FindEdge(pair) != nullptr;
}

const EdgeAttributes* MatchGraph::FindEdge(const RecordPair& pair) const {
  auto a = index_.find(pair.first());
  auto b = index_.find(pair.second());
  if (a == index_.end() || b == index_.end()) return nullptr;
  auto it = edges_.find({a->second, b->second});
  return it == edges_.end() ? nullptr : &it->second;
}

std::vector<RecordPair> MatchGraph::Edges() const {
  std::vector<RecordPair> out;
  out.reserve(edges_.size());
  for (const auto& [key, attrs] : edges_) {
    out.emplace_back(nodes_[key.first], nodes_[key.second]);
  }
  return out;
}

std::vector<Component> ConnectedComponents(const MatchGraph& graph) {
  const std::size_t n = graph.node_count();
  std::vector<std::uint32_t> label(n, UINT32_MAX);
  std::vector<Component> components;
  std::vector<MatchGraph::NodeIndex> stack;
  std::vector<MatchGraph::NodeIndex> members;
  // Scanning in index (= RecordId) order yields components sorted by their
  // smallest member.
  for (std::size_t start = 0; start < n; ++start) {
    if (label[start] != UINT32_MAX) continue;
    const auto comp = static_cast<std::uint32_t>(components.size());
    members.clear();
    stack.push_back(static_cast<MatchGraph::NodeIndex>(start));
    label[start] = comp;
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      members.push_back(u);
      for (auto v : graph.Neighbors(u)) {
        if (label[v] == UINT32_MAX) {
          label[v] = comp;
          stack.push_back(v);
        }
      }
    }
    std::sort(members.begin(), members.end());
    Component c;
    c.members.reserve(members.size());
    for (auto u : members) c.members.push_back(graph.NodeId(u));
    for (auto u : members) {
      for (auto v : graph.Neighbors(u)) {
        if (u < v) c.edges.emplace_back(graph.NodeId(u), graph.NodeId(v));
      }
    }
    std::sort(c.edges.begin(), c.edges.end());
    components.push_back(std::move(c));
  }
  return components;
}

std::vector<RecordPair> TransitiveCompletion(
    std::span<const Component> components) {
  std::size_t total = 0;
  for (const auto& c : components) total += PairsAmong(c.size());
  std::vector<RecordPair> pairs;
  pairs.reserve(total);
  for (const auto& c : components) {
    for (std::size_t i = 0; i < c.members.size(); ++i) {
      for (std::size_t j = i + 1; j < c.members.size(); ++j) {
        pairs.emplace_back(c.members[i], c.members[j]);
      }
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

std::vector<std::vector<RecordId>> ComponentMembers(
    std::span<const Component> components) {
  std::vector<std::vector<RecordId>> out;
  out.reserve(components.size());
  for (const auto& c : components) out.push_back(c.members);
  return out;
}

}  // namespace groupmatch
