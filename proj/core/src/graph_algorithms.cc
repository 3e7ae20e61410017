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

#include "groupmatch/graph_algorithms.h"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace groupmatch {

namespace {

constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();

// Unit-capacity flow network over an undirected graph. Each undirected edge
// e is a pair of opposite arcs 2e (u->v) and 2e+1 (v->u), each the other's
// residual twin, both with capacity 1.
class UnitFlow {
 public:
  explicit UnitFlow(const SimpleGraph& graph)
      : graph_(graph), flow_(2 * graph.edge_count(), 0) {}

  // Max-flow from s to t, stopping once `limit` units have been pushed.
  std::size_t Run(std::uint32_t s, std::uint32_t t, std::size_t limit) {
    std::fill(flow_.begin(), flow_.end(), 0);
    std::size_t total = 0;
    while (total < limit && Augment(s, t)) ++total;
    return total;
  }

  // Nodes reachable from s in the residual graph of the last Run().
  std::vector<bool> SourceSide(std::uint32_t s) const {
    std::vector<bool> seen(graph_.node_count(), false);
    std::vector<std::uint32_t> queue{s};
    seen[s] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const auto u = queue[head];
      for (const auto& arc : graph_.arcs(u)) {
        if (!seen[arc.to] && Residual(u, arc) > 0) {
          seen[arc.to] = true;
          queue.push_back(arc.to);
        }
      }
    }
    return seen;
  }

 private:
  std::size_t ArcIndex(std::uint32_t from, const SimpleGraph::Arc& arc) const {
    return 2 * arc.edge + (graph_.edge(arc.edge).first == from ? 0 : 1);
  }
  int Residual(std::uint32_t from, const SimpleGraph::Arc& arc) const {
    const std::size_t a = ArcIndex(from, arc);
    return 1 - flow_[a] + flow_[a ^ 1];
  }

  bool Augment(std::uint32_t s, std::uint32_t t) {
    const std::size_t n = graph_.node_count();
    parent_.assign(n, kUnvisited);
    parent_arc_.assign(n, 0);
    std::vector<std::uint32_t> queue{s};
    parent_[s] = s;
    for (std::size_t head = 0; head < queue.size() && parent_[t] == kUnvisited;
         ++head) {
      const auto u = queue[head];
      for (const auto& arc : graph_.arcs(u)) {
        if (parent_[arc.to] != kUnvisited || Residual(u, arc) <= 0) continue;
        parent_[arc.to] = u;
        parent_arc_[arc.to] = arc.edge;
        queue.push_back(arc.to);
      }
    }
    if (parent_[t] == kUnvisited) return false;
    for (auto v = t; v != s; v = parent_[v]) {
      const auto u = parent_[v];
      const std::size_t a = ArcIndex(u, {v, parent_arc_[v]});
      // Cancel opposite flow before adding forward flow.
      if (flow_[a ^ 1] > 0) {
        --flow_[a ^ 1];
      } else {
        ++flow_[a];
      }
    }
    return true;
  }

  const SimpleGraph& graph_;
  std::vector<int> flow_;
  std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> parent_arc_;
};

}  // namespace

SimpleGraph::SimpleGraph(
    std::size_t node_count,
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges)
    : edges_(std::move(edges)), adjacency_(node_count) {
  for (auto& [u, v] : edges_) {
    if (u == v) throw std::invalid_argument("self-loop in simple graph");
    if (u >= node_count || v >= node_count) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (v < u) std::swap(u, v);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const auto [u, v] = edges_[e];
    adjacency_[u].push_back({v, static_cast<std::uint32_t>(e)});
    adjacency_[v].push_back({u, static_cast<std::uint32_t>(e)});
  }
  for (auto& arcs : adjacency_) {
    std::sort(arcs.begin(), arcs.end(),
              [](const Arc& a, const Arc& b) { return a.to < b.to; });
  }
}

bool SimpleGraph::IsConnected() const {
  const std::size_t n = node_count();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<std::uint32_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const auto u = stack.back();
    stack.pop_back();
    for (const auto& arc : adjacency_[u]) {
      if (!seen[arc.to]) {
        seen[arc.to] = true;
        ++count;
        stack.push_back(arc.to);
      }
    }
  }
  return count == n;
}

SimpleGraph ToSimpleGraph(const Component& component) {
  std::unordered_map<RecordId, std::uint32_t> local;
  local.reserve(component.members.size());
  for (std::size_t i = 0; i < component.members.size(); ++i) {
    local.emplace(component.members[i], static_cast<std::uint32_t>(i));
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  edges.reserve(component.edges.size());
  for (const auto& e : component.edges) {
    auto a = local.find(e.first());
    auto b = local.find(e.second());
    if (a == local.end() || b == local.end()) {
      throw std::invalid_argument("component edge leaves the component");
    }
    edges.emplace_back(a->second, b->second);
  }
  return SimpleGraph(component.members.size(), std::move(edges));
}

std::vector<std::size_t> MinimumEdgeCut(const SimpleGraph& graph) {
  const std::size_t n = graph.node_count();
  if (n < 2) {
    throw std::invalid_argument("minimum edge cut needs at least two nodes");
  }
  if (!graph.IsConnected()) {
    throw std::invalid_argument("minimum edge cut needs a connected graph");
  }
  UnitFlow flow(graph);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::uint32_t best_sink = 1;
  for (std::uint32_t t = 1; t < n; ++t) {
    const std::size_t value = flow.Run(0, t, best);
    if (value < best) {
      best = value;
      best_sink = t;
      if (best == 1) break;  // connected graph: cannot do better
    }
  }
  flow.Run(0, best_sink, best);
  const auto side = flow.SourceSide(0);
  std::vector<std::size_t> cut;
  for (std::size_t e = 0; e < graph.edge_count(); ++e) {
    const auto [u, v] = graph.edge(e);
    if (side[u] != side[v]) cut.push_back(e);
  }
  return cut;
}

std::vector<double> EdgeBetweenness(const SimpleGraph& graph) {
  const std::size_t n = graph.node_count();
  std::vector<double> centrality(graph.edge_count(), 0.0);
  std::vector<double> sigma(n);
  std::vector<double> delta(n);
  std::vector<std::int64_t> dist(n);
  std::vector<std::uint32_t> order;
  order.reserve(n);
  for (std::uint32_t s = 0; s < n; ++s) {
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    std::fill(dist.begin(), dist.end(), -1);
    order.clear();
    sigma[s] = 1.0;
    dist[s] = 0;
    order.push_back(s);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const auto u = order[head];
      for (const auto& arc : graph.arcs(u)) {
        if (dist[arc.to] < 0) {
          dist[arc.to] = dist[u] + 1;
          order.push_back(arc.to);
        }
        if (dist[arc.to] == dist[u] + 1) sigma[arc.to] += sigma[u];
      }
    }
    for (std::size_t k = order.size(); k-- > 1;) {
      const auto w = order[k];
      for (const auto& arc : graph.arcs(w)) {
        const auto v = arc.to;
        if (dist[v] != dist[w] - 1) continue;
        const double c = sigma[v] / sigma[w] * (1.0 + delta[w]);
        centrality[arc.edge] += c;
        delta[v] += c;
      }
    }
  }
  // Every unordered pair was counted once from each endpoint.
  for (auto& c : centrality) c /= 2.0;
  return centrality;
}

std::size_t ArgmaxBetweenness(const std::vector<double>& centrality) {
  if (centrality.empty()) {
    throw std::invalid_argument("betweenness argmax over an empty edge set");
  }
  std::size_t best = 0;
  for (std::size_t e = 1; e < centrality.size(); ++e) {
    const double tolerance = 1e-9 * std::max(1.0, centrality[best]);
    if (centrality[e] > centrality[best] + tolerance) best = e;
  }
  return best;
}

std::vector<RecordPair> MinEdgeCut(const Component& component) {
  const SimpleGraph graph = ToSimpleGraph(component);
  std::vector<RecordPair> cut;
  for (auto e : MinimumEdgeCut(graph)) {
    const auto [u, v] = graph.edge(e);
    cut.emplace_back(component.members[u], component.members[v]);
  }
  return cut;
}

std::vector<std::pair<RecordPair, double>> EdgeBetweenness(
    const Component& component) {
  const SimpleGraph graph = ToSimpleGraph(component);
  const auto centrality = EdgeBetweenness(graph);
  std::vector<std::pair<RecordPair, double>> out;
  out.reserve(centrality.size());
  for (std::size_t e = 0; e < centrality.size(); ++e) {
    const auto [u, v] = graph.edge(e);
    out.emplace_back(RecordPair(component.members[u], component.members[v]),
                     centrality[e]);
  }
  return out;
}

}  // namespace groupmatch
