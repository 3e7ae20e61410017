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

#ifndef GROUPMATCH_CLEANUP_H_
#define GROUPMATCH_CLEANUP_H_

// Removal of false positive edges from the match graph before its components
// are emitted as entity groups.
//
// PreCleanup drops token-blocking-only edges inside very large components.
// GraphCleanup then works on every component larger than mu: components
// larger than gamma are split with minimum edge cuts; the remaining ones lose
// their highest-betweenness edge, one at a time, until every component has at
// most mu nodes. gamma == mu gives a cut-only cleanup and gamma == infinity
// a betweenness-only cleanup.

#include <cstddef>
#include <limits>
#include <string_view>
#include <vector>

#include "groupmatch/graph.h"

namespace groupmatch {

inline constexpr std::size_t kUnboundedSize =
    std::numeric_limits<std::size_t>::max();

struct CleanupParams {
  std::size_t gamma = 25;  // kUnboundedSize disables the cut phase
  std::size_t mu = 5;
  std::size_t pre_cleanup_limit = 50;

  // mu = number of sources, gamma = 5 * mu.
  static CleanupParams ForSources(std::size_t num_sources);

  // Throws std::invalid_argument unless gamma >= mu >= 1 and the pre-cleanup
  // limit is positive.
  void Validate() const;
};

enum class RemovalPhase : std::uint8_t { kPreCleanup, kMinCut, kBetweenness };

std::string_view RemovalPhaseName(RemovalPhase phase);  // "precleanup", ...

struct RemovedEdge {
  RecordPair pair;
  RemovalPhase phase;

  friend bool operator==(const RemovedEdge&, const RemovedEdge&) = default;
};

struct PreCleanupResult {
  MatchGraph graph;
  std::vector<RemovedEdge> removed;
  std::size_t passes = 0;  // passes that removed at least one edge
};

// Repeats until no component exceeds `limit` nodes: deletes every edge whose
// provenance is exactly {TokenOverlap} from each oversized component. Stops
// early when a pass removes nothing.
PreCleanupResult PreCleanup(MatchGraph graph, std::size_t limit);

struct CleanupResult {
  MatchGraph graph;
  std::vector<Component> components;
  // Removal order within a component is the algorithm's order; components
  // are listed by their smallest member.
  std::vector<RemovedEdge> removed;
};

// Components are independent, so each oversized one is cleaned on its own
// worker. The output does not depend on `threads`.
CleanupResult GraphCleanup(MatchGraph graph, const CleanupParams& params,
                           int threads = 1);

// Whole-graph formulation: repeatedly picks the globally largest component
// (smallest member breaks size ties) and cleans it one step. Same result as
// GraphCleanup(); much slower on large graphs.
CleanupResult GraphCleanupGlobalLoop(MatchGraph graph,
                                     const CleanupParams& params);

}  // namespace groupmatch

#endif  // GROUPMATCH_CLEANUP_H_
