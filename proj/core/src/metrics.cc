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

#include "groupmatch/metrics.h"

#include <algorithm>
#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "groupmatch/errors.h"

namespace groupmatch {

namespace {

constexpr std::size_t kNoGroup = static_cast<std::size_t>(-1);

// True pairs inside one predicted group: sum over truth groups of C(k, 2)
// where k is how many of the group's members that truth group holds.
std::size_t TruePairsWithin(const std::vector<RecordId>& group,
                            const GroundTruth& truth) {
  std::unordered_map<std::size_t, std::size_t> per_truth_group;
  for (const auto& id : group) {
    const std::size_t g = truth.FindGroup(id).value_or(kNoGroup);
    if (g != kNoGroup) ++per_truth_group[g];
  }
  std::size_t tp = 0;
  for (const auto& [g, k] : per_truth_group) tp += PairsAmong(k);
  return tp;
}

void CheckDisjoint(std::span<const std::vector<RecordId>> groups) {
  std::unordered_set<RecordId> seen;
  for (const auto& g : groups) {
    for (const auto& id : g) {
      if (!seen.insert(id).second) {
        throw PartitionError(id.str(), "record '" + id.str() +
                                           "' appears in two predicted groups");
      }
    }
  }
}

}  // namespace

std::string_view StageName(Stage stage) {
  switch (stage) {
    case Stage::kPairwise:
      return "pairwise";
    case Stage::kPreCleanup:
      return "pre_cleanup";
    case Stage::kPostCleanup:
      return "post_cleanup";
  }
  return "unknown";
}

std::optional<Stage> ParseStage(std::string_view name) {
  for (auto s : {Stage::kPairwise, Stage::kPreCleanup, Stage::kPostCleanup}) {
    if (StageName(s) == name) return s;
  }
  return std::nullopt;
}

void DeriveRates(StageScores& s) {
  const double tp = static_cast<double>(s.tp);
  s.precision = s.tp + s.fp == 0 ? 0.0 : tp / static_cast<double>(s.tp + s.fp);
  s.recall = s.tp + s.fn == 0 ? 0.0 : tp / static_cast<double>(s.tp + s.fn);
  const double sum = s.precision + s.recall;
  s.f1 = sum > 0.0 ? 2.0 * s.precision * s.recall / sum : 0.0;
}

StageScores PairwiseScores(std::span<const RecordPair> predicted,
                           const GroundTruth& truth, Stage stage) {
  std::vector<RecordPair> unique(predicted.begin(), predicted.end());
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());

  StageScores s;
  s.stage = stage;
  for (const auto& p : unique) {
    const auto a = truth.FindGroup(p.first());
    const auto b = truth.FindGroup(p.second());
    if (a && b && *a == *b) {
      ++s.tp;
    } else {
      ++s.fp;
    }
  }
  s.fn = truth.true_pair_count() - s.tp;
  DeriveRates(s);
  return s;
}

namespace {

template <typename CountTrue>
double WeightedPurity(std::span<const std::vector<RecordId>> groups,
                      SingletonPolicy policy, CountTrue count_true) {
  double weighted = 0.0;
  double weight = 0.0;
  for (const auto& g : groups) {
    const std::size_t size = g.size();
    if (size == 0) continue;
    if (size == 1) {
      if (policy == SingletonPolicy::kCountAsPure) {
        weighted += 1.0;
        weight += 1.0;
      }
      continue;
    }
    const double purity = static_cast<double>(count_true(g)) /
                          static_cast<double>(PairsAmong(size));
    weighted += static_cast<double>(size) * purity;
    weight += static_cast<double>(size);
  }
  return weight == 0.0 ? 1.0 : weighted / weight;
}

}  // namespace

double ClusterPurity(std::span<const std::vector<RecordId>> groups,
                     const GroundTruth& truth, SingletonPolicy policy) {
  return WeightedPurity(groups, policy, [&](const std::vector<RecordId>& g) {
    return TruePairsWithin(g, truth);
  });
}

double ClusterPurity(std::span<const std::vector<RecordId>> groups,
                     const std::function<bool(const RecordPair&)>& is_true_match,
                     SingletonPolicy policy) {
  return WeightedPurity(groups, policy, [&](const std::vector<RecordId>& g) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < g.size(); ++i) {
      for (std::size_t j = i + 1; j < g.size(); ++j) {
        if (is_true_match(RecordPair(g[i], g[j]))) ++n;
      }
    }
    return n;
  });
}

StageScores GroupScores(std::span<const std::vector<RecordId>> groups,
                        const GroundTruth& truth, Stage stage,
                        SingletonPolicy policy) {
  CheckDisjoint(groups);
  StageScores s;
  s.stage = stage;
  std::size_t predicted = 0;
  std::size_t largest = 0;
  std::size_t count = 0;
  for (const auto& g : groups) {
    if (g.empty()) continue;
    ++count;
    largest = std::max(largest, g.size());
    predicted += PairsAmong(g.size());
    s.tp += TruePairsWithin(g, truth);
  }
  s.fp = predicted - s.tp;
  s.fn = truth.true_pair_count() - s.tp;
  DeriveRates(s);
  s.cluster_purity = ClusterPurity(groups, truth, policy);
  s.n_components = count;
  s.max_component_size = largest;
  return s;
}

}  // namespace groupmatch
