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

#ifndef GROUPMATCH_METRICS_H_
#define GROUPMATCH_METRICS_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "groupmatch/model.h"

namespace groupmatch {

// Evaluation points of the pipeline: raw positive predictions, transitive
// completion of the uncleaned graph, and completion after graph cleanup.
enum class Stage : std::uint8_t { kPairwise, kPreCleanup, kPostCleanup };

std::string_view StageName(Stage stage);  // "pairwise", "pre_cleanup", ...
std::optional<Stage> ParseStage(std::string_view name);

struct StageScores {
  Stage stage = Stage::kPairwise;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  // Group stages only.
  std::optional<double> cluster_purity;
  std::optional<std::size_t> n_components;
  std::optional<std::size_t> max_component_size;

  friend bool operator==(const StageScores&, const StageScores&) = default;
};

// How components of a single record enter the cluster purity average.
enum class SingletonPolicy : std::uint8_t {
  kCountAsPure,  // purity 1 with weight 1
  kExclude,      // left out of numerator and denominator
};

// Fills precision/recall/F1 from the counts. Precision is 0 when nothing was
// predicted, recall 0 when there is nothing to find, F1 0 when P + R = 0.
void DeriveRates(StageScores& scores);

// Scores a set of predicted match pairs against every true pair of `truth`
// (pairs never proposed by blocking count as false negatives). Duplicate
// pairs are counted once; pairs touching records outside the truth count as
// false positives.
StageScores PairwiseScores(std::span<const RecordPair> predicted,
                           const GroundTruth& truth,
                           Stage stage = Stage::kPairwise);

// Scores groups as complete graphs: every within-group pair is predicted.
// Also reports cluster purity and component statistics. Throws
// PartitionError if a record appears in two groups.
StageScores GroupScores(std::span<const std::vector<RecordId>> groups,
                        const GroundTruth& truth, Stage stage,
                        SingletonPolicy policy = SingletonPolicy::kCountAsPure);

// Size-weighted mean over groups of (true within-group pairs) /
// (all within-group pairs). Returns 1 when no group contributes.
double ClusterPurity(std::span<const std::vector<RecordId>> groups,
                     const GroundTruth& truth,
                     SingletonPolicy policy = SingletonPolicy::kCountAsPure);

// Same score against pair-level labels, which need not be transitive (for
// example a hand-labeled pair list).
double ClusterPurity(std::span<const std::vector<RecordId>> groups,
                     const std::function<bool(const RecordPair&)>& is_true_match,
                     SingletonPolicy policy = SingletonPolicy::kCountAsPure);

}  // namespace groupmatch

#endif  // GROUPMATCH_METRICS_H_
