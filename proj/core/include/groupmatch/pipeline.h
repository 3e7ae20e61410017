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

#ifndef GROUPMATCH_PIPELINE_H_
#define GROUPMATCH_PIPELINE_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "groupmatch/blocking.h"
#include "groupmatch/cleanup.h"
#include "groupmatch/graph.h"
#include "groupmatch/matcher.h"
#include "groupmatch/metrics.h"
#include "groupmatch/model.h"

namespace groupmatch {

enum class DatasetKind : std::uint8_t { kCompanies, kSecurities };

std::string_view DatasetKindName(DatasetKind kind);  // "companies" / "securities"
std::optional<DatasetKind> ParseDatasetKind(std::string_view name);

struct PipelineConfig {
  DatasetKind dataset = DatasetKind::kCompanies;
  std::vector<BlockingKind> blockings = {BlockingKind::kIdOverlap,
                                         BlockingKind::kTokenOverlap};
  MatcherSpec matcher;
  CleanupParams cleanup;
  std::size_t token_top_n = 5;
  SingletonPolicy singleton_policy = SingletonPolicy::kCountAsPure;
  int threads = 1;

  // Throws std::invalid_argument for an empty blocking list, IssuerMatch on
  // companies, token_top_n == 0, or invalid matcher/cleanup parameters.
  void Validate() const;
};

// "synthetic-companies", "real-companies", "synthetic-securities",
// "real-securities". Synthetic presets use gamma 25 / mu 5, real ones
// gamma 40 / mu 8. Throws std::invalid_argument for other names.
PipelineConfig Preset(std::string_view name);
std::vector<std::string_view> PresetNames();

struct PipelineInputs {
  std::span<const CompanyRecord> companies;
  std::span<const SecurityRecord> securities;
  // Needed by IssuerMatch.
  std::optional<std::vector<std::vector<RecordId>>> company_groups;
};

struct BlockingResult {
  std::vector<CandidatePair> candidates;
  std::vector<std::string> warnings;
};

// Runs the configured blockings and merges their output. Company IdOverlap
// without securities is skipped with a warning. Throws std::invalid_argument
// when IssuerMatch is requested without company groups.
BlockingResult RunBlocking(const PipelineConfig& config, const PipelineInputs& inputs);

// Built-in matchers score every candidate; the external matcher joins the
// predictions file to the candidates.
std::vector<Prediction> RunMatching(const PipelineConfig& config,
                                    const RecordTable& table,
                                    std::span<const CandidatePair> candidates,
                                    std::vector<std::string>* warnings = nullptr);

struct CleanupOutcome {
  MatchGraph raw_graph;                     // positive predictions only
  std::vector<Component> raw_components;    // completion without cleanup
  std::vector<Component> components;        // after pre-cleanup and cleanup
  std::vector<RemovedEdge> removed;         // pre-cleanup first
  std::size_t pre_cleanup_passes = 0;
};

// Builds the match graph over `nodes` and cleans it.
CleanupOutcome RunCleanup(const PipelineConfig& config,
                          std::span<const Prediction> predictions,
                          std::vector<RecordId> nodes);

// Pairwise, pre-cleanup and post-cleanup scores, in that order.
std::vector<StageScores> EvaluateStages(std::span<const Prediction> predictions,
                                        std::span<const Component> raw_components,
                                        std::span<const Component> components,
                                        const GroundTruth& truth,
                                        SingletonPolicy policy);

// Positive predictions as pairs.
std::vector<RecordPair> MatchedPairs(std::span<const Prediction> predictions);

struct PipelineResult {
  std::vector<CandidatePair> candidates;
  std::vector<Prediction> predictions;
  CleanupOutcome cleanup;
  std::vector<StageScores> scores;  // empty without truth
  std::vector<std::string> warnings;
};

// block -> match -> pre-cleanup -> cleanup -> completion, scored against
// `truth` when given.
PipelineResult RunPipeline(const PipelineConfig& config, const PipelineInputs& inputs,
                           const GroundTruth* truth = nullptr);

}  // namespace groupmatch

#endif  // GROUPMATCH_PIPELINE_H_
