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

#include "groupmatch/pipeline.h"

#include <algorithm>
#include <exception>
#include <stdexcept>

#include "groupmatch/errors.h"

namespace groupmatch {

namespace {

std::string CurrentMessage() {
  try {
    throw;
  } catch (const std::exception& e) {
    return e.what();
  }
}

template <typename Fn>
auto InStage(const char* stage, Fn fn) {
  try {
    return fn();
  } catch (const DataError&) {
    std::throw_with_nested(StageError(stage, CurrentMessage()));
  }
}

bool Has(const std::vector<BlockingKind>& kinds, BlockingKind kind) {
  return std::find(kinds.begin(), kinds.end(), kind) != kinds.end();
}

}  // namespace

std::string_view DatasetKindName(DatasetKind kind) {
  return kind == DatasetKind::kCompanies ? "companies" : "securities";
}

std::optional<DatasetKind> ParseDatasetKind(std::string_view name) {
  if (name == "companies") return DatasetKind::kCompanies;
  if (name == "securities") return DatasetKind::kSecurities;
  return std::nullopt;
}

void PipelineConfig::Validate() const {
  if (blockings.empty()) throw std::invalid_argument("blocking list is empty");
  if (dataset == DatasetKind::kCompanies && Has(blockings, BlockingKind::kIssuerMatch)) {
    throw std::invalid_argument("IssuerMatch blocks securities, not companies");
  }
  if (token_top_n == 0) throw std::invalid_argument("token_top_n must be at least 1");
  matcher.Validate();
  cleanup.Validate();
}

PipelineConfig Preset(std::string_view name) {
  PipelineConfig c;
  if (name == "synthetic-companies" || name == "real-companies") {
    c.dataset = DatasetKind::kCompanies;
    c.blockings = {BlockingKind::kIdOverlap, BlockingKind::kTokenOverlap};
    c.matcher = MatcherSpec::NameJaccard();
  } else if (name == "synthetic-securities" || name == "real-securities") {
    c.dataset = DatasetKind::kSecurities;
    c.blockings = {BlockingKind::kIdOverlap, BlockingKind::kIssuerMatch};
    c.matcher = MatcherSpec::ExactId();
  } else {
    throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
  }
  if (name.starts_with("real-")) {
    c.cleanup.gamma = 40;
    c.cleanup.mu = 8;
  } else {
    c.cleanup.gamma = 25;
    c.cleanup.mu = 5;
  }
  return c;
}

std::vector<std::string_view> PresetNames() {
  return {"synthetic-companies", "real-companies", "synthetic-securities",
          "real-securities"};
}

BlockingResult RunBlocking(const PipelineConfig& config, const PipelineInputs& inputs) {
  config.Validate();
  BlockingResult result;
  std::vector<std::vector<CandidatePair>> lists;
  const bool companies = config.dataset == DatasetKind::kCompanies;
  for (BlockingKind kind : config.blockings) {
    switch (kind) {
      case BlockingKind::kIdOverlap:
        if (!companies) {
          lists.push_back(IdOverlapSecurities(inputs.securities));
        } else if (inputs.securities.empty()) {
          result.warnings.push_back("IdOverlap skipped: no securities to link companies");
        } else {
          lists.push_back(IdOverlapCompanies(inputs.companies, inputs.securities));
        }
        break;
      case BlockingKind::kTokenOverlap: {
        const auto text = companies ? CompanyText(inputs.companies)
                                    : SecurityText(inputs.securities);
        lists.push_back(TokenOverlap(text, config.token_top_n, config.threads));
        break;
      }
      case BlockingKind::kIssuerMatch: {
        if (!inputs.company_groups) {
          throw std::invalid_argument("IssuerMatch needs company groups");
        }
        IssuerMatchStats stats;
        lists.push_back(IssuerMatch(inputs.securities, *inputs.company_groups, &stats));
        if (stats.securities_without_group > 0) {
          result.warnings.push_back(
              "IssuerMatch: " + std::to_string(stats.securities_without_group) +
              " securities have an issuer outside every company group");
        }
        break;
      }
    }
  }
  result.candidates = MergeCandidates(lists);
  return result;
}

std::vector<Prediction> RunMatching(const PipelineConfig& config,
                                    const RecordTable& table,
                                    std::span<const CandidatePair> candidates,
                                    std::vector<std::string>* warnings) {
  config.matcher.Validate();
  if (config.matcher.kind != MatcherKind::kExternal) {
    return PredictAll(candidates, table, config.matcher, config.threads);
  }
  ImportResult imported = ImportPredictions(config.matcher.predictions_path, candidates);
  if (warnings && imported.missing_candidates > 0) {
    warnings->push_back(std::to_string(imported.missing_candidates) +
                        " candidates have no external prediction; treated as no_match");
  }
  if (warnings && imported.unknown_rows > 0) {
    warnings->push_back(std::to_string(imported.unknown_rows) +
                        " external predictions are not candidate pairs");
  }
  return std::move(imported.predictions);
}

CleanupOutcome RunCleanup(const PipelineConfig& config,
                          std::span<const Prediction> predictions,
                          std::vector<RecordId> nodes) {
  config.cleanup.Validate();
  CleanupOutcome out;
  out.raw_graph = MatchGraph::Build(predictions, std::move(nodes));
  out.raw_components = ConnectedComponents(out.raw_graph);
  PreCleanupResult pre = PreCleanup(out.raw_graph, config.cleanup.pre_cleanup_limit);
  out.pre_cleanup_passes = pre.passes;
  CleanupResult cleaned = GraphCleanup(std::move(pre.graph), config.cleanup, config.threads);
  out.components = std::move(cleaned.components);
  out.removed = std::move(pre.removed);
  out.removed.insert(out.removed.end(), cleaned.removed.begin(), cleaned.removed.end());
  return out;
}

std::vector<RecordPair> MatchedPairs(std::span<const Prediction> predictions) {
  std::vector<RecordPair> pairs;
  for (const auto& p : predictions) {
    if (p.is_match()) pairs.push_back(p.pair);
  }
  return pairs;
}

std::vector<StageScores> EvaluateStages(std::span<const Prediction> predictions,
                                        std::span<const Component> raw_components,
                                        std::span<const Component> components,
                                        const GroundTruth& truth,
                                        SingletonPolicy policy) {
  const auto pairs = MatchedPairs(predictions);
  const auto raw = ComponentMembers(raw_components);
  const auto cleaned = ComponentMembers(components);
  return {PairwiseScores(pairs, truth, Stage::kPairwise),
          GroupScores(raw, truth, Stage::kPreCleanup, policy),
          GroupScores(cleaned, truth, Stage::kPostCleanup, policy)};
}

PipelineResult RunPipeline(const PipelineConfig& config, const PipelineInputs& inputs,
                           const GroundTruth* truth) {
  config.Validate();
  PipelineResult result;
  BlockingResult blocked = InStage("blocking", [&] { return RunBlocking(config, inputs); });
  result.candidates = std::move(blocked.candidates);
  result.warnings = std::move(blocked.warnings);

  const RecordTable table = InStage("matching", [&] {
    return RecordTable(
        std::vector<CompanyRecord>(inputs.companies.begin(), inputs.companies.end()),
        std::vector<SecurityRecord>(inputs.securities.begin(), inputs.securities.end()));
  });
  result.predictions = InStage("matching", [&] {
    return RunMatching(config, table, result.candidates, &result.warnings);
  });

  auto nodes = config.dataset == DatasetKind::kCompanies ? table.CompanyIds()
                                                         : table.SecurityIds();
  result.cleanup = InStage("cleanup", [&] {
    return RunCleanup(config, result.predictions, std::move(nodes));
  });
  if (truth) {
    result.scores = InStage("evaluation", [&] {
      return EvaluateStages(result.predictions, result.cleanup.raw_components,
                            result.cleanup.components, *truth, config.singleton_policy);
    });
  }
  return result;
}

}  // namespace groupmatch
