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

// groupmatch command-line tool: synthetic data generation, the staged
// matching pipeline, and evaluation. Exit codes: 0 success, 1 usage error,
// 2 data error.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "groupmatch/blocking.h"
#include "groupmatch/cleanup.h"
#include "groupmatch/csv.h"
#include "groupmatch/datagen.h"
#include "groupmatch/errors.h"
#include "groupmatch/io.h"
#include "groupmatch/matcher.h"
#include "groupmatch/metrics.h"
#include "groupmatch/parallel.h"
#include "groupmatch/pipeline.h"

namespace fs = std::filesystem;
using namespace groupmatch;

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void Warn(const std::string& message) { std::cerr << "warning: " << message << "\n"; }

void WarnAll(const std::vector<std::string>& messages) {
  for (const auto& m : messages) Warn(m);
}

std::size_t ParseSize(const std::string& text, const std::string& flag) {
  if (text == "inf" || text == "infinity") return kUnboundedSize;
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(text);
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw UsageError(flag + " expects a positive integer or 'inf', got '" + text + "'");
  }
}

// Flags shared by the stage subcommands. Empty strings mean "not given".
struct Options {
  std::string preset;
  std::string dataset;
  std::vector<std::string> blockings;
  std::string companies;
  std::string securities;
  std::string company_groups;
  std::string candidates;
  std::string predictions;
  std::string matcher;
  std::optional<double> threshold;
  std::string gamma;
  std::string mu;
  std::optional<std::size_t> pre_cleanup_limit;
  std::optional<std::size_t> token_top_n;
  std::uint64_t seed = 0;
  int threads = 0;
  std::string out_dir = ".";
  std::string truth;
  std::string report;
  std::string groups;
  std::string raw_groups;
  bool exclude_singletons = false;
};

void AddInputFlags(CLI::App* cmd, Options& o) {
  cmd->add_option("--companies", o.companies, "companies.csv");
  cmd->add_option("--securities", o.securities, "securities.csv");
}

void AddConfigFlags(CLI::App* cmd, Options& o) {
  cmd->add_option("--preset", o.preset, "synthetic-companies | real-companies | "
                                        "synthetic-securities | real-securities");
  cmd->add_option("--dataset", o.dataset, "companies | securities");
  cmd->add_option("--threads", o.threads, "worker threads (0 = all cores)")
      ->check(CLI::NonNegativeNumber);
}

void AddBlockingFlags(CLI::App* cmd, Options& o) {
  cmd->add_option("--blocking", o.blockings, "IdOverlap, TokenOverlap, IssuerMatch");
  cmd->add_option("--company-groups", o.company_groups,
                  "company groups CSV used by IssuerMatch");
  cmd->add_option("--token-top-n", o.token_top_n, "TokenOverlap neighbours per record")
      ->check(CLI::PositiveNumber);
}

void AddMatcherFlags(CLI::App* cmd, Options& o) {
  cmd->add_option("--matcher", o.matcher, "exact-id | name-jaccard | external");
  cmd->add_option("--threshold", o.threshold, "match iff score >= threshold")
      ->check(CLI::Range(0.0, 1.0));
}

void AddCleanupFlags(CLI::App* cmd, Options& o) {
  cmd->add_option("--gamma", o.gamma, "min-cut size threshold (or 'inf')");
  cmd->add_option("--mu", o.mu, "final component size bound");
  cmd->add_option("--pre-cleanup-limit", o.pre_cleanup_limit,
                  "component size above which token-only edges are dropped")
      ->check(CLI::PositiveNumber);
}

PipelineConfig BuildConfig(const Options& o) {
  PipelineConfig c;
  if (!o.preset.empty()) {
    try {
      c = Preset(o.preset);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (!o.dataset.empty()) {
    const auto kind = ParseDatasetKind(o.dataset);
    if (!kind) throw UsageError("unknown dataset '" + o.dataset + "'");
    c.dataset = *kind;
  }
  if (!o.blockings.empty()) {
    c.blockings.clear();
    for (const auto& name : o.blockings) {
      const auto kind = ParseBlockingKind(name);
      if (!kind) throw UsageError("unknown blocking '" + name + "'");
      c.blockings.push_back(*kind);
    }
  }
  if (!o.matcher.empty()) {
    const auto kind = ParseMatcherKind(o.matcher);
    if (!kind) throw UsageError("unknown matcher '" + o.matcher + "'");
    c.matcher.kind = *kind;
  }
  if (o.threshold) c.matcher.threshold = *o.threshold;
  if (c.matcher.kind == MatcherKind::kExternal) c.matcher.predictions_path = o.predictions;
  if (!o.gamma.empty()) c.cleanup.gamma = ParseSize(o.gamma, "--gamma");
  if (!o.mu.empty()) c.cleanup.mu = ParseSize(o.mu, "--mu");
  if (o.pre_cleanup_limit) c.cleanup.pre_cleanup_limit = *o.pre_cleanup_limit;
  if (o.token_top_n) c.token_top_n = *o.token_top_n;
  c.threads = ResolveThreads(o.threads);
  c.singleton_policy =
      o.exclude_singletons ? SingletonPolicy::kExclude : SingletonPolicy::kCountAsPure;
  try {
    c.Validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return c;
}

struct Tables {
  std::vector<CompanyRecord> companies;
  std::vector<SecurityRecord> securities;
};

Tables LoadTables(const Options& o, const PipelineConfig& c) {
  Tables t;
  if (!o.companies.empty()) t.companies = ReadCompanies(ReadCsvFile(o.companies));
  if (!o.securities.empty()) t.securities = ReadSecurities(ReadCsvFile(o.securities));
  if (c.dataset == DatasetKind::kCompanies && o.companies.empty()) {
    throw UsageError("--companies is required for the companies dataset");
  }
  if (c.dataset == DatasetKind::kSecurities && o.securities.empty()) {
    throw UsageError("--securities is required for the securities dataset");
  }
  return t;
}

std::vector<std::vector<RecordId>> GroupMembers(const std::vector<EntityGroup>& groups) {
  std::vector<std::vector<RecordId>> out;
  out.reserve(groups.size());
  for (const auto& g : groups) out.push_back(g.members);
  return out;
}

// Company groups for IssuerMatch: read from --company-groups, or derived by
// running the companies pipeline with the same matcher and cleanup settings.
std::optional<std::vector<std::vector<RecordId>>> CompanyGroupsFor(
    const Options& o, const PipelineConfig& c, const Tables& t) {
  if (c.dataset != DatasetKind::kSecurities) return std::nullopt;
  if (std::find(c.blockings.begin(), c.blockings.end(), BlockingKind::kIssuerMatch) ==
      c.blockings.end()) {
    return std::nullopt;
  }
  if (!o.company_groups.empty()) {
    return GroupMembers(ReadGroups(ReadCsvFile(o.company_groups), GroupKind::kCompany));
  }
  if (t.companies.empty()) {
    throw UsageError("IssuerMatch needs --company-groups or --companies");
  }
  Warn("no --company-groups given; deriving them with the companies pipeline");
  PipelineConfig companies = c;
  companies.dataset = DatasetKind::kCompanies;
  companies.blockings = {BlockingKind::kIdOverlap, BlockingKind::kTokenOverlap};
  companies.matcher = MatcherSpec::NameJaccard(c.matcher.threshold);
  const PipelineResult r = RunPipeline(companies, {t.companies, t.securities, std::nullopt});
  return ComponentMembers(r.cleanup.components);
}

void PrintScores(const std::vector<StageScores>& scores) {
  std::printf("%-13s %9s %9s %9s %9s %11s %9s\n", "stage", "precision", "recall", "f1",
              "purity", "components", "max_size");
  for (const auto& s : scores) {
    std::printf("%-13s %9.4f %9.4f %9.4f", std::string(StageName(s.stage)).c_str(),
                s.precision, s.recall, s.f1);
    if (s.cluster_purity) {
      std::printf(" %9.4f %11zu %9zu\n", *s.cluster_purity, *s.n_components,
                  *s.max_component_size);
    } else {
      std::printf(" %9s %11s %9s\n", "-", "-", "-");
    }
  }
}

void WriteReport(const std::string& path, const std::vector<StageScores>& scores) {
  WriteFile(path, [&](std::ostream& out) { out << MetricsReportJson(scores); });
}

int RunGenerate(const std::string& base, const GenerationParams& params,
                const std::map<std::string, double>& artifact_rates, double neg_ratio,
                const std::vector<double>& split_ratios, const std::string& out_dir);

SplitRatios NormalizeRatios(const std::vector<double>& r) {
  if (r.size() != 3 || r[0] < 0 || r[1] < 0 || r[2] < 0) {
    throw UsageError("--split-ratios expects three non-negative numbers");
  }
  const double sum = r[0] + r[1] + r[2];
  if (sum <= 0) throw UsageError("--split-ratios must not all be zero");
  if (std::abs(sum - 1.0) > 1e-9) {
    Warn("split ratios sum to " + std::to_string(sum) + "; re-normalized");
  }
  SplitRatios out{r[0] / sum, r[1] / sum, 0.0};
  out.test = 1.0 - out.train - out.val;
  return out;
}

void WritePairsForSplits(const GroundTruth& truth, const SplitAssignment& splits,
                         double neg_ratio, std::uint64_t seed, const fs::path& dir,
                         const std::string& prefix) {
  for (Split s : {Split::kTrain, Split::kVal, Split::kTest}) {
    const TrainingPairs pairs = ExportTrainingPairs(truth, splits, s, neg_ratio, seed);
    if (pairs.warning) Warn(*pairs.warning);
    WriteFile(dir / (prefix + std::string(SplitName(s)) + ".csv"),
              [&](std::ostream& out) { WriteLabeledPairs(out, pairs.pairs); });
  }
}

SplitAssignment SplitBoth(const GroundTruth& companies, const GroundTruth& securities,
                          const SplitRatios& ratios, std::uint64_t seed) {
  SplitAssignment splits = SplitGroups(companies, ratios, MixSeed(seed, "companies"));
  if (!securities.groups().empty()) {
    splits.merge(SplitGroups(securities, ratios, MixSeed(seed, "securities")));
  }
  return splits;
}

int RunGenerate(const std::string& base, const GenerationParams& params_in,
                const std::map<std::string, double>& artifact_rates, double neg_ratio,
                const std::vector<double>& split_ratios, const std::string& out_dir) {
  GenerationParams params = params_in;
  for (const auto& [name, p] : artifact_rates) {
    const auto kind = ParseArtifactKind(name);
    if (!kind) throw UsageError("unknown artifact kind '" + name + "'");
    params.set_rate(*kind, p);
  }
  try {
    params.Validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const SplitRatios ratios = NormalizeRatios(split_ratios);
  const BaseCorpus corpus = LoadBaseCorpus(fs::path(base));
  if (corpus.skipped_rows > 0) {
    Warn(std::to_string(corpus.skipped_rows) + " base rows without a name skipped");
  }
  if (corpus.seeds.size() < params.num_groups) {
    throw DataError("base corpus '" + base + "' has " + std::to_string(corpus.seeds.size()) +
                    " usable rows, " + std::to_string(params.num_groups) + " groups requested");
  }
  const GeneratedDataset data = Generate(corpus.seeds, params);
  const fs::path dir(out_dir);
  WriteFile(dir / "companies.csv", [&](std::ostream& o) { WriteCompanies(o, data.companies); });
  WriteFile(dir / "securities.csv",
            [&](std::ostream& o) { WriteSecurities(o, data.securities); });
  WriteFile(dir / "company_groups.csv",
            [&](std::ostream& o) { WriteGroups(o, data.company_truth.groups()); });
  WriteFile(dir / "security_groups.csv",
            [&](std::ostream& o) { WriteGroups(o, data.security_truth.groups()); });
  WriteFile(dir / "provenance.jsonl",
            [&](std::ostream& o) { WriteProvenance(o, data.provenance); });
  const SplitAssignment splits =
      SplitBoth(data.company_truth, data.security_truth, ratios, params.seed);
  WriteFile(dir / "splits.csv", [&](std::ostream& o) { WriteSplits(o, splits); });
  WritePairsForSplits(data.company_truth, splits, neg_ratio, params.seed, dir, "pairs_");
  WritePairsForSplits(data.security_truth, splits, neg_ratio, params.seed, dir,
                      "security_pairs_");

  const DatasetStatistics cs = CompanyStatistics(data);
  const DatasetStatistics ss = SecurityStatistics(data);
  std::printf("%-11s %8s %9s %8s %9s %14s %13s\n", "dataset", "sources", "entities",
              "records", "matches", "matches/entity", "descriptions");
  std::printf("%-11s %8zu %9zu %8zu %9zu %14.2f %12.1f%%\n", "companies", cs.sources,
              cs.entities, cs.records, cs.matches, cs.matches_per_entity,
              100.0 * cs.description_share);
  std::printf("%-11s %8zu %9zu %8zu %9zu %14.2f %13s\n", "securities", ss.sources,
              ss.entities, ss.records, ss.matches, ss.matches_per_entity, "-");
  return 0;
}

int RunBlock(const Options& o) {
  const PipelineConfig c = BuildConfig(o);
  const Tables t = LoadTables(o, c);
  const BlockingResult r =
      RunBlocking(c, {t.companies, t.securities, CompanyGroupsFor(o, c, t)});
  WarnAll(r.warnings);
  WriteFile(fs::path(o.out_dir) / "candidates.csv",
            [&](std::ostream& out) { WriteCandidates(out, r.candidates); });
  std::printf("%zu candidate pairs\n", r.candidates.size());
  return 0;
}

int RunMatch(const Options& o) {
  const PipelineConfig c = BuildConfig(o);
  if (o.candidates.empty()) throw UsageError("--candidates is required");
  const Tables t = LoadTables(o, c);
  const auto candidates = ReadCandidates(ReadCsvFile(o.candidates));
  const RecordTable table(t.companies, t.securities);
  std::vector<std::string> warnings;
  const auto predictions = RunMatching(c, table, candidates, &warnings);
  WarnAll(warnings);
  WriteFile(fs::path(o.out_dir) / "predictions.csv",
            [&](std::ostream& out) { WritePredictions(out, predictions); });
  std::printf("%zu predictions, %zu matches\n", predictions.size(),
              MatchedPairs(predictions).size());
  return 0;
}

std::vector<RecordId> NodesFor(const PipelineConfig& c, const Tables& t) {
  std::vector<RecordId> nodes;
  if (c.dataset == DatasetKind::kCompanies) {
    for (const auto& r : t.companies) nodes.push_back(r.id);
  } else {
    for (const auto& r : t.securities) nodes.push_back(r.id);
  }
  return nodes;
}

void WriteCleanupOutputs(const fs::path& dir, const PipelineConfig& c,
                         const CleanupOutcome& outcome) {
  const GroupKind kind =
      c.dataset == DatasetKind::kCompanies ? GroupKind::kCompany : GroupKind::kSecurity;
  const auto groups = NamePredictedGroups(ComponentMembers(outcome.components), kind);
  const auto raw = NamePredictedGroups(ComponentMembers(outcome.raw_components), kind);
  WriteFile(dir / "groups.csv", [&](std::ostream& out) { WriteGroups(out, groups); });
  WriteFile(dir / "raw_groups.csv", [&](std::ostream& out) { WriteGroups(out, raw); });
  WriteFile(dir / "audit.jsonl", [&](std::ostream& out) { WriteAudit(out, outcome.removed); });
}

int RunCleanupCmd(const Options& o) {
  PipelineConfig c = BuildConfig(o);
  if (o.predictions.empty()) throw UsageError("--predictions is required");
  const Tables t = LoadTables(o, c);
  const auto predictions = ReadPredictions(ReadCsvFile(o.predictions));
  const CleanupOutcome outcome = RunCleanup(c, predictions, NodesFor(c, t));
  WriteCleanupOutputs(o.out_dir, c, outcome);
  std::printf("%zu groups, %zu edges removed\n", outcome.components.size(),
              outcome.removed.size());
  return 0;
}

GroundTruth LoadTruth(const std::string& path, GroupKind kind) {
  return GroundTruth(ReadGroups(ReadCsvFile(path), kind));
}

int RunEvaluate(const Options& o) {
  if (o.truth.empty()) throw UsageError("--truth is required");
  if (o.predictions.empty() && o.groups.empty() && o.raw_groups.empty()) {
    throw UsageError("give --predictions, --raw-groups and/or --groups to evaluate");
  }
  const GroundTruth truth = LoadTruth(o.truth, GroupKind::kCompany);
  const SingletonPolicy policy =
      o.exclude_singletons ? SingletonPolicy::kExclude : SingletonPolicy::kCountAsPure;
  std::vector<StageScores> scores;
  if (!o.predictions.empty()) {
    const auto predictions = ReadPredictions(ReadCsvFile(o.predictions));
    scores.push_back(PairwiseScores(MatchedPairs(predictions), truth, Stage::kPairwise));
  }
  auto group_stage = [&](const std::string& path, Stage stage) {
    const auto groups = GroupMembers(ReadGroups(ReadCsvFile(path), GroupKind::kCompany));
    scores.push_back(GroupScores(groups, truth, stage, policy));
  };
  if (!o.raw_groups.empty()) group_stage(o.raw_groups, Stage::kPreCleanup);
  if (!o.groups.empty()) group_stage(o.groups, Stage::kPostCleanup);
  PrintScores(scores);
  if (!o.report.empty()) WriteReport(o.report, scores);
  return 0;
}

int RunPipelineCmd(const Options& o) {
  const PipelineConfig c = BuildConfig(o);
  const Tables t = LoadTables(o, c);
  std::optional<GroundTruth> truth;
  if (!o.truth.empty()) {
    truth = LoadTruth(o.truth, c.dataset == DatasetKind::kCompanies ? GroupKind::kCompany
                                                                    : GroupKind::kSecurity);
  }
  const PipelineResult r = RunPipeline(
      c, {t.companies, t.securities, CompanyGroupsFor(o, c, t)}, truth ? &*truth : nullptr);
  WarnAll(r.warnings);
  const fs::path dir(o.out_dir);
  WriteFile(dir / "candidates.csv",
            [&](std::ostream& out) { WriteCandidates(out, r.candidates); });
  WriteFile(dir / "predictions.csv",
            [&](std::ostream& out) { WritePredictions(out, r.predictions); });
  WriteCleanupOutputs(dir, c, r.cleanup);
  std::printf("%zu candidates, %zu matches, %zu groups\n", r.candidates.size(),
              MatchedPairs(r.predictions).size(), r.cleanup.components.size());
  if (truth) {
    PrintScores(r.scores);
    WriteReport(o.report.empty() ? (dir / "report.json").string() : o.report, r.scores);
  }
  return 0;
}

int RunExportPairs(const Options& o, double neg_ratio, const std::vector<double>& ratios,
                   const std::string& splits_path) {
  if (o.truth.empty()) throw UsageError("--truth is required");
  if (neg_ratio < 0) throw UsageError("--neg-ratio must be >= 0");
  const GroundTruth truth = LoadTruth(o.truth, GroupKind::kCompany);
  SplitAssignment splits;
  if (!splits_path.empty()) {
    splits = ReadSplits(ReadCsvFile(splits_path));
  } else {
    splits = SplitGroups(truth, NormalizeRatios(ratios), MixSeed(o.seed, "companies"));
    WriteFile(fs::path(o.out_dir) / "splits.csv",
              [&](std::ostream& out) { WriteSplits(out, splits); });
  }
  WritePairsForSplits(truth, splits, neg_ratio, o.seed, o.out_dir, "pairs_");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"groupmatch: entity group matching over multi-source records"};
  app.require_subcommand(1);
  Options o;

  auto* gen = app.add_subcommand("generate", "generate a synthetic dataset");
  std::string base;
  GenerationParams gp;
  double rate = kDefaultArtifactRate;
  std::map<std::string, double> artifact_rates;
  double neg_ratio = 5.0;
  std::vector<double> split_ratios = {0.6, 0.2, 0.2};
  bool no_jitter = false;
  gen->add_option("--base", base, "base corpus CSV")->required()->check(CLI::ExistingFile);
  gen->add_option("--groups", gp.num_groups, "company groups")->check(CLI::PositiveNumber);
  gen->add_option("--sources", gp.num_sources, "data sources")->check(CLI::Range(2, 1000));
  gen->add_option("--rate", rate, "rate of every artifact kind")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--artifact-rate", artifact_rates,
                  "per-kind rate override, e.g. --artifact-rate AcronymName 0.3");
  gen->add_option("--min-securities", gp.min_securities, "security entities per group, lower bound")->check(CLI::PositiveNumber);
  gen->add_option("--max-securities", gp.max_securities, "security entities per group, upper bound")->check(CLI::PositiveNumber);
  gen->add_flag("--no-name-jitter", no_jitter, "keep base names in every source");
  gen->add_option("--neg-ratio", neg_ratio, "negatives per positive in pairs_*.csv")
      ->check(CLI::NonNegativeNumber);
  gen->add_option("--split-ratios", split_ratios, "train val test")->expected(3);
  gen->add_option("--seed", gp.seed, "generator seed");
  gen->add_option("--out-dir", o.out_dir, "output directory (created if missing)");

  auto* block = app.add_subcommand("block", "write candidate pairs");
  AddConfigFlags(block, o);
  AddInputFlags(block, o);
  AddBlockingFlags(block, o);
  block->add_option("--out-dir", o.out_dir, "output directory (created if missing)");

  auto* match = app.add_subcommand("match", "score candidate pairs");
  AddConfigFlags(match, o);
  AddInputFlags(match, o);
  AddMatcherFlags(match, o);
  match->add_option("--candidates", o.candidates, "candidates.csv")->check(CLI::ExistingFile);
  match->add_option("--predictions", o.predictions, "external predictions (external matcher)");
  match->add_option("--out-dir", o.out_dir, "output directory (created if missing)");

  auto* cleanup = app.add_subcommand("cleanup", "clean the match graph into groups");
  AddConfigFlags(cleanup, o);
  AddInputFlags(cleanup, o);
  AddCleanupFlags(cleanup, o);
  cleanup->add_option("--predictions", o.predictions, "predictions.csv");
  cleanup->add_option("--out-dir", o.out_dir, "output directory (created if missing)");

  auto* evaluate = app.add_subcommand("evaluate", "score predictions and groups");
  evaluate->add_option("--truth", o.truth, "ground-truth groups CSV");
  evaluate->add_option("--predictions", o.predictions, "predictions.csv (pairwise stage)");
  evaluate->add_option("--raw-groups", o.raw_groups, "groups before cleanup");
  evaluate->add_option("--groups", o.groups, "groups after cleanup");
  evaluate->add_option("--report", o.report, "JSON report path");
  evaluate->add_flag("--exclude-singletons", o.exclude_singletons,
                     "leave single-record groups out of cluster purity");

  auto* pipeline = app.add_subcommand("pipeline", "block, match, clean and evaluate");
  AddConfigFlags(pipeline, o);
  AddInputFlags(pipeline, o);
  AddBlockingFlags(pipeline, o);
  AddMatcherFlags(pipeline, o);
  AddCleanupFlags(pipeline, o);
  pipeline->add_option("--predictions", o.predictions, "external predictions");
  pipeline->add_option("--truth", o.truth, "ground-truth groups CSV");
  pipeline->add_option("--report", o.report, "JSON report path");
  pipeline->add_option("--out-dir", o.out_dir, "output directory (created if missing)");
  pipeline->add_flag("--exclude-singletons", o.exclude_singletons,
                     "leave single-record groups out of cluster purity");

  auto* export_pairs = app.add_subcommand("export-pairs", "write labeled training pairs");
  std::string splits_path;
  export_pairs->add_option("--truth", o.truth, "ground-truth groups CSV");
  export_pairs->add_option("--splits", splits_path, "existing splits.csv");
  export_pairs->add_option("--neg-ratio", neg_ratio, "negatives per positive")
      ->check(CLI::NonNegativeNumber);
  export_pairs->add_option("--split-ratios", split_ratios, "train val test")->expected(3);
  export_pairs->add_option("--seed", o.seed, "split and negative sampling seed");
  export_pairs->add_option("--out-dir", o.out_dir, "output directory (created if missing)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (gen->parsed()) {
      gp.SetAllRates(rate);
      gp.name_jitter = !no_jitter;
      return RunGenerate(base, gp, artifact_rates, neg_ratio, split_ratios, o.out_dir);
    }
    if (block->parsed()) return RunBlock(o);
    if (match->parsed()) return RunMatch(o);
    if (cleanup->parsed()) return RunCleanupCmd(o);
    if (evaluate->parsed()) return RunEvaluate(o);
    if (pipeline->parsed()) return RunPipelineCmd(o);
    if (export_pairs->parsed()) return RunExportPairs(o, neg_ratio, split_ratios, splits_path);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
