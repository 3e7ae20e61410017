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

#ifndef GROUPMATCH_DATAGEN_H_
#define GROUPMATCH_DATAGEN_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "groupmatch/csv.h"
#include "groupmatch/model.h"
#include "groupmatch/random.h"

namespace groupmatch {

// One row of the base corpus; replicated once per source by Generate.
struct CompanySeed {
  std::string name;
  std::optional<std::string> city;
  std::optional<std::string> region;
  std::optional<std::string> country_code;
  std::optional<std::string> description;

  friend bool operator==(const CompanySeed&, const CompanySeed&) = default;
};

struct BaseCorpus {
  std::vector<CompanySeed> seeds;  // file order
  std::size_t skipped_rows = 0;    // rows with an empty name
};

// Requires a `name` column; city, region, country_code and description are
// optional columns and empty cells read as absent. Throws ParseError when the
// name column is missing and DataError when the file cannot be read.
BaseCorpus LoadBaseCorpus(const CsvTable& table);
BaseCorpus LoadBaseCorpus(const std::filesystem::path& path);

// Declaration order is the application order.
enum class ArtifactKind : std::uint8_t {
  kAcronymName,
  kInsertCorporateTerm,
  kCreateCorporateAcquisition,
  kCreateCorporateMerger,
  kParaphraseAttribute,
  kMultipleIds,
  kNoIdOverlaps,
  kMultipleSecurities,
};
inline constexpr std::size_t kNumArtifactKinds = 8;
inline constexpr std::array<ArtifactKind, kNumArtifactKinds> kAllArtifactKinds = {
    ArtifactKind::kAcronymName,       ArtifactKind::kInsertCorporateTerm,
    ArtifactKind::kCreateCorporateAcquisition,
    ArtifactKind::kCreateCorporateMerger,
    ArtifactKind::kParaphraseAttribute, ArtifactKind::kMultipleIds,
    ArtifactKind::kNoIdOverlaps,      ArtifactKind::kMultipleSecurities,
};

std::string_view ArtifactKindName(ArtifactKind kind);  // "AcronymName", ...
std::optional<ArtifactKind> ParseArtifactKind(std::string_view name);

inline constexpr double kDefaultArtifactRate = 0.15;

struct GenerationParams {
  std::size_t num_groups = 1000;
  std::size_t num_sources = 5;
  std::array<double, kNumArtifactKinds> artifact_rates = {
      kDefaultArtifactRate, kDefaultArtifactRate, kDefaultArtifactRate,
      kDefaultArtifactRate, kDefaultArtifactRate, kDefaultArtifactRate,
      kDefaultArtifactRate, kDefaultArtifactRate};
  std::uint64_t seed = 0;
  // Security entities per company group, drawn uniformly.
  std::size_t min_securities = 1;
  std::size_t max_securities = 2;
  // Per-source choice among unchanged / punctuation-stripped / upper-cased
  // names. Tokenization is invariant under all three for names whose
  // punctuation sits between words.
  bool name_jitter = true;

  double rate(ArtifactKind kind) const {
    return artifact_rates[static_cast<std::size_t>(kind)];
  }
  void set_rate(ArtifactKind kind, double p) {
    artifact_rates[static_cast<std::size_t>(kind)] = p;
  }
  void SetAllRates(double p) { artifact_rates.fill(p); }

  // Throws std::invalid_argument unless num_groups >= 1, num_sources >= 2,
  // 1 <= min_securities <= max_securities and every rate is in [0, 1].
  void Validate() const;
};

struct ArtifactLogEntry {
  ArtifactKind kind;
  bool applied = false;  // false: guard hit, nothing changed
  std::string detail;

  friend bool operator==(const ArtifactLogEntry&, const ArtifactLogEntry&) = default;
};

struct GroupProvenance {
  std::string group_id;  // seed group, e.g. "g000012"
  std::vector<ArtifactLogEntry> artifacts;

  friend bool operator==(const GroupProvenance&, const GroupProvenance&) = default;
};

struct GeneratedDataset {
  std::vector<CompanyRecord> companies;    // sorted by id
  std::vector<SecurityRecord> securities;  // sorted by id
  GroundTruth company_truth;
  GroundTruth security_truth;
  std::vector<GroupProvenance> provenance;  // seed group order
};

// Mutable per-group state before record ids are assigned. Companies are
// indexed by source; securities carry the index of their security entity.
struct CompanyDraft {
  std::string name;
  std::optional<std::string> city;
  std::optional<std::string> region;
  std::optional<std::string> country_code;
  std::optional<std::string> description;
};

struct SecurityDraft {
  std::size_t entity = 0;
  std::size_t source = 0;
  SecurityType type = SecurityType::kEquity;
  std::string name;
  IdentifierSet identifiers;
};

struct GroupDraft {
  std::string group_id;
  std::vector<CompanyDraft> companies;  // one per source
  std::vector<SecurityDraft> securities;
  std::vector<std::size_t> entities;    // security entities issued, ascending
};

// Holds every group draft plus the cross-group state artifacts touch: the
// identifier registry and the union-find structures behind the ground truth.
class GenerationState {
 public:
  // Replicates the first params.num_groups seeds. Throws std::invalid_argument
  // on invalid params or fewer seeds than groups.
  GenerationState(std::span<const CompanySeed> seeds,
                  const GenerationParams& params);

  std::size_t num_groups() const { return groups_.size(); }
  std::size_t num_sources() const { return num_sources_; }
  const GroupDraft& group(std::size_t g) const { return groups_[g]; }
  GroupDraft& mutable_group(std::size_t g) { return groups_[g]; }

  // Applies one artifact to group g. Partner groups for acquisitions and
  // mergers are drawn from the other groups.
  ArtifactLogEntry ApplyArtifact(ArtifactKind kind, std::size_t g, Rng& rng);

  // Company groups merged by acquisitions so far.
  bool SameCompanyEntity(std::size_t g1, std::size_t g2);
  bool SameSecurityEntity(std::size_t e1, std::size_t e2);

  // Assigns record ids in a seeded shuffled order and builds the truth.
  GeneratedDataset Finish(std::uint64_t seed,
                          std::vector<GroupProvenance> provenance);

 private:
  std::string Mint(IdScheme scheme, Rng& rng);
  IdentifierSet MintAll(Rng& rng);
  std::size_t NewEntity();
  std::vector<std::size_t> RandomSources(Rng& rng, bool allow_all = true);
  std::size_t Find(std::vector<std::size_t>& parent, std::size_t x);
  void Union(std::vector<std::size_t>& parent, std::size_t a, std::size_t b);

  std::size_t num_sources_ = 0;
  std::vector<GroupDraft> groups_;
  std::array<std::unordered_set<std::string>, kNumIdSchemes> registry_;
  std::vector<std::size_t> company_parent_;
  std::vector<std::size_t> entity_parent_;
};

// Runs replication and all artifacts. Deterministic in (seeds, params).
GeneratedDataset Generate(std::span<const CompanySeed> seeds,
                          const GenerationParams& params);

// First letters of the whitespace-separated words whose first character is
// alphanumeric, upper-cased. Empty when the name has fewer than two words.
std::string Acronym(std::string_view name);

// Seeded rule-based rewrite: drops some stopwords, swaps words from a fixed
// synonym table and reorders comma-separated clauses.
std::string ParaphraseDescription(std::string_view text, Rng& rng);

enum class Split : std::uint8_t { kTrain, kVal, kTest };

std::string_view SplitName(Split split);  // "train" / "val" / "test"
std::optional<Split> ParseSplit(std::string_view name);

struct SplitRatios {
  double train = 0.6;
  double val = 0.2;
  double test = 0.2;
};

// group_id -> split.
using SplitAssignment = std::map<std::string, Split>;

// Shuffles the group list and cuts it at floor(train * n) and
// floor(val * n); the remainder goes to test. Throws std::invalid_argument
// when the truth is empty, a ratio is negative or they do not sum to 1
// within 1e-9.
SplitAssignment SplitGroups(const GroundTruth& truth, const SplitRatios& ratios,
                            std::uint64_t seed);

struct LabeledPair {
  RecordPair pair;
  MatchLabel label = MatchLabel::kNoMatch;

  friend bool operator==(const LabeledPair&, const LabeledPair&) = default;
};

struct TrainingPairs {
  std::vector<LabeledPair> pairs;  // positives sorted, then negatives sorted
  std::size_t requested_negatives = 0;
  std::optional<std::string> warning;  // set when negatives ran short
};

// Every true pair of the chosen split plus neg_ratio times as many distinct
// within-split non-matching pairs drawn uniformly. Groups missing from the
// assignment are ignored. Throws std::invalid_argument for a negative ratio.
TrainingPairs ExportTrainingPairs(const GroundTruth& truth,
                                  const SplitAssignment& assignment,
                                  Split which, double neg_ratio,
                                  std::uint64_t seed);

struct DatasetStatistics {
  std::size_t sources = 0;
  std::size_t entities = 0;
  std::size_t records = 0;
  std::size_t matches = 0;
  double matches_per_entity = 0.0;
  double description_share = 0.0;  // companies only
};

DatasetStatistics CompanyStatistics(const GeneratedDataset& data);
DatasetStatistics SecurityStatistics(const GeneratedDataset& data);

}  // namespace groupmatch

#endif  // GROUPMATCH_DATAGEN_H_
