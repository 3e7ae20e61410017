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

#ifndef GROUPMATCH_MATCHER_H_
#define GROUPMATCH_MATCHER_H_

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "groupmatch/blocking.h"
#include "groupmatch/csv.h"
#include "groupmatch/model.h"

namespace groupmatch {

struct Prediction {
  RecordPair pair;
  MatchLabel label = MatchLabel::kNoMatch;
  double score = 0.0;
  Provenance provenance;
  // False for imported rows whose pair was not among the candidates.
  bool provenance_known = true;

  bool is_match() const { return label == MatchLabel::kMatch; }
  friend bool operator==(const Prediction&, const Prediction&) = default;
};

enum class MatcherKind : std::uint8_t { kExactId, kNameJaccard, kExternal };

std::string_view MatcherKindName(MatcherKind kind);  // "exact-id", ...
std::optional<MatcherKind> ParseMatcherKind(std::string_view name);

struct MatcherSpec {
  MatcherKind kind = MatcherKind::kNameJaccard;
  // Match iff score >= threshold. Used by the built-in matchers; imported
  // scores without a label are thresholded at 0.5.
  double threshold = 0.5;
  std::filesystem::path predictions_path;  // kExternal only

  static MatcherSpec ExactId(double threshold = 0.5) {
    return {MatcherKind::kExactId, threshold, {}};
  }
  static MatcherSpec NameJaccard(double threshold = 0.5) {
    return {MatcherKind::kNameJaccard, threshold, {}};
  }
  static MatcherSpec External(std::filesystem::path path) {
    return {MatcherKind::kExternal, 0.5, std::move(path)};
  }

  // Throws std::invalid_argument for a threshold outside [0, 1] or an
  // external spec without a predictions path.
  void Validate() const;
};

// Indexed view over the company and security tables with the per-record
// features the built-in matchers use (name token sets, issued identifiers).
class RecordTable {
 public:
  RecordTable() = default;
  // Throws DataError on duplicate record ids.
  RecordTable(std::vector<CompanyRecord> companies,
              std::vector<SecurityRecord> securities);

  std::span<const CompanyRecord> companies() const { return companies_; }
  std::span<const SecurityRecord> securities() const { return securities_; }

  const CompanyRecord* FindCompany(const RecordId& id) const;
  const SecurityRecord* FindSecurity(const RecordId& id) const;
  bool Contains(const RecordId& id) const { return index_.contains(id); }

  // Sorted unique name tokens of a record. Throws LookupError.
  const std::vector<std::string>& NameTokens(const RecordId& id) const;
  // Sorted unique "<scheme>:<value>" keys over all securities the company
  // issues. Empty for companies without securities.
  const std::vector<std::string>& IssuedIdentifiers(const RecordId& company) const;

  // All company ids, then all security ids, each sorted.
  std::vector<RecordId> CompanyIds() const;
  std::vector<RecordId> SecurityIds() const;

 private:
  struct Entry {
    bool is_company;
    std::size_t index;
  };

  const Entry& Lookup(const RecordId& id) const;

  std::vector<CompanyRecord> companies_;
  std::vector<SecurityRecord> securities_;
  std::unordered_map<RecordId, Entry> index_;
  std::vector<std::vector<std::string>> company_tokens_;
  std::vector<std::vector<std::string>> security_tokens_;
  std::vector<std::vector<std::string>> issued_identifiers_;
};

// Similarity of two records in [0, 1]:
//   kNameJaccard  Jaccard of normalized name token sets (0 if both empty)
//   kExactId      1 if the records share a scheme-scoped identifier (for
//                 companies: via any issued security), else name Jaccard
// Symmetric in a and b. Throws LookupError for unknown ids, RecordKindError
// when one id is a company and the other a security, and std::logic_error
// for kExternal specs.
double ScorePair(const MatcherSpec& spec, const RecordTable& table,
                 const RecordId& a, const RecordId& b);

// One prediction per candidate, in candidate order. Provenance is copied from
// the candidate. Throws LookupError naming the first unresolvable id.
std::vector<Prediction> PredictAll(std::span<const CandidatePair> candidates,
                                   const RecordTable& table,
                                   const MatcherSpec& spec, int threads = 1);

struct ImportResult {
  std::vector<Prediction> predictions;
  // Candidates absent from the file; defaulted to no_match with score 0.
  std::size_t missing_candidates = 0;
  // File rows whose pair is not a candidate; kept with provenance_known=false.
  std::size_t unknown_rows = 0;
};

// Reads externally computed predictions (columns id_a, id_b, score and an
// optional label) and joins them to the candidates on the canonical pair.
// An explicit label ("match"/"no_match"/"1"/"0") wins over the score;
// otherwise score >= 0.5 means match. Output lists candidates in order,
// then unknown rows in file order. A repeated pair keeps its last row.
// Throws ParseError with the line number for malformed rows.
ImportResult ImportPredictions(const CsvTable& file,
                               std::span<const CandidatePair> candidates);
ImportResult ImportPredictions(const std::filesystem::path& path,
                               std::span<const CandidatePair> candidates);

}  // namespace groupmatch

#endif  // GROUPMATCH_MATCHER_H_
