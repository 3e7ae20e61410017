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

#ifndef GROUPMATCH_BLOCKING_H_
#define GROUPMATCH_BLOCKING_H_

// Candidate-pair generation. Three blockings are provided:
//
//   IdOverlap     records (or companies via their securities) that share an
//                 identifier value under the same scheme
//   TokenOverlap  for every record, the top-n cross-source records by number
//                 of shared normalized tokens
//   IssuerMatch   securities whose issuers were grouped together by a prior
//                 company matching run
//
// Every blocking only pairs records from different data sources and returns
// its pairs canonical, deduplicated and sorted.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "groupmatch/model.h"

namespace groupmatch {

enum class BlockingKind : std::uint8_t { kIdOverlap, kTokenOverlap, kIssuerMatch };
inline constexpr std::size_t kNumBlockingKinds = 3;

std::string_view BlockingKindName(BlockingKind kind);  // "IdOverlap", ...
// Accepts the canonical names and the lowercase CLI spellings
// ("id-overlap", "token-overlap", "issuer-match").
std::optional<BlockingKind> ParseBlockingKind(std::string_view name);

// Set of blockings that produced a candidate.
class Provenance {
 public:
  Provenance() = default;
  Provenance(std::initializer_list<BlockingKind> kinds) {
    for (auto k : kinds) Add(k);
  }

  void Add(BlockingKind kind) { bits_ |= Bit(kind); }
  void Merge(Provenance other) { bits_ |= other.bits_; }
  bool Contains(BlockingKind kind) const { return (bits_ & Bit(kind)) != 0; }
  bool IsExactly(BlockingKind kind) const { return bits_ == Bit(kind); }
  bool empty() const { return bits_ == 0; }

  // "IdOverlap+TokenOverlap"; kinds in enum order. Empty set -> "".
  std::string ToString() const;
  // Inverse of ToString(); nullopt on an unknown kind name.
  static std::optional<Provenance> Parse(std::string_view text);

  friend bool operator==(Provenance, Provenance) = default;

 private:
  static std::uint8_t Bit(BlockingKind kind) {
    return static_cast<std::uint8_t>(1u << static_cast<unsigned>(kind));
  }

  std::uint8_t bits_ = 0;
};

struct CandidatePair {
  RecordPair pair;
  Provenance provenance;

  friend bool operator==(const CandidatePair&, const CandidatePair&) = default;
};

// Text view of a record for token blocking.
struct TextRecord {
  RecordId id;
  DataSourceId source;
  std::string text;
};

// Name, city, region, country code and description joined by spaces.
std::vector<TextRecord> CompanyText(std::span<const CompanyRecord> companies);
// Security name only.
std::vector<TextRecord> SecurityText(std::span<const SecurityRecord> securities);

// Inverted index from normalized token to the records containing it.
// Records are held in RecordId order and posting lists reference them by that
// position, so postings are sorted by RecordId.
class TokenIndex {
 public:
  // Tokenization and per-shard index construction run on `threads` workers;
  // the shards are merged in record order, so the result does not depend on
  // the worker count.
  static TokenIndex Build(std::span<const TextRecord> records, int threads = 1);

  std::size_t record_count() const { return ids_.size(); }
  std::size_t token_count() const { return postings_.size(); }
  const RecordId& id(std::size_t pos) const { return ids_[pos]; }
  DataSourceId source(std::size_t pos) const { return sources_[pos]; }
  // Interned token ids of record `pos`, sorted and unique.
  const std::vector<std::uint32_t>& tokens(std::size_t pos) const {
    return record_tokens_[pos];
  }
  const std::vector<std::uint32_t>& postings(std::uint32_t token) const {
    return postings_[token];
  }
  // Empty span for unknown tokens.
  std::span<const std::uint32_t> Lookup(std::string_view token) const;

 private:
  std::vector<RecordId> ids_;
  std::vector<DataSourceId> sources_;
  std::vector<std::vector<std::uint32_t>> record_tokens_;
  std::vector<std::string> vocabulary_;  // sorted; token id = position
  std::vector<std::vector<std::uint32_t>> postings_;
};

// Securities sharing a (scheme, value) identifier across sources.
std::vector<CandidatePair> IdOverlapSecurities(
    std::span<const SecurityRecord> securities);

// Companies from different sources whose securities share a (scheme, value)
// identifier. Throws ReferentialIntegrityError for a security whose issuer
// is not among `companies`.
std::vector<CandidatePair> IdOverlapCompanies(
    std::span<const CompanyRecord> companies,
    std::span<const SecurityRecord> securities);

// For each record, pairs with its top-n cross-source records by shared-token
// count (count >= 1), ties broken by smaller RecordId. A pair is kept if
// either endpoint selected it. Requires n >= 1.
std::vector<CandidatePair> TokenOverlap(std::span<const TextRecord> records,
                                        std::size_t n, int threads = 1);

struct IssuerMatchStats {
  std::size_t securities_without_group = 0;
};

// Cross-source securities whose issuers lie in the same company group.
// Securities whose issuer is in no group are skipped and counted. Throws
// PartitionError if a company appears in two groups.
std::vector<CandidatePair> IssuerMatch(
    std::span<const SecurityRecord> securities,
    std::span<const std::vector<RecordId>> company_groups,
    IssuerMatchStats* stats = nullptr);

// Union of candidate lists: one entry per canonical pair with the union of
// its provenance, sorted by pair.
std::vector<CandidatePair> MergeCandidates(
    std::span<const std::vector<CandidatePair>> lists);

}  // namespace groupmatch

#endif  // GROUPMATCH_BLOCKING_H_
