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

#ifndef GROUPMATCH_MODEL_H_
#define GROUPMATCH_MODEL_H_

// Domain types shared by every stage: record identifiers, company and
// security rows, canonical record pairs and the ground-truth partition.
//
// All types are plain values; nothing here is mutated after construction,
// so instances can be shared freely between worker threads.

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace groupmatch {

class RecordId {
 public:
  RecordId() = default;
  explicit RecordId(std::string value) : value_(std::move(value)) {}

  const std::string& str() const { return value_; }
  bool empty() const { return value_.empty(); }

  friend auto operator<=>(const RecordId&, const RecordId&) = default;
  friend bool operator==(const RecordId&, const RecordId&) = default;

 private:
  std::string value_;
};

}  // namespace groupmatch

template <>
struct std::hash<groupmatch::RecordId> {
  std::size_t operator()(const groupmatch::RecordId& id) const noexcept {
    return std::hash<std::string>{}(id.str());
  }
};

namespace groupmatch {

struct DataSourceId {
  std::uint32_t value = 0;

  friend auto operator<=>(DataSourceId, DataSourceId) = default;
};

enum class IdScheme : std::uint8_t { kIsin = 0, kCusip, kValor, kSedol };
inline constexpr std::size_t kNumIdSchemes = 4;
inline constexpr std::array<IdScheme, kNumIdSchemes> kAllIdSchemes = {
    IdScheme::kIsin, IdScheme::kCusip, IdScheme::kValor, IdScheme::kSedol};

std::string_view IdSchemeName(IdScheme scheme);  // "isin", "cusip", ...

// Shape check only: ISIN is 12 alphanumerics, CUSIP 9, SEDOL 7, VALOR is a
// non-empty run of decimal digits. Check digits are not validated.
bool IsValidIdentifier(IdScheme scheme, std::string_view value);

enum class SecurityType : std::uint8_t { kEquity, kRight, kBond, kUnit, kOther };

std::string_view SecurityTypeName(SecurityType type);
// Throws std::invalid_argument for unknown names.
SecurityType ParseSecurityType(std::string_view name);

// One optional value per IdScheme, indexed by the scheme's underlying value.
using IdentifierSet = std::array<std::optional<std::string>, kNumIdSchemes>;

struct CompanyRecord {
  RecordId id;
  DataSourceId source;
  std::string name;
  std::optional<std::string> city;
  std::optional<std::string> region;
  std::optional<std::string> country_code;
  std::optional<std::string> description;

  friend bool operator==(const CompanyRecord&, const CompanyRecord&) = default;
};

struct SecurityRecord {
  RecordId id;
  DataSourceId source;
  RecordId issuer_id;
  std::string name;
  SecurityType security_type = SecurityType::kEquity;
  IdentifierSet identifiers;

  const std::optional<std::string>& identifier(IdScheme scheme) const {
    return identifiers[static_cast<std::size_t>(scheme)];
  }
  std::optional<std::string>& identifier(IdScheme scheme) {
    return identifiers[static_cast<std::size_t>(scheme)];
  }

  friend bool operator==(const SecurityRecord&, const SecurityRecord&) = default;
};

// True iff some scheme carries the same value in both sets.
bool SharesIdentifier(const IdentifierSet& a, const IdentifierSet& b);

// Unordered pair of distinct record ids, stored with first() < second().
class RecordPair {
 public:
  // Throws std::invalid_argument when a == b.
  RecordPair(RecordId a, RecordId b);

  const RecordId& first() const { return first_; }
  const RecordId& second() const { return second_; }

  friend auto operator<=>(const RecordPair&, const RecordPair&) = default;
  friend bool operator==(const RecordPair&, const RecordPair&) = default;

 private:
  RecordId first_;
  RecordId second_;
};

}  // namespace groupmatch

template <>
struct std::hash<groupmatch::RecordPair> {
  std::size_t operator()(const groupmatch::RecordPair& pair) const noexcept {
    std::size_t h = std::hash<groupmatch::RecordId>{}(pair.first());
    return h ^ (std::hash<groupmatch::RecordId>{}(pair.second()) +
                0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  }
};

namespace groupmatch {

enum class GroupKind : std::uint8_t { kCompany, kSecurity };

struct EntityGroup {
  std::string group_id;
  std::vector<RecordId> members;
  GroupKind kind = GroupKind::kCompany;
};

enum class MatchLabel : std::uint8_t { kNoMatch, kMatch };

std::string_view MatchLabelName(MatchLabel label);  // "match" / "no_match"

// Number of unordered pairs among k items.
constexpr std::size_t PairsAmong(std::size_t k) {
  return k < 2 ? 0 : k * (k - 1) / 2;
}

// A partition of records into real-world entities.
class GroundTruth {
 public:
  GroundTruth() = default;
  // Sorts each group's members. Throws PartitionError if a record appears
  // twice (within or across groups) and std::invalid_argument for an empty
  // group.
  explicit GroundTruth(std::vector<EntityGroup> groups);

  const std::vector<EntityGroup>& groups() const { return groups_; }
  std::size_t record_count() const { return group_of_.size(); }
  std::size_t true_pair_count() const { return true_pair_count_; }

  bool Contains(const RecordId& id) const { return group_of_.contains(id); }
  std::optional<std::size_t> FindGroup(const RecordId& id) const;
  // Throws LookupError for unknown ids.
  const EntityGroup& GroupOf(const RecordId& id) const;

  // Keeps only the given records; groups left empty are dropped.
  GroundTruth Restrict(const std::vector<RecordId>& ids) const;

 private:
  std::vector<EntityGroup> groups_;
  std::unordered_map<RecordId, std::size_t> group_of_;
  std::size_t true_pair_count_ = 0;
};

// Every unordered within-group pair, sorted.
std::vector<RecordPair> TruePairs(const GroundTruth& truth);

// Throws LookupError if either id is unknown.
bool IsTrueMatch(const GroundTruth& truth, const RecordPair& pair);

}  // namespace groupmatch

#endif  // GROUPMATCH_MODEL_H_
