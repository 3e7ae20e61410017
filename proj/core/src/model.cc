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

#include "groupmatch/model.h"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "groupmatch/errors.h"

namespace groupmatch {

namespace {

bool AllAlnum(std::string_view value) {
  return std::all_of(value.begin(), value.end(), [](unsigned char c) {
    return std::isalnum(c) != 0;
  });
}

}  // namespace

std::string_view IdSchemeName(IdScheme scheme) {
  switch (scheme) {
    case IdScheme::kIsin:
      return "isin";
    case IdScheme::kCusip:
      return "cusip";
    case IdScheme::kValor:
      return "valor";
    case IdScheme::kSedol:
      return "sedol";
  }
  return "unknown";
}

bool IsValidIdentifier(IdScheme scheme, std::string_view value) {
  switch (scheme) {
    case IdScheme::kIsin:
      return value.size() == 12 && AllAlnum(value);
    case IdScheme::kCusip:
      return value.size() == 9 && AllAlnum(value);
    case IdScheme::kSedol:
      return value.size() == 7 && AllAlnum(value);
    case IdScheme::kValor:
      return !value.empty() &&
             std::all_of(value.begin(), value.end(), [](unsigned char c) {
               return std::isdigit(c) != 0;
             });
  }
  return false;
}

std::string_view SecurityTypeName(SecurityType type) {
  switch (type) {
    case SecurityType::kEquity:
      return "equity";
    case SecurityType::kRight:
      return "right";
    case SecurityType::kBond:
      return "bond";
    case SecurityType::kUnit:
      return "unit";
    case SecurityType::kOther:
      return "other";
  }
  return "other";
}

SecurityType ParseSecurityType(std::string_view name) {
  for (auto type : {SecurityType::kEquity, SecurityType::kRight,
                    SecurityType::kBond, SecurityType::kUnit,
                    SecurityType::kOther}) {
    if (SecurityTypeName(type) == name) return type;
  }
  throw std::invalid_argument("unknown security type '" + std::string(name) +
                              "'");
}

std::string_view MatchLabelName(MatchLabel label) {
  return label == MatchLabel::kMatch ? "match" : "no_match";
}

bool SharesIdentifier(const IdentifierSet& a, const IdentifierSet& b) {
  for (std::size_t s = 0; s < kNumIdSchemes; ++s) {
    if (a[s] && b[s] && *a[s] == *b[s]) return true;
  }
  return false;
}

RecordPair::RecordPair(RecordId a, RecordId b) {
  if (a == b) {
    throw std::invalid_argument("record pair needs two distinct ids, got '" +
                                a.str() + "' twice");
  }
  if (b < a) std::swap(a, b);
  first_ = std::move(a);
  second_ = std::move(b);
}

GroundTruth::GroundTruth(std::vector<EntityGroup> groups)
    : groups_(std::move(groups)) {
  for (std::size_t g = 0; g < groups_.size(); ++g) {
    auto& members = groups_[g].members;
    if (members.empty()) {
      throw std::invalid_argument("entity group '" + groups_[g].group_id +
                                  "' has no members");
    }
    std::sort(members.begin(), members.end());
    for (const auto& id : members) {
      auto [it, inserted] = group_of_.emplace(id, g);
      if (!inserted) {
        throw PartitionError(
            id.str(), "record '" + id.str() + "' appears in groups '" +
                          groups_[it->second].group_id + "' and '" +
                          groups_[g].group_id + "'");
      }
    }
    true_pair_count_ += PairsAmong(members.size());
  }
}

std::optional<std::size_t> GroundTruth::FindGroup(const RecordId& id) const {
  auto it = group_of_.find(id);
  if (it == group_of_.end()) return std::nullopt;
  return it->second;
}

const EntityGroup& GroundTruth::GroupOf(const RecordId& id) const {
  auto it = group_of_.find(id);
  if (it == group_of_.end()) {
    throw LookupError(id.str(),
                      "record '" + id.str() + "' is not in the ground truth");
  }
  return groups_[it->second];
}

GroundTruth GroundTruth::Restrict(const std::vector<RecordId>& ids) const {
  std::vector<EntityGroup> kept(groups_.size());
  for (const auto& id : ids) {
    if (auto g = FindGroup(id)) kept[*g].members.push_back(id);
  }
  std::vector<EntityGroup> out;
  for (std::size_t g = 0; g < groups_.size(); ++g) {
    if (kept[g].members.empty()) continue;
    kept[g].group_id = groups_[g].group_id;
    kept[g].kind = groups_[g].kind;
    // Duplicate ids in the input would otherwise surface as a partition error.
    auto& m = kept[g].members;
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    out.push_back(std::move(kept[g]));
  }
  return GroundTruth(std::move(out));
}

std::vector<RecordPair> TruePairs(const GroundTruth& truth) {
  std::vector<RecordPair> pairs;
  pairs.reserve(truth.true_pair_count());
  for (const auto& group : truth.groups()) {
    const auto& m = group.members;
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = i + 1; j < m.size(); ++j) {
        pairs.emplace_back(m[i], m[j]);
      }
    }
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

bool IsTrueMatch(const GroundTruth& truth, const RecordPair& pair) {
  const auto& a = truth.GroupOf(pair.first());
  const auto& b = truth.GroupOf(pair.second());
  return &a == &b;
}

}  // namespace groupmatch
