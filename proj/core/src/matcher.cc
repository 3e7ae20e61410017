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

#include "groupmatch/matcher.h"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "groupmatch/errors.h"
#include "groupmatch/parallel.h"
#include "groupmatch/tokenizer.h"

namespace groupmatch {

namespace {

bool SortedIntersect(const std::vector<std::string>& a,
                     const std::vector<std::string>& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      return true;
    }
  }
  return false;
}

std::string Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return std::string(s);
}

std::optional<double> ParseScore(const std::string& text) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

std::optional<MatchLabel> ParseLabel(const std::string& text) {
  if (text == "match" || text == "1" || text == "Match") return MatchLabel::kMatch;
  if (text == "no_match" || text == "0" || text == "NoMatch") {
    return MatchLabel::kNoMatch;
  }
  return std::nullopt;
}

}  // namespace

std::string_view MatcherKindName(MatcherKind kind) {
  switch (kind) {
    case MatcherKind::kExactId:
      return "exact-id";
    case MatcherKind::kNameJaccard:
      return "name-jaccard";
    case MatcherKind::kExternal:
      return "external";
  }
  return "unknown";
}

std::optional<MatcherKind> ParseMatcherKind(std::string_view name) {
  for (auto kind :
       {MatcherKind::kExactId, MatcherKind::kNameJaccard, MatcherKind::kExternal}) {
    if (MatcherKindName(kind) == name) return kind;
  }
  return std::nullopt;
}

void MatcherSpec::Validate() const {
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw std::invalid_argument("matcher threshold must lie in [0, 1]");
  }
  if (kind == MatcherKind::kExternal && predictions_path.empty()) {
    throw std::invalid_argument("external matcher needs a predictions file");
  }
}

RecordTable::RecordTable(std::vector<CompanyRecord> companies,
                         std::vector<SecurityRecord> securities)
    : companies_(std::move(companies)), securities_(std::move(securities)) {
  auto add = [&](const RecordId& id, Entry entry) {
    if (!index_.emplace(id, entry).second) {
      throw DataError("duplicate record id '" + id.str() + "'");
    }
  };
  company_tokens_.reserve(companies_.size());
  for (std::size_t i = 0; i < companies_.size(); ++i) {
    add(companies_[i].id, {true, i});
    company_tokens_.push_back(TokenSet(companies_[i].name));
  }
  security_tokens_.reserve(securities_.size());
  issued_identifiers_.resize(companies_.size());
  for (std::size_t i = 0; i < securities_.size(); ++i) {
    const auto& s = securities_[i];
    add(s.id, {false, i});
    security_tokens_.push_back(TokenSet(s.name));
    auto issuer = index_.find(s.issuer_id);
    if (issuer == index_.end() || !issuer->second.is_company) continue;
    auto& keys = issued_identifiers_[issuer->second.index];
    for (auto scheme : kAllIdSchemes) {
      if (const auto& v = s.identifier(scheme)) {
        keys.push_back(std::string(IdSchemeName(scheme)) + ":" + *v);
      }
    }
  }
  for (auto& keys : issued_identifiers_) {
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  }
}

const RecordTable::Entry& RecordTable::Lookup(const RecordId& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) {
    throw LookupError(id.str(), "unknown record id '" + id.str() + "'");
  }
  return it->second;
}

const CompanyRecord* RecordTable::FindCompany(const RecordId& id) const {
  auto it = index_.find(id);
  if (it == index_.end() || !it->second.is_company) return nullptr;
  return &companies_[it->second.index];
}

const SecurityRecord* RecordTable::FindSecurity(const RecordId& id) const {
  auto it = index_.find(id);
  if (it == index_.end() || it->second.is_company) return nullptr;
  return &securities_[it->second.index];
}

const std::vector<std::string>& RecordTable::NameTokens(const RecordId& id) const {
  const Entry& e = Lookup(id);
  return e.is_company ? company_tokens_[e.index] : security_tokens_[e.index];
}

const std::vector<std::string>& RecordTable::IssuedIdentifiers(
    const RecordId& company) const {
  const Entry& e = Lookup(company);
  if (!e.is_company) {
    throw RecordKindError("'" + company.str() + "' is not a company record");
  }
  return issued_identifiers_[e.index];
}

std::vector<RecordId> RecordTable::CompanyIds() const {
  std::vector<RecordId> ids;
  ids.reserve(companies_.size());
  for (const auto& c : companies_) ids.push_back(c.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::vector<RecordId> RecordTable::SecurityIds() const {
  std::vector<RecordId> ids;
  ids.reserve(securities_.size());
  for (const auto& s : securities_) ids.push_back(s.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

double ScorePair(const MatcherSpec& spec, const RecordTable& table,
                 const RecordId& a, const RecordId& b) {
  if (spec.kind == MatcherKind::kExternal) {
    throw std::logic_error("external predictions are imported, not scored");
  }
  const SecurityRecord* sa = table.FindSecurity(a);
  const SecurityRecord* sb = table.FindSecurity(b);
  const CompanyRecord* ca = sa ? nullptr : table.FindCompany(a);
  const CompanyRecord* cb = sb ? nullptr : table.FindCompany(b);
  if (!sa && !ca) throw LookupError(a.str(), "unknown record id '" + a.str() + "'");
  if (!sb && !cb) throw LookupError(b.str(), "unknown record id '" + b.str() + "'");
  if ((sa == nullptr) != (sb == nullptr)) {
    throw RecordKindError("cannot score company against security: '" +
                          a.str() + "' vs '" + b.str() + "'");
  }
  if (spec.kind == MatcherKind::kExactId) {
    if (sa && SharesIdentifier(sa->identifiers, sb->identifiers)) return 1.0;
    if (ca && SortedIntersect(table.IssuedIdentifiers(a),
                              table.IssuedIdentifiers(b))) {
      return 1.0;
    }
  }
  return Jaccard(table.NameTokens(a), table.NameTokens(b));
}

std::vector<Prediction> PredictAll(std::span<const CandidatePair> candidates,
                                   const RecordTable& table,
                                   const MatcherSpec& spec, int threads) {
  spec.Validate();
  std::vector<double> scores(candidates.size());
  ParallelFor(candidates.size(), threads, [&](std::size_t i) {
    scores[i] = ScorePair(spec, table, candidates[i].pair.first(),
                          candidates[i].pair.second());
  });
  std::vector<Prediction> out;
  out.reserve(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    out.push_back({candidates[i].pair,
                   scores[i] >= spec.threshold ? MatchLabel::kMatch
                                               : MatchLabel::kNoMatch,
                   scores[i], candidates[i].provenance, true});
  }
  return out;
}

ImportResult ImportPredictions(const CsvTable& file,
                               std::span<const CandidatePair> candidates) {
  const std::size_t col_a = file.RequireColumn("id_a");
  const std::size_t col_b = file.RequireColumn("id_b");
  const std::size_t col_score = file.RequireColumn("score");
  const auto col_label = file.FindColumn("label");

  std::unordered_map<RecordPair, std::size_t> candidate_pos;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    candidate_pos.emplace(candidates[i].pair, i);
  }

  std::vector<std::optional<Prediction>> joined(candidates.size());
  std::vector<Prediction> unknown;
  std::unordered_map<RecordPair, std::size_t> unknown_pos;

  for (std::size_t r = 0; r < file.rows.size(); ++r) {
    const auto& row = file.rows[r];
    const std::size_t line = file.row_lines[r];
    const std::string a = Trim(row[col_a]);
    const std::string b = Trim(row[col_b]);
    if (a.empty() || b.empty()) {
      throw ParseError(file.source, line, "empty record id");
    }
    if (a == b) throw ParseError(file.source, line, "self pair '" + a + "'");
    const std::string score_text = Trim(row[col_score]);
    std::optional<MatchLabel> label;
    if (col_label) {
      const std::string label_text = Trim(row[*col_label]);
      if (!label_text.empty()) {
        label = ParseLabel(label_text);
        if (!label) {
          throw ParseError(file.source, line, "bad label '" + label_text + "'");
        }
      }
    }
    double score = 0.0;
    if (!score_text.empty()) {
      auto parsed = ParseScore(score_text);
      if (!parsed || *parsed < 0.0 || *parsed > 1.0) {
        throw ParseError(file.source, line,
                         "score '" + score_text + "' is not a number in [0, 1]");
      }
      score = *parsed;
    } else if (label) {
      score = *label == MatchLabel::kMatch ? 1.0 : 0.0;
    } else {
      throw ParseError(file.source, line, "row has neither score nor label");
    }
    if (!label) label = score >= 0.5 ? MatchLabel::kMatch : MatchLabel::kNoMatch;

    RecordPair pair{RecordId(a), RecordId(b)};
    if (auto it = candidate_pos.find(pair); it != candidate_pos.end()) {
      joined[it->second] = Prediction{pair, *label, score,
                                      candidates[it->second].provenance, true};
    } else if (auto u = unknown_pos.find(pair); u != unknown_pos.end()) {
      unknown[u->second] = Prediction{pair, *label, score, {}, false};
    } else {
      unknown_pos.emplace(pair, unknown.size());
      unknown.push_back(Prediction{pair, *label, score, {}, false});
    }
  }

  ImportResult result;
  result.predictions.reserve(candidates.size() + unknown.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (joined[i]) {
      result.predictions.push_back(std::move(*joined[i]));
    } else {
      ++result.missing_candidates;
      result.predictions.push_back({candidates[i].pair, MatchLabel::kNoMatch,
                                    0.0, candidates[i].provenance, true});
    }
  }
  result.unknown_rows = unknown.size();
  for (auto& p : unknown) result.predictions.push_back(std::move(p));
  return result;
}

ImportResult ImportPredictions(const std::filesystem::path& path,
                               std::span<const CandidatePair> candidates) {
  return ImportPredictions(ReadCsvFile(path), candidates);
}

}  // namespace groupmatch
