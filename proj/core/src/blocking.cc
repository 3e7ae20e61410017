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

#include "groupmatch/blocking.h"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "groupmatch/errors.h"
#include "groupmatch/parallel.h"
#include "groupmatch/tokenizer.h"

namespace groupmatch {

namespace {

constexpr std::array<BlockingKind, kNumBlockingKinds> kAllKinds = {
    BlockingKind::kIdOverlap, BlockingKind::kTokenOverlap,
    BlockingKind::kIssuerMatch};

void SortUnique(std::vector<CandidatePair>& pairs) {
  std::sort(pairs.begin(), pairs.end(),
            [](const CandidatePair& a, const CandidatePair& b) {
              return a.pair < b.pair;
            });
  std::vector<CandidatePair> out;
  out.reserve(pairs.size());
  for (auto& c : pairs) {
    if (!out.empty() && out.back().pair == c.pair) {
      out.back().provenance.Merge(c.provenance);
    } else {
      out.push_back(std::move(c));
    }
  }
  pairs = std::move(out);
}

std::string IdentifierKey(IdScheme scheme, const std::string& value) {
  std::string key(1, static_cast<char>('0' + static_cast<int>(scheme)));
  key += value;
  return key;
}

// Emits all cross-source pairs among `members` (indices into ids/sources).
template <typename IdFn, typename SourceFn>
void EmitCrossSource(const std::vector<std::size_t>& members, IdFn id_of,
                     SourceFn source_of, BlockingKind kind,
                     std::vector<CandidatePair>& out) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (source_of(members[i]) == source_of(members[j])) continue;
      if (id_of(members[i]) == id_of(members[j])) continue;
      out.push_back({RecordPair(id_of(members[i]), id_of(members[j])),
                     Provenance{kind}});
    }
  }
}

void Join(std::string& text, const std::optional<std::string>& part) {
  if (!part || part->empty()) return;
  text += ' ';
  text += *part;
}

}  // namespace

std::string_view BlockingKindName(BlockingKind kind) {
  switch (kind) {
    case BlockingKind::kIdOverlap:
      return "IdOverlap";
    case BlockingKind::kTokenOverlap:
      return "TokenOverlap";
    case BlockingKind::kIssuerMatch:
      return "IssuerMatch";
  }
  return "Unknown";
}

std::optional<BlockingKind> ParseBlockingKind(std::string_view name) {
  if (name == "IdOverlap" || name == "id-overlap") {
    return BlockingKind::kIdOverlap;
  }
  if (name == "TokenOverlap" || name == "token-overlap") {
    return BlockingKind::kTokenOverlap;
  }
  if (name == "IssuerMatch" || name == "issuer-match") {
    return BlockingKind::kIssuerMatch;
  }
  return std::nullopt;
}

std::string Provenance::ToString() const {
  std::string out;
  for (auto kind : kAllKinds) {
    if (!Contains(kind)) continue;
    if (!out.empty()) out += '+';
    out += BlockingKindName(kind);
  }
  return out;
}

std::optional<Provenance> Provenance::Parse(std::string_view text) {
  Provenance p;
  if (text.empty()) return p;
  while (true) {
    const auto plus = text.find('+');
    auto kind = ParseBlockingKind(text.substr(0, plus));
    if (!kind) return std::nullopt;
    p.Add(*kind);
    if (plus == std::string_view::npos) break;
    text.remove_prefix(plus + 1);
  }
  return p;
}

std::vector<TextRecord> CompanyText(std::span<const CompanyRecord> companies) {
  std::vector<TextRecord> out;
  out.reserve(companies.size());
  for (const auto& c : companies) {
    std::string text = c.name;
    Join(text, c.city);
    Join(text, c.region);
    Join(text, c.country_code);
    Join(text, c.description);
    out.push_back({c.id, c.source, std::move(text)});
  }
  return out;
}

std::vector<TextRecord> SecurityText(
    std::span<const SecurityRecord> securities) {
  std::vector<TextRecord> out;
  out.reserve(securities.size());
  for (const auto& s : securities) out.push_back({s.id, s.source, s.name});
  return out;
}

TokenIndex TokenIndex::Build(std::span<const TextRecord> records,
                             int threads) {
  std::vector<std::size_t> order(records.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return records[a].id < records[b].id;
  });

  TokenIndex index;
  const std::size_t n = records.size();
  index.ids_.reserve(n);
  index.sources_.reserve(n);
  for (auto i : order) {
    index.ids_.push_back(records[i].id);
    index.sources_.push_back(records[i].source);
  }

  std::vector<std::vector<std::string>> token_sets(n);
  ParallelFor(n, threads, [&](std::size_t pos) {
    token_sets[pos] = TokenSet(records[order[pos]].text);
  });

  // Shard-local posting maps over contiguous record ranges, merged in shard
  // order so each posting list comes out sorted by position.
  const std::size_t shards =
      std::max<std::size_t>(1, std::min<std::size_t>(ResolveThreads(threads), n));
  const std::size_t chunk = n == 0 ? 0 : (n + shards - 1) / shards;
  std::vector<std::map<std::string, std::vector<std::uint32_t>>> shard_maps(
      shards);
  ParallelFor(shards, threads, [&](std::size_t s) {
    const std::size_t begin = s * chunk;
    const std::size_t end = std::min(n, begin + chunk);
    for (std::size_t pos = begin; pos < end; ++pos) {
      for (const auto& tok : token_sets[pos]) {
        shard_maps[s][tok].push_back(static_cast<std::uint32_t>(pos));
      }
    }
  });

  std::map<std::string, std::vector<std::uint32_t>> merged;
  for (auto& shard : shard_maps) {
    for (auto& [tok, posting] : shard) {
      auto& dst = merged[tok];
      dst.insert(dst.end(), posting.begin(), posting.end());
    }
  }

  std::unordered_map<std::string, std::uint32_t> token_ids;
  index.vocabulary_.reserve(merged.size());
  index.postings_.reserve(merged.size());
  for (auto& [tok, posting] : merged) {
    token_ids.emplace(tok, static_cast<std::uint32_t>(index.vocabulary_.size()));
    index.vocabulary_.push_back(tok);
    index.postings_.push_back(std::move(posting));
  }
  index.record_tokens_.resize(n);
  for (std::size_t pos = 0; pos < n; ++pos) {
    auto& ids = index.record_tokens_[pos];
    for (const auto& tok : token_sets[pos]) ids.push_back(token_ids.at(tok));
    std::sort(ids.begin(), ids.end());
  }
  return index;
}

std::span<const std::uint32_t> TokenIndex::Lookup(std::string_view token) const {
  auto it = std::lower_bound(vocabulary_.begin(), vocabulary_.end(), token);
  if (it == vocabulary_.end() || *it != token) return {};
  return postings_[static_cast<std::size_t>(it - vocabulary_.begin())];
}

std::vector<CandidatePair> IdOverlapSecurities(
    std::span<const SecurityRecord> securities) {
  std::unordered_map<std::string, std::vector<std::size_t>> by_identifier;
  for (std::size_t i = 0; i < securities.size(); ++i) {
    for (auto scheme : kAllIdSchemes) {
      const auto& value = securities[i].identifier(scheme);
      if (value) by_identifier[IdentifierKey(scheme, *value)].push_back(i);
    }
  }
  std::vector<CandidatePair> out;
  for (const auto& [key, members] : by_identifier) {
    EmitCrossSource(
        members, [&](std::size_t i) -> const RecordId& { return securities[i].id; },
        [&](std::size_t i) { return securities[i].source; },
        BlockingKind::kIdOverlap, out);
  }
  SortUnique(out);
  return out;
}

std::vector<CandidatePair> IdOverlapCompanies(
    std::span<const CompanyRecord> companies,
    std::span<const SecurityRecord> securities) {
  std::unordered_map<RecordId, std::size_t> company_index;
  for (std::size_t i = 0; i < companies.size(); ++i) {
    company_index.emplace(companies[i].id, i);
  }
  std::unordered_map<std::string, std::vector<std::size_t>> by_identifier;
  for (const auto& s : securities) {
    auto it = company_index.find(s.issuer_id);
    if (it == company_index.end()) {
      throw ReferentialIntegrityError("security '" + s.id.str() +
                                      "' references unknown issuer '" +
                                      s.issuer_id.str() + "'");
    }
    for (auto scheme : kAllIdSchemes) {
      const auto& value = s.identifier(scheme);
      if (value) by_identifier[IdentifierKey(scheme, *value)].push_back(it->second);
    }
  }
  std::vector<CandidatePair> out;
  for (auto& [key, members] : by_identifier) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    EmitCrossSource(
        members, [&](std::size_t i) -> const RecordId& { return companies[i].id; },
        [&](std::size_t i) { return companies[i].source; },
        BlockingKind::kIdOverlap, out);
  }
  SortUnique(out);
  return out;
}

std::vector<CandidatePair> TokenOverlap(std::span<const TextRecord> records,
                                        std::size_t n, int threads) {
  if (n == 0) throw std::invalid_argument("token overlap needs top-n >= 1");
  const TokenIndex index = TokenIndex::Build(records, threads);
  const std::size_t count = index.record_count();

  // Per-record selections land in their own slot; merged afterwards.
  std::vector<std::vector<std::uint32_t>> selected(count);
  const std::size_t workers = std::max<std::size_t>(
      1, std::min<std::size_t>(ResolveThreads(threads), count));
  const std::size_t chunk = count == 0 ? 0 : (count + workers - 1) / workers;
  ParallelFor(workers, threads, [&](std::size_t w) {
    std::vector<std::uint32_t> overlap(count, 0);
    std::vector<std::uint32_t> touched;
    const std::size_t begin = w * chunk;
    const std::size_t end = std::min(count, begin + chunk);
    for (std::size_t r = begin; r < end; ++r) {
      const DataSourceId source = index.source(r);
      for (auto tok : index.tokens(r)) {
        for (auto other : index.postings(tok)) {
          if (index.source(other) == source) continue;
          if (overlap[other]++ == 0) touched.push_back(other);
        }
      }
      // Positions follow RecordId order, so the position breaks ties.
      auto better = [&](std::uint32_t a, std::uint32_t b) {
        if (overlap[a] != overlap[b]) return overlap[a] > overlap[b];
        return a < b;
      };
      const std::size_t keep = std::min(n, touched.size());
      std::partial_sort(touched.begin(), touched.begin() + keep, touched.end(),
                        better);
      selected[r].assign(touched.begin(), touched.begin() + keep);
      for (auto t : touched) overlap[t] = 0;
      touched.clear();
    }
  });

  std::vector<CandidatePair> out;
  for (std::size_t r = 0; r < count; ++r) {
    for (auto other : selected[r]) {
      if (index.id(r) == index.id(other)) continue;
      out.push_back({RecordPair(index.id(r), index.id(other)),
                     Provenance{BlockingKind::kTokenOverlap}});
    }
  }
  SortUnique(out);
  return out;
}

std::vector<CandidatePair> IssuerMatch(
    std::span<const SecurityRecord> securities,
    std::span<const std::vector<RecordId>> company_groups,
    IssuerMatchStats* stats) {
  std::unordered_map<RecordId, std::size_t> group_of;
  for (std::size_t g = 0; g < company_groups.size(); ++g) {
    for (const auto& id : company_groups[g]) {
      auto [it, inserted] = group_of.emplace(id, g);
      if (!inserted && it->second != g) {
        throw PartitionError(id.str(), "company '" + id.str() +
                                           "' appears in two company groups");
      }
    }
  }
  std::vector<std::vector<std::size_t>> buckets(company_groups.size());
  std::size_t skipped = 0;
  for (std::size_t i = 0; i < securities.size(); ++i) {
    auto it = group_of.find(securities[i].issuer_id);
    if (it == group_of.end()) {
      ++skipped;
      continue;
    }
    buckets[it->second].push_back(i);
  }
  if (stats) stats->securities_without_group = skipped;

  std::vector<CandidatePair> out;
  for (const auto& members : buckets) {
    EmitCrossSource(
        members, [&](std::size_t i) -> const RecordId& { return securities[i].id; },
        [&](std::size_t i) { return securities[i].source; },
        BlockingKind::kIssuerMatch, out);
  }
  SortUnique(out);
  return out;
}

std::vector<CandidatePair> MergeCandidates(
    std::span<const std::vector<CandidatePair>> lists) {
  std::vector<CandidatePair> all;
  std::size_t total = 0;
  for (const auto& l : lists) total += l.size();
  all.reserve(total);
  for (const auto& l : lists) all.insert(all.end(), l.begin(), l.end());
  SortUnique(all);
  return all;
}

}  // namespace groupmatch
