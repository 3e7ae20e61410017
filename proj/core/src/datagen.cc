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

#include "groupmatch/datagen.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "groupmatch/errors.h"

namespace groupmatch {

namespace {

constexpr std::array<std::string_view, 8> kCorporateTerms = {
    "Inc.",    "Ltd.",        "Corp.",    "Limited",
    "Corporation", "Holdings", "Group",    "PLC"};

constexpr std::array<std::string_view, 8> kIsinCountries = {
    "US", "GB", "DE", "CH", "FR", "JP", "CA", "NL"};

constexpr std::string_view kAlnum = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ";
constexpr std::string_view kSedolChars = "0123456789BCDFGHJKLMNPQRSTVWXYZ";
constexpr std::string_view kDigits = "0123456789";

std::string Padded(std::string_view prefix, std::size_t n, int width) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%0*zu", width, n);
  return std::string(prefix) + buf;
}

std::optional<std::string> Cell(std::optional<std::size_t> col,
                                const std::vector<std::string>& row) {
  if (!col || row[*col].empty()) return std::nullopt;
  return row[*col];
}

std::string CollapseSpaces(std::string_view s) {
  std::string out;
  bool pending_space = false;
  for (char c : s) {
    if (c == ' ' || c == '\t') {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(c);
  }
  return out;
}

std::string StripPunctuation(std::string_view name) {
  std::string out;
  for (char c : name) {
    if (std::ispunct(static_cast<unsigned char>(c)) == 0) out.push_back(c);
  }
  return CollapseSpaces(out);
}

std::string UpperAscii(std::string_view name) {
  std::string out(name);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

std::vector<std::string_view> Words(std::string_view s) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) words.push_back(s.substr(i, j - i));
    i = j;
  }
  return words;
}

// Base security entity j of a company: type and name suffix.
std::pair<SecurityType, std::string_view> BaseSecurityKind(std::size_t j) {
  switch (j) {
    case 0:
      return {SecurityType::kEquity, "Ordinary Shares"};
    case 1:
      return {SecurityType::kOther, "Preference Shares"};
    case 2:
      return {SecurityType::kEquity, "Class B Shares"};
    default:
      return {SecurityType::kOther, "Depositary Receipts"};
  }
}

std::string_view AddedSecuritySuffix(SecurityType type) {
  switch (type) {
    case SecurityType::kRight:
      return "Rights";
    case SecurityType::kBond:
      return "Notes";
    case SecurityType::kUnit:
      return "Units";
    default:
      return "Shares";
  }
}

std::string JoinSources(const std::vector<std::size_t>& sources) {
  std::string out;
  for (std::size_t s : sources) {
    if (!out.empty()) out += ",";
    out += std::to_string(s);
  }
  return out;
}

std::string RandomChars(Rng& rng, std::string_view alphabet, std::size_t n) {
  std::string out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(alphabet[rng.Uniform(alphabet.size())]);
  return out;
}

}  // namespace

BaseCorpus LoadBaseCorpus(const CsvTable& table) {
  const std::size_t name_col = table.RequireColumn("name");
  const auto city = table.FindColumn("city");
  const auto region = table.FindColumn("region");
  const auto country = table.FindColumn("country_code");
  const auto description = table.FindColumn("description");
  BaseCorpus corpus;
  for (const auto& row : table.rows) {
    std::string name = CollapseSpaces(row[name_col]);
    if (name.empty()) {
      ++corpus.skipped_rows;
      continue;
    }
    corpus.seeds.push_back({std::move(name), Cell(city, row),
                            Cell(region, row), Cell(country, row),
                            Cell(description, row)});
  }
  return corpus;
}

BaseCorpus LoadBaseCorpus(const std::filesystem::path& path) {
  return LoadBaseCorpus(ReadCsvFile(path));
}

std::string_view ArtifactKindName(ArtifactKind kind) {
  switch (kind) {
    case ArtifactKind::kAcronymName:
      return "AcronymName";
    case ArtifactKind::kInsertCorporateTerm:
      return "InsertCorporateTerm";
    case ArtifactKind::kCreateCorporateAcquisition:
      return "CreateCorporateAcquisition";
    case ArtifactKind::kCreateCorporateMerger:
      return "CreateCorporateMerger";
    case ArtifactKind::kParaphraseAttribute:
      return "ParaphraseAttribute";
    case ArtifactKind::kMultipleIds:
      return "MultipleIDs";
    case ArtifactKind::kNoIdOverlaps:
      return "NoIdOverlaps";
    case ArtifactKind::kMultipleSecurities:
      return "MultipleSecurities";
  }
  return "Unknown";
}

std::optional<ArtifactKind> ParseArtifactKind(std::string_view name) {
  for (auto kind : kAllArtifactKinds) {
    if (ArtifactKindName(kind) == name) return kind;
  }
  return std::nullopt;
}

void GenerationParams::Validate() const {
  if (num_groups < 1) throw std::invalid_argument("num_groups must be at least 1");
  if (num_sources < 2) throw std::invalid_argument("num_sources must be at least 2");
  if (min_securities < 1 || min_securities > max_securities) {
    throw std::invalid_argument(
        "securities per company need 1 <= min <= max");
  }
  for (auto kind : kAllArtifactKinds) {
    const double p = rate(kind);
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument("rate of " + std::string(ArtifactKindName(kind)) +
                                  " must lie in [0, 1]");
    }
  }
}

std::string Acronym(std::string_view name) {
  const auto words = Words(name);
  if (words.size() < 2) return {};
  std::string out;
  for (auto w : words) {
    const auto c = static_cast<unsigned char>(w.front());
    if (c < 0x80) {
      if (std::isalnum(c) != 0) out.push_back(static_cast<char>(std::toupper(c)));
      continue;
    }
    // Copy the leading multi-byte code point unchanged.
    std::size_t len = c >= 0xF0 ? 4 : c >= 0xE0 ? 3 : c >= 0xC0 ? 2 : 1;
    out.append(w.substr(0, std::min(len, w.size())));
  }
  return out;
}

GenerationState::GenerationState(std::span<const CompanySeed> seeds,
                                 const GenerationParams& params)
    : num_sources_(params.num_sources) {
  params.Validate();
  if (seeds.size() < params.num_groups) {
    throw std::invalid_argument("base corpus has " + std::to_string(seeds.size()) +
                                " seeds, " + std::to_string(params.num_groups) +
                                " groups requested");
  }
  Rng rng = Rng::Derive(params.seed, "datagen/base");
  groups_.resize(params.num_groups);
  company_parent_.resize(params.num_groups);
  std::iota(company_parent_.begin(), company_parent_.end(), 0);
  for (std::size_t g = 0; g < params.num_groups; ++g) {
    const CompanySeed& seed = seeds[g];
    GroupDraft& group = groups_[g];
    group.group_id = Padded("g", g, 6);
    for (std::size_t s = 0; s < num_sources_; ++s) {
      CompanyDraft c{seed.name, seed.city, seed.region, seed.country_code,
                     seed.description};
      switch (params.name_jitter ? rng.Uniform(3) : 0) {
        case 1:
          c.name = StripPunctuation(c.name);
          break;
        case 2:
          c.name = UpperAscii(c.name);
          break;
        default:
          break;
      }
      group.companies.push_back(std::move(c));
    }
    const std::size_t m = rng.UniformIn(params.min_securities, params.max_securities);
    for (std::size_t j = 0; j < m; ++j) {
      const auto [type, suffix] = BaseSecurityKind(j);
      const std::size_t entity = NewEntity();
      const IdentifierSet ids = MintAll(rng);
      group.entities.push_back(entity);
      for (std::size_t s = 0; s < num_sources_; ++s) {
        group.securities.push_back({entity, s, type,
                                    group.companies[s].name + " " + std::string(suffix),
                                    ids});
      }
    }
  }
}

std::string GenerationState::Mint(IdScheme scheme, Rng& rng) {
  auto& used = registry_[static_cast<std::size_t>(scheme)];
  for (;;) {
    std::string v;
    switch (scheme) {
      case IdScheme::kIsin:
        v = std::string(kIsinCountries[rng.Uniform(kIsinCountries.size())]) +
            RandomChars(rng, kAlnum, 9) + RandomChars(rng, kDigits, 1);
        break;
      case IdScheme::kCusip:
        v = RandomChars(rng, kAlnum, 8) + RandomChars(rng, kDigits, 1);
        break;
      case IdScheme::kValor:
        v = RandomChars(rng, kDigits.substr(1), 1) +
            RandomChars(rng, kDigits, 5 + rng.Uniform(4));
        break;
      case IdScheme::kSedol:
        v = RandomChars(rng, kSedolChars, 6) + RandomChars(rng, kDigits, 1);
        break;
    }
    if (used.insert(v).second) return v;
  }
}

IdentifierSet GenerationState::MintAll(Rng& rng) {
  IdentifierSet ids;
  for (auto scheme : kAllIdSchemes) {
    ids[static_cast<std::size_t>(scheme)] = Mint(scheme, rng);
  }
  return ids;
}

std::size_t GenerationState::NewEntity() {
  entity_parent_.push_back(entity_parent_.size());
  return entity_parent_.size() - 1;
}

std::vector<std::size_t> GenerationState::RandomSources(Rng& rng, bool allow_all) {
  std::vector<std::size_t> chosen;
  for (std::size_t s = 0; s < num_sources_; ++s) {
    if (rng.Bernoulli(0.5)) chosen.push_back(s);
  }
  if (chosen.empty()) chosen.push_back(rng.Uniform(num_sources_));
  if (!allow_all && chosen.size() == num_sources_) {
    chosen.erase(chosen.begin() + static_cast<std::ptrdiff_t>(rng.Uniform(num_sources_)));
  }
  return chosen;
}

std::size_t GenerationState::Find(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

void GenerationState::Union(std::vector<std::size_t>& parent, std::size_t a,
                            std::size_t b) {
  a = Find(parent, a);
  b = Find(parent, b);
  // The smaller index stays root so group ids do not depend on call order.
  if (a == b) return;
  if (b < a) std::swap(a, b);
  parent[b] = a;
}

bool GenerationState::SameCompanyEntity(std::size_t g1, std::size_t g2) {
  return Find(company_parent_, g1) == Find(company_parent_, g2);
}

bool GenerationState::SameSecurityEntity(std::size_t e1, std::size_t e2) {
  return Find(entity_parent_, e1) == Find(entity_parent_, e2);
}

ArtifactLogEntry GenerationState::ApplyArtifact(ArtifactKind kind, std::size_t g,
                                                Rng& rng) {
  GroupDraft& group = groups_.at(g);
  ArtifactLogEntry entry{kind, false, {}};

  auto pick_partner = [&]() -> std::optional<std::size_t> {
    if (groups_.size() < 2) return std::nullopt;
    std::size_t p = rng.Uniform(groups_.size() - 1);
    return p >= g ? p + 1 : p;
  };
  // Record of `entity` in `source`, if the group lists one.
  auto security_in = [](GroupDraft& gr, std::size_t entity,
                        std::size_t source) -> SecurityDraft* {
    for (auto& s : gr.securities) {
      if (s.entity == entity && s.source == source) return &s;
    }
    return nullptr;
  };
  auto records_of = [&](std::size_t entity) {
    std::vector<SecurityDraft*> out;
    for (auto& s : group.securities) {
      if (s.entity == entity) out.push_back(&s);
    }
    return out;
  };

  switch (kind) {
    case ArtifactKind::kAcronymName: {
      const auto sources = RandomSources(rng);
      std::vector<std::size_t> changed;
      for (std::size_t s : sources) {
        std::string acronym = Acronym(group.companies[s].name);
        if (acronym.empty()) continue;
        group.companies[s].name = std::move(acronym);
        changed.push_back(s);
      }
      entry.applied = !changed.empty();
      entry.detail = entry.applied ? "sources " + JoinSources(changed)
                                   : "name has fewer than two words";
      break;
    }
    case ArtifactKind::kInsertCorporateTerm: {
      const std::string_view term = kCorporateTerms[rng.Uniform(kCorporateTerms.size())];
      const auto sources = RandomSources(rng);
      for (std::size_t s : sources) {
        group.companies[s].name += " " + std::string(term);
      }
      entry.applied = true;
      entry.detail = "'" + std::string(term) + "' in sources " + JoinSources(sources);
      break;
    }
    case ArtifactKind::kCreateCorporateAcquisition: {
      const auto partner = pick_partner();
      if (!partner) {
        entry.detail = "no partner group";
        break;
      }
      GroupDraft& acquirer = groups_[*partner];
      const auto sources = RandomSources(rng);
      for (std::size_t s : sources) {
        group.companies[s] = acquirer.companies[s];
        SecurityDraft* own = security_in(group, group.entities.front(), s);
        const SecurityDraft* theirs =
            security_in(acquirer, acquirer.entities.front(), s);
        if (own && theirs) own->identifiers = theirs->identifiers;
      }
      Union(company_parent_, g, *partner);
      Union(entity_parent_, group.entities.front(), acquirer.entities.front());
      entry.applied = true;
      entry.detail = "acquired by " + acquirer.group_id + " in sources " +
                     JoinSources(sources);
      break;
    }
    case ArtifactKind::kCreateCorporateMerger: {
      const auto partner = pick_partner();
      if (!partner) {
        entry.detail = "no partner group";
        break;
      }
      GroupDraft& other = groups_[*partner];
      std::vector<IdScheme> schemes;
      for (auto scheme : kAllIdSchemes) {
        if (rng.Bernoulli(0.5)) schemes.push_back(scheme);
      }
      if (schemes.empty()) schemes.push_back(kAllIdSchemes[rng.Uniform(kNumIdSchemes)]);
      const auto sources = RandomSources(rng);
      for (std::size_t s : sources) {
        SecurityDraft* own = security_in(group, group.entities.front(), s);
        const SecurityDraft* theirs = security_in(other, other.entities.front(), s);
        if (!own || !theirs) continue;
        for (auto scheme : schemes) {
          const auto i = static_cast<std::size_t>(scheme);
          if (theirs->identifiers[i]) own->identifiers[i] = theirs->identifiers[i];
        }
      }
      std::string names;
      for (auto scheme : schemes) {
        if (!names.empty()) names += ",";
        names += IdSchemeName(scheme);
      }
      entry.applied = true;
      entry.detail = "merged with " + other.group_id + " (" + names +
                     ") in sources " + JoinSources(sources);
      break;
    }
    case ArtifactKind::kParaphraseAttribute: {
      std::vector<std::size_t> with_description;
      for (std::size_t s = 0; s < num_sources_; ++s) {
        if (group.companies[s].description) with_description.push_back(s);
      }
      if (with_description.empty()) {
        entry.detail = "no description";
        break;
      }
      std::vector<std::size_t> chosen;
      for (std::size_t s : with_description) {
        if (rng.Bernoulli(0.5)) chosen.push_back(s);
      }
      if (chosen.empty()) {
        chosen.push_back(with_description[rng.Uniform(with_description.size())]);
      }
      for (std::size_t s : chosen) {
        auto& d = group.companies[s].description;
        d = ParaphraseDescription(*d, rng);
      }
      entry.applied = true;
      entry.detail = "sources " + JoinSources(chosen);
      break;
    }
    case ArtifactKind::kMultipleIds: {
      const std::size_t entity = group.entities[rng.Uniform(group.entities.size())];
      auto records = records_of(entity);
      std::vector<IdScheme> used;
      for (auto scheme : kAllIdSchemes) {
        const auto i = static_cast<std::size_t>(scheme);
        if (std::any_of(records.begin(), records.end(),
                        [i](const SecurityDraft* r) { return r->identifiers[i].has_value(); })) {
          used.push_back(scheme);
        }
      }
      if (records.empty() || used.empty()) {
        entry.detail = "no identifiers";
        break;
      }
      const IdScheme scheme = used[rng.Uniform(used.size())];
      const std::string value = Mint(scheme, rng);
      std::vector<std::size_t> chosen;
      for (std::size_t r = 0; r < records.size(); ++r) {
        if (rng.Bernoulli(0.5)) chosen.push_back(r);
      }
      if (chosen.empty()) chosen.push_back(rng.Uniform(records.size()));
      if (records.size() >= 2 && chosen.size() == records.size()) {
        chosen.erase(chosen.begin() + static_cast<std::ptrdiff_t>(rng.Uniform(chosen.size())));
      }
      std::vector<std::size_t> sources;
      for (std::size_t r : chosen) {
        records[r]->identifiers[static_cast<std::size_t>(scheme)] = value;
        sources.push_back(records[r]->source);
      }
      entry.applied = true;
      entry.detail = std::string(IdSchemeName(scheme)) + " " + value +
                     " in sources " + JoinSources(sources);
      break;
    }
    case ArtifactKind::kNoIdOverlaps: {
      const std::size_t entity = group.entities[rng.Uniform(group.entities.size())];
      auto records = records_of(entity);
      for (std::size_t r = 1; r < records.size(); ++r) {
        for (auto scheme : kAllIdSchemes) {
          auto& v = records[r]->identifiers[static_cast<std::size_t>(scheme)];
          if (v) v = Mint(scheme, rng);
        }
      }
      entry.applied = records.size() >= 2;
      entry.detail = entry.applied
                         ? "entity " + std::to_string(entity) + ", " +
                               std::to_string(records.size()) + " records"
                         : "single record";
      break;
    }
    case ArtifactKind::kMultipleSecurities: {
      constexpr std::array<SecurityType, 3> kTypes = {
          SecurityType::kRight, SecurityType::kBond, SecurityType::kUnit};
      const std::size_t count = rng.UniformIn(1, 3);
      std::string detail;
      for (std::size_t k = 0; k < count; ++k) {
        const SecurityType type = kTypes[rng.Uniform(kTypes.size())];
        const std::size_t entity = NewEntity();
        const IdentifierSet ids = MintAll(rng);
        const auto sources = RandomSources(rng);
        for (std::size_t s : sources) {
          group.securities.push_back(
              {entity, s, type,
               group.companies[s].name + " " + std::string(AddedSecuritySuffix(type)),
               ids});
        }
        group.entities.push_back(entity);
        if (!detail.empty()) detail += "; ";
        detail += std::string(SecurityTypeName(type)) + " in sources " +
                  JoinSources(sources);
      }
      entry.applied = true;
      entry.detail = detail;
      break;
    }
  }
  return entry;
}

GeneratedDataset GenerationState::Finish(std::uint64_t seed,
                                         std::vector<GroupProvenance> provenance) {
  Rng rng = Rng::Derive(seed, "datagen/ids");

  // Company slots are (group, source); security slots index (group, draft).
  std::vector<std::pair<std::size_t, std::size_t>> company_slots;
  std::vector<std::pair<std::size_t, std::size_t>> security_slots;
  for (std::size_t g = 0; g < groups_.size(); ++g) {
    for (std::size_t s = 0; s < num_sources_; ++s) company_slots.emplace_back(g, s);
    for (std::size_t i = 0; i < groups_[g].securities.size(); ++i) {
      security_slots.emplace_back(g, i);
    }
  }
  std::vector<std::size_t> company_order(company_slots.size());
  std::iota(company_order.begin(), company_order.end(), 0);
  rng.Shuffle(std::span<std::size_t>(company_order));
  std::vector<std::size_t> security_order(security_slots.size());
  std::iota(security_order.begin(), security_order.end(), 0);
  rng.Shuffle(std::span<std::size_t>(security_order));

  std::vector<RecordId> company_ids(company_slots.size());
  for (std::size_t k = 0; k < company_order.size(); ++k) {
    company_ids[company_order[k]] = RecordId(Padded("c", k + 1, 7));
  }
  std::vector<RecordId> security_ids(security_slots.size());
  for (std::size_t k = 0; k < security_order.size(); ++k) {
    security_ids[security_order[k]] = RecordId(Padded("s", k + 1, 7));
  }

  GeneratedDataset out;
  std::map<std::size_t, EntityGroup> company_groups;
  for (std::size_t i = 0; i < company_slots.size(); ++i) {
    const auto [g, s] = company_slots[i];
    const CompanyDraft& c = groups_[g].companies[s];
    out.companies.push_back({company_ids[i], DataSourceId{static_cast<std::uint32_t>(s)},
                             c.name, c.city, c.region, c.country_code, c.description});
    const std::size_t root = Find(company_parent_, g);
    auto& group = company_groups[root];
    group.group_id = "c" + groups_[root].group_id;
    group.kind = GroupKind::kCompany;
    group.members.push_back(company_ids[i]);
  }
  std::map<std::size_t, EntityGroup> security_groups;
  for (std::size_t i = 0; i < security_slots.size(); ++i) {
    const auto [g, k] = security_slots[i];
    const SecurityDraft& d = groups_[g].securities[k];
    const RecordId& issuer = company_ids[g * num_sources_ + d.source];
    out.securities.push_back({security_ids[i],
                              DataSourceId{static_cast<std::uint32_t>(d.source)}, issuer,
                              d.name, d.type, d.identifiers});
    const std::size_t root = Find(entity_parent_, d.entity);
    auto& group = security_groups[root];
    group.group_id = Padded("sg", root, 7);
    group.kind = GroupKind::kSecurity;
    group.members.push_back(security_ids[i]);
  }
  std::sort(out.companies.begin(), out.companies.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });
  std::sort(out.securities.begin(), out.securities.end(),
            [](const auto& a, const auto& b) { return a.id < b.id; });

  std::vector<EntityGroup> cg;
  for (auto& [root, group] : company_groups) cg.push_back(std::move(group));
  std::vector<EntityGroup> sg;
  for (auto& [root, group] : security_groups) sg.push_back(std::move(group));
  out.company_truth = GroundTruth(std::move(cg));
  out.security_truth = GroundTruth(std::move(sg));
  out.provenance = std::move(provenance);
  return out;
}

GeneratedDataset Generate(std::span<const CompanySeed> seeds,
                          const GenerationParams& params) {
  GenerationState state(seeds, params);
  const std::uint64_t artifact_seed = MixSeed(params.seed, "datagen/artifacts");
  std::vector<GroupProvenance> provenance;
  provenance.reserve(state.num_groups());
  for (std::size_t g = 0; g < state.num_groups(); ++g) {
    // One stream per group so a group's draws do not depend on its
    // predecessors' outcomes.
    Rng rng = Rng::Derive(artifact_seed, std::to_string(g));
    GroupProvenance log{state.group(g).group_id, {}};
    for (auto kind : kAllArtifactKinds) {
      // Always consume one draw per kind, even at rate 0 or 1.
      if (rng.UnitReal() < params.rate(kind)) {
        log.artifacts.push_back(state.ApplyArtifact(kind, g, rng));
      }
    }
    provenance.push_back(std::move(log));
  }
  return state.Finish(params.seed, std::move(provenance));
}

std::string_view SplitName(Split split) {
  switch (split) {
    case Split::kTrain:
      return "train";
    case Split::kVal:
      return "val";
    case Split::kTest:
      return "test";
  }
  return "unknown";
}

std::optional<Split> ParseSplit(std::string_view name) {
  for (auto s : {Split::kTrain, Split::kVal, Split::kTest}) {
    if (SplitName(s) == name) return s;
  }
  return std::nullopt;
}

SplitAssignment SplitGroups(const GroundTruth& truth, const SplitRatios& ratios,
                            std::uint64_t seed) {
  if (truth.groups().empty()) throw std::invalid_argument("cannot split an empty truth");
  if (ratios.train < 0.0 || ratios.val < 0.0 || ratios.test < 0.0 ||
      std::abs(ratios.train + ratios.val + ratios.test - 1.0) > 1e-9) {
    throw std::invalid_argument("split ratios must be non-negative and sum to 1");
  }
  std::vector<std::string> ids;
  ids.reserve(truth.groups().size());
  for (const auto& g : truth.groups()) ids.push_back(g.group_id);
  std::sort(ids.begin(), ids.end());
  Rng rng = Rng::Derive(seed, "split");
  rng.Shuffle(std::span<std::string>(ids));

  const double n = static_cast<double>(ids.size());
  // The epsilon absorbs products like 0.6 * 10 landing just below 6.
  const auto n_train = static_cast<std::size_t>(std::floor(ratios.train * n + 1e-9));
  const auto n_val = std::min(ids.size() - n_train,
                              static_cast<std::size_t>(std::floor(ratios.val * n + 1e-9)));
  SplitAssignment out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    out[ids[i]] = i < n_train ? Split::kTrain
                  : i < n_train + n_val ? Split::kVal
                                        : Split::kTest;
  }
  return out;
}

TrainingPairs ExportTrainingPairs(const GroundTruth& truth,
                                  const SplitAssignment& assignment, Split which,
                                  double neg_ratio, std::uint64_t seed) {
  if (!(neg_ratio >= 0.0)) throw std::invalid_argument("neg_ratio must be >= 0");

  std::vector<RecordId> records;
  std::vector<std::size_t> group_of;
  TrainingPairs out;
  for (std::size_t g = 0; g < truth.groups().size(); ++g) {
    const auto& group = truth.groups()[g];
    auto it = assignment.find(group.group_id);
    if (it == assignment.end() || it->second != which) continue;
    const auto& m = group.members;
    for (std::size_t i = 0; i < m.size(); ++i) {
      records.push_back(m[i]);
      group_of.push_back(g);
      for (std::size_t j = i + 1; j < m.size(); ++j) {
        out.pairs.push_back({RecordPair(m[i], m[j]), MatchLabel::kMatch});
      }
    }
  }
  std::sort(out.pairs.begin(), out.pairs.end(),
            [](const auto& a, const auto& b) { return a.pair < b.pair; });
  const std::size_t positives = out.pairs.size();

  const std::size_t n = records.size();
  const std::size_t available = PairsAmong(n) - positives;
  const auto requested = static_cast<std::size_t>(
      std::llround(neg_ratio * static_cast<double>(positives)));
  out.requested_negatives = requested;

  std::vector<std::pair<std::size_t, std::size_t>> picked;
  Rng rng = Rng::Derive(seed, "negatives/" + std::string(SplitName(which)));
  if (requested >= available || 2 * requested > available) {
    // Enumerate every negative, then keep a uniform subset.
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (group_of[i] != group_of[j]) picked.emplace_back(i, j);
      }
    }
    if (requested < picked.size()) {
      for (std::size_t k = 0; k < requested; ++k) {
        std::swap(picked[k], picked[k + rng.Uniform(picked.size() - k)]);
      }
      picked.resize(requested);
    }
  } else {
    std::unordered_set<std::uint64_t> seen;
    while (picked.size() < requested) {
      std::size_t i = rng.Uniform(n);
      std::size_t j = rng.Uniform(n);
      if (i == j || group_of[i] == group_of[j]) continue;
      if (j < i) std::swap(i, j);
      if (seen.insert(static_cast<std::uint64_t>(i) * n + j).second) picked.emplace_back(i, j);
    }
  }
  if (requested > available) {
    out.warning = "split '" + std::string(SplitName(which)) + "' has only " +
                  std::to_string(available) + " negative pairs, " +
                  std::to_string(requested) + " requested";
  }
  std::vector<LabeledPair> negatives;
  negatives.reserve(picked.size());
  for (auto [i, j] : picked) {
    negatives.push_back({RecordPair(records[i], records[j]), MatchLabel::kNoMatch});
  }
  std::sort(negatives.begin(), negatives.end(),
            [](const auto& a, const auto& b) { return a.pair < b.pair; });
  out.pairs.insert(out.pairs.end(), negatives.begin(), negatives.end());
  return out;
}

namespace {

DatasetStatistics TruthStatistics(const GroundTruth& truth, std::size_t sources) {
  DatasetStatistics s;
  s.sources = sources;
  s.entities = truth.groups().size();
  s.records = truth.record_count();
  s.matches = truth.true_pair_count();
  s.matches_per_entity = s.entities == 0 ? 0.0
                                         : static_cast<double>(s.matches) /
                                               static_cast<double>(s.entities);
  return s;
}

template <typename Records>
std::size_t CountSources(const Records& records) {
  std::unordered_set<std::uint32_t> sources;
  for (const auto& r : records) sources.insert(r.source.value);
  return sources.size();
}

}  // namespace

DatasetStatistics CompanyStatistics(const GeneratedDataset& data) {
  DatasetStatistics s = TruthStatistics(data.company_truth, CountSources(data.companies));
  const auto described = std::count_if(data.companies.begin(), data.companies.end(),
                                       [](const auto& c) { return c.description.has_value(); });
  s.description_share = data.companies.empty()
                            ? 0.0
                            : static_cast<double>(described) /
                                  static_cast<double>(data.companies.size());
  return s;
}

DatasetStatistics SecurityStatistics(const GeneratedDataset& data) {
  return TruthStatistics(data.security_truth, CountSources(data.securities));
}

}  // namespace groupmatch
