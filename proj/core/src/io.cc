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

#include "groupmatch/io.h"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <system_error>

#include "groupmatch/errors.h"
#include "json.hpp"

namespace groupmatch {

namespace {

using nlohmann::json;

const std::string& Opt(const std::optional<std::string>& v) {
  static const std::string kEmpty;
  return v ? *v : kEmpty;
}

std::optional<std::string> OptCell(const std::string& cell) {
  if (cell.empty()) return std::nullopt;
  return cell;
}

std::uint32_t ParseUint(const CsvTable& t, std::size_t row, const std::string& cell,
                        std::string_view what) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size()) {
    throw ParseError(t.source, t.row_lines[row],
                     "bad " + std::string(what) + " '" + cell + "'");
  }
  return v;
}

double ParseDouble(const CsvTable& t, std::size_t row, const std::string& cell,
                   std::string_view what) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size()) {
    throw ParseError(t.source, t.row_lines[row],
                     "bad " + std::string(what) + " '" + cell + "'");
  }
  return v;
}

RecordPair ParsePair(const CsvTable& t, std::size_t row, std::size_t col_a,
                     std::size_t col_b) {
  const auto& a = t.rows[row][col_a];
  const auto& b = t.rows[row][col_b];
  if (a.empty() || b.empty() || a == b) {
    throw ParseError(t.source, t.row_lines[row], "bad record pair '" + a + "', '" + b + "'");
  }
  return RecordPair(RecordId(a), RecordId(b));
}

MatchLabel ParseLabelCell(const CsvTable& t, std::size_t row, const std::string& cell) {
  if (cell == "match") return MatchLabel::kMatch;
  if (cell == "no_match") return MatchLabel::kNoMatch;
  throw ParseError(t.source, t.row_lines[row], "bad label '" + cell + "'");
}

// Calls fn(line_number, parsed_object) for every non-blank line.
template <typename Fn>
void ForEachJsonLine(std::string_view text, const std::string& source, Fn fn) {
  std::size_t line = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line;
    std::string_view content = text.substr(start, end - start);
    start = end + 1;
    if (content.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      fn(line, json::parse(content));
    } catch (const json::exception& e) {
      throw ParseError(source, line, e.what());
    }
  }
}

}  // namespace

void WriteFile(const std::filesystem::path& path,
               const std::function<void(std::ostream&)>& write) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot open '" + path.string() + "' for writing");
  write(out);
  out.flush();
  if (!out) throw DataError("failed writing '" + path.string() + "'");
}

std::string FormatDouble(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

void WriteCompanies(std::ostream& out, std::span<const CompanyRecord> companies) {
  CsvWriter w(out);
  w.WriteRow({"id", "source", "name", "city", "region", "country_code", "description"});
  for (const auto& c : companies) {
    w.WriteRow({c.id.str(), std::to_string(c.source.value), c.name, Opt(c.city),
                Opt(c.region), Opt(c.country_code), Opt(c.description)});
  }
}

std::vector<CompanyRecord> ReadCompanies(const CsvTable& t) {
  const auto id = t.RequireColumn("id");
  const auto source = t.RequireColumn("source");
  const auto name = t.RequireColumn("name");
  const auto city = t.FindColumn("city");
  const auto region = t.FindColumn("region");
  const auto country = t.FindColumn("country_code");
  const auto description = t.FindColumn("description");
  auto opt = [](const std::vector<std::string>& row, std::optional<std::size_t> col) {
    return col ? OptCell(row[*col]) : std::nullopt;
  };
  std::vector<CompanyRecord> out;
  out.reserve(t.rows.size());
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto& row = t.rows[r];
    if (row[id].empty()) throw ParseError(t.source, t.row_lines[r], "empty id");
    if (row[name].empty()) throw ParseError(t.source, t.row_lines[r], "empty company name");
    out.push_back({RecordId(row[id]), DataSourceId{ParseUint(t, r, row[source], "source")},
                   row[name], opt(row, city), opt(row, region), opt(row, country),
                   opt(row, description)});
  }
  return out;
}

void WriteSecurities(std::ostream& out, std::span<const SecurityRecord> securities) {
  CsvWriter w(out);
  w.WriteRow({"id", "source", "issuer_id", "name", "security_type", "isin", "cusip",
              "valor", "sedol"});
  for (const auto& s : securities) {
    w.WriteRow({s.id.str(), std::to_string(s.source.value), s.issuer_id.str(), s.name,
                std::string(SecurityTypeName(s.security_type)),
                Opt(s.identifier(IdScheme::kIsin)), Opt(s.identifier(IdScheme::kCusip)),
                Opt(s.identifier(IdScheme::kValor)), Opt(s.identifier(IdScheme::kSedol))});
  }
}

std::vector<SecurityRecord> ReadSecurities(const CsvTable& t) {
  const auto id = t.RequireColumn("id");
  const auto source = t.RequireColumn("source");
  const auto issuer = t.RequireColumn("issuer_id");
  const auto name = t.RequireColumn("name");
  const auto type = t.FindColumn("security_type");
  std::array<std::optional<std::size_t>, kNumIdSchemes> scheme_cols;
  for (auto scheme : kAllIdSchemes) {
    scheme_cols[static_cast<std::size_t>(scheme)] = t.FindColumn(IdSchemeName(scheme));
  }
  std::vector<SecurityRecord> out;
  out.reserve(t.rows.size());
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto& row = t.rows[r];
    if (row[id].empty()) throw ParseError(t.source, t.row_lines[r], "empty id");
    SecurityRecord s;
    s.id = RecordId(row[id]);
    s.source = DataSourceId{ParseUint(t, r, row[source], "source")};
    s.issuer_id = RecordId(row[issuer]);
    s.name = row[name];
    if (type && !row[*type].empty()) {
      try {
        s.security_type = ParseSecurityType(row[*type]);
      } catch (const std::invalid_argument& e) {
        throw ParseError(t.source, t.row_lines[r], e.what());
      }
    }
    for (std::size_t k = 0; k < kNumIdSchemes; ++k) {
      if (scheme_cols[k]) s.identifiers[k] = OptCell(row[*scheme_cols[k]]);
    }
    out.push_back(std::move(s));
  }
  return out;
}

void WriteGroups(std::ostream& out, std::span<const EntityGroup> groups) {
  CsvWriter w(out);
  w.WriteRow({"group_id", "record_id"});
  for (const auto& g : groups) {
    for (const auto& id : g.members) w.WriteRow({g.group_id, id.str()});
  }
}

std::vector<EntityGroup> ReadGroups(const CsvTable& t, GroupKind kind) {
  const auto gcol = t.RequireColumn("group_id");
  const auto rcol = t.RequireColumn("record_id");
  std::vector<EntityGroup> out;
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto& row = t.rows[r];
    if (row[gcol].empty() || row[rcol].empty()) {
      throw ParseError(t.source, t.row_lines[r], "empty group or record id");
    }
    auto [it, inserted] = index.emplace(row[gcol], out.size());
    if (inserted) out.push_back({row[gcol], {}, kind});
    out[it->second].members.emplace_back(row[rcol]);
  }
  return out;
}

std::vector<EntityGroup> NamePredictedGroups(std::span<const std::vector<RecordId>> groups,
                                             GroupKind kind) {
  std::vector<EntityGroup> out;
  out.reserve(groups.size());
  char buf[32];
  for (std::size_t i = 0; i < groups.size(); ++i) {
    std::snprintf(buf, sizeof buf, "grp%06zu", i + 1);
    out.push_back({buf, groups[i], kind});
  }
  return out;
}

void WriteSplits(std::ostream& out, const SplitAssignment& splits) {
  CsvWriter w(out);
  w.WriteRow({"group_id", "split"});
  for (const auto& [g, s] : splits) w.WriteRow({g, SplitName(s)});
}

SplitAssignment ReadSplits(const CsvTable& t) {
  const auto gcol = t.RequireColumn("group_id");
  const auto scol = t.RequireColumn("split");
  SplitAssignment out;
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto split = ParseSplit(t.rows[r][scol]);
    if (!split) {
      throw ParseError(t.source, t.row_lines[r], "bad split '" + t.rows[r][scol] + "'");
    }
    out[t.rows[r][gcol]] = *split;
  }
  return out;
}

void WriteCandidates(std::ostream& out, std::span<const CandidatePair> candidates) {
  CsvWriter w(out);
  w.WriteRow({"id_a", "id_b", "provenance"});
  for (const auto& c : candidates) {
    w.WriteRow({c.pair.first().str(), c.pair.second().str(), c.provenance.ToString()});
  }
}

std::vector<CandidatePair> ReadCandidates(const CsvTable& t) {
  const auto a = t.RequireColumn("id_a");
  const auto b = t.RequireColumn("id_b");
  const auto p = t.FindColumn("provenance");
  std::vector<CandidatePair> out;
  out.reserve(t.rows.size());
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    Provenance prov;
    if (p) {
      auto parsed = Provenance::Parse(t.rows[r][*p]);
      if (!parsed) {
        throw ParseError(t.source, t.row_lines[r],
                         "bad provenance '" + t.rows[r][*p] + "'");
      }
      prov = *parsed;
    }
    out.push_back({ParsePair(t, r, a, b), prov});
  }
  return out;
}

void WritePredictions(std::ostream& out, std::span<const Prediction> predictions) {
  CsvWriter w(out);
  w.WriteRow({"id_a", "id_b", "score", "label", "provenance"});
  for (const auto& p : predictions) {
    w.WriteRow({p.pair.first().str(), p.pair.second().str(), FormatDouble(p.score),
                std::string(MatchLabelName(p.label)),
                p.provenance_known ? p.provenance.ToString() : std::string()});
  }
}

std::vector<Prediction> ReadPredictions(const CsvTable& t) {
  const auto a = t.RequireColumn("id_a");
  const auto b = t.RequireColumn("id_b");
  const auto score = t.RequireColumn("score");
  const auto label = t.RequireColumn("label");
  const auto prov = t.FindColumn("provenance");
  std::vector<Prediction> out;
  out.reserve(t.rows.size());
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    const auto& row = t.rows[r];
    Prediction p{ParsePair(t, r, a, b), ParseLabelCell(t, r, row[label]),
                 ParseDouble(t, r, row[score], "score"), {}, false};
    if (prov && !row[*prov].empty()) {
      auto parsed = Provenance::Parse(row[*prov]);
      if (!parsed) throw ParseError(t.source, t.row_lines[r], "bad provenance '" + row[*prov] + "'");
      p.provenance = *parsed;
      p.provenance_known = true;
    }
    out.push_back(std::move(p));
  }
  return out;
}

void WriteLabeledPairs(std::ostream& out, std::span<const LabeledPair> pairs) {
  CsvWriter w(out);
  w.WriteRow({"id_a", "id_b", "label"});
  for (const auto& p : pairs) {
    w.WriteRow({p.pair.first().str(), p.pair.second().str(), MatchLabelName(p.label)});
  }
}

std::vector<LabeledPair> ReadLabeledPairs(const CsvTable& t) {
  const auto a = t.RequireColumn("id_a");
  const auto b = t.RequireColumn("id_b");
  const auto label = t.RequireColumn("label");
  std::vector<LabeledPair> out;
  out.reserve(t.rows.size());
  for (std::size_t r = 0; r < t.rows.size(); ++r) {
    out.push_back({ParsePair(t, r, a, b), ParseLabelCell(t, r, t.rows[r][label])});
  }
  return out;
}

void WriteProvenance(std::ostream& out, std::span<const GroupProvenance> log) {
  for (const auto& g : log) {
    json artifacts = json::array();
    for (const auto& e : g.artifacts) {
      artifacts.push_back({{"kind", ArtifactKindName(e.kind)},
                           {"applied", e.applied},
                           {"detail", e.detail}});
    }
    out << json{{"group_id", g.group_id}, {"artifacts", artifacts}}.dump() << '\n';
  }
}

std::vector<GroupProvenance> ReadProvenance(std::string_view text,
                                            const std::string& source) {
  std::vector<GroupProvenance> out;
  ForEachJsonLine(text, source, [&](std::size_t line, const json& j) {
    GroupProvenance g{j.at("group_id").get<std::string>(), {}};
    for (const auto& a : j.at("artifacts")) {
      const auto kind = ParseArtifactKind(a.at("kind").get<std::string>());
      if (!kind) throw ParseError(source, line, "unknown artifact kind");
      g.artifacts.push_back({*kind, a.at("applied").get<bool>(),
                             a.at("detail").get<std::string>()});
    }
    out.push_back(std::move(g));
  });
  return out;
}

void WriteAudit(std::ostream& out, std::span<const RemovedEdge> removed) {
  for (const auto& e : removed) {
    out << json{{"id_a", e.pair.first().str()},
                {"id_b", e.pair.second().str()},
                {"phase", RemovalPhaseName(e.phase)}}
               .dump()
        << '\n';
  }
}

std::vector<RemovedEdge> ReadAudit(std::string_view text, const std::string& source) {
  std::vector<RemovedEdge> out;
  ForEachJsonLine(text, source, [&](std::size_t line, const json& j) {
    const auto phase_name = j.at("phase").get<std::string>();
    std::optional<RemovalPhase> phase;
    for (auto p : {RemovalPhase::kPreCleanup, RemovalPhase::kMinCut,
                   RemovalPhase::kBetweenness}) {
      if (RemovalPhaseName(p) == phase_name) phase = p;
    }
    if (!phase) throw ParseError(source, line, "unknown phase '" + phase_name + "'");
    const auto a = j.at("id_a").get<std::string>();
    const auto b = j.at("id_b").get<std::string>();
    if (a.empty() || b.empty() || a == b) throw ParseError(source, line, "bad record pair");
    out.push_back({RecordPair(RecordId(a), RecordId(b)), *phase});
  });
  return out;
}

std::string MetricsReportJson(std::span<const StageScores> stages) {
  json arr = json::array();
  for (const auto& s : stages) {
    json j{{"stage", StageName(s.stage)},
           {"precision", s.precision},
           {"recall", s.recall},
           {"f1", s.f1},
           {"tp", s.tp},
           {"fp", s.fp},
           {"fn", s.fn}};
    j["cluster_purity"] = s.cluster_purity ? json(*s.cluster_purity) : json(nullptr);
    j["n_components"] = s.n_components ? json(*s.n_components) : json(nullptr);
    j["max_component_size"] =
        s.max_component_size ? json(*s.max_component_size) : json(nullptr);
    arr.push_back(std::move(j));
  }
  return json{{"stages", arr}}.dump(2) + "\n";
}

std::vector<StageScores> ParseMetricsReport(std::string_view text,
                                            const std::string& source) {
  std::vector<StageScores> out;
  try {
    const json doc = json::parse(text);
    for (const auto& j : doc.at("stages")) {
      StageScores s;
      const auto stage = ParseStage(j.at("stage").get<std::string>());
      if (!stage) throw ParseError(source, 1, "unknown stage");
      s.stage = *stage;
      s.precision = j.at("precision").get<double>();
      s.recall = j.at("recall").get<double>();
      s.f1 = j.at("f1").get<double>();
      s.tp = j.at("tp").get<std::size_t>();
      s.fp = j.at("fp").get<std::size_t>();
      s.fn = j.at("fn").get<std::size_t>();
      if (!j.at("cluster_purity").is_null()) s.cluster_purity = j["cluster_purity"].get<double>();
      if (!j.at("n_components").is_null()) {
        s.n_components = j["n_components"].get<std::size_t>();
      }
      if (!j.at("max_component_size").is_null()) {
        s.max_component_size = j["max_component_size"].get<std::size_t>();
      }
      out.push_back(s);
    }
  } catch (const json::exception& e) {
    throw ParseError(source, 1, e.what());
  }
  return out;
}

}  // namespace groupmatch
