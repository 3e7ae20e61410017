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

#ifndef GROUPMATCH_IO_H_
#define GROUPMATCH_IO_H_

// File formats exchanged between pipeline stages. Every Write* has a Read*
// inverse over the parsed table: Read(Parse(Write(x))) == x. Optional text
// fields are written as empty cells and empty cells read back as absent.

#include <filesystem>
#include <functional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "groupmatch/blocking.h"
#include "groupmatch/cleanup.h"
#include "groupmatch/csv.h"
#include "groupmatch/datagen.h"
#include "groupmatch/matcher.h"
#include "groupmatch/metrics.h"
#include "groupmatch/model.h"

namespace groupmatch {

// Creates missing parent directories. Throws DataError naming the path when
// it cannot be written.
void WriteFile(const std::filesystem::path& path,
               const std::function<void(std::ostream&)>& write);

// Shortest decimal form that parses back to the same double.
std::string FormatDouble(double value);

// id, source, name, city, region, country_code, description
void WriteCompanies(std::ostream& out, std::span<const CompanyRecord> companies);
std::vector<CompanyRecord> ReadCompanies(const CsvTable& table);

// id, source, issuer_id, name, security_type, isin, cusip, valor, sedol
void WriteSecurities(std::ostream& out, std::span<const SecurityRecord> securities);
std::vector<SecurityRecord> ReadSecurities(const CsvTable& table);

// group_id, record_id; one row per member, groups in order.
void WriteGroups(std::ostream& out, std::span<const EntityGroup> groups);
std::vector<EntityGroup> ReadGroups(const CsvTable& table, GroupKind kind);
// Names predicted groups "grp000001", ... in the given order.
std::vector<EntityGroup> NamePredictedGroups(
    std::span<const std::vector<RecordId>> groups, GroupKind kind);

// group_id, split
void WriteSplits(std::ostream& out, const SplitAssignment& splits);
SplitAssignment ReadSplits(const CsvTable& table);

// id_a, id_b, provenance
void WriteCandidates(std::ostream& out, std::span<const CandidatePair> candidates);
std::vector<CandidatePair> ReadCandidates(const CsvTable& table);

// id_a, id_b, score, label, provenance. Rows with an empty provenance cell
// read back with provenance_known = false.
void WritePredictions(std::ostream& out, std::span<const Prediction> predictions);
std::vector<Prediction> ReadPredictions(const CsvTable& table);

// id_a, id_b, label
void WriteLabeledPairs(std::ostream& out, std::span<const LabeledPair> pairs);
std::vector<LabeledPair> ReadLabeledPairs(const CsvTable& table);

// One JSON object per line: {"group_id", "artifacts": [{kind, applied, detail}]}.
void WriteProvenance(std::ostream& out, std::span<const GroupProvenance> log);
std::vector<GroupProvenance> ReadProvenance(std::string_view text,
                                            const std::string& source = "<memory>");

// One JSON object per line: {"id_a", "id_b", "phase"}.
void WriteAudit(std::ostream& out, std::span<const RemovedEdge> removed);
std::vector<RemovedEdge> ReadAudit(std::string_view text,
                                   const std::string& source = "<memory>");

// {"stages": [{"stage", "precision", "recall", "f1", "tp", "fp", "fn",
//              "cluster_purity", "n_components", "max_component_size"}]}
// Group-only fields are null for the pairwise stage.
std::string MetricsReportJson(std::span<const StageScores> stages);
std::vector<StageScores> ParseMetricsReport(std::string_view json,
                                            const std::string& source = "<memory>");

}  // namespace groupmatch

#endif  // GROUPMATCH_IO_H_
