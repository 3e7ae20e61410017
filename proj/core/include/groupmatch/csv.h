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

#ifndef GROUPMATCH_CSV_H_
#define GROUPMATCH_CSV_H_

#include <cstddef>
#include <filesystem>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace groupmatch {

// RFC 4180 style CSV: comma separated, double-quote quoting with "" escapes,
// quoted fields may span lines. Blank lines are skipped and a leading UTF-8
// BOM is ignored.
struct CsvTable {
  std::string source;  // file name used in error messages
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> row_lines;  // 1-based line where each row starts

  std::optional<std::size_t> FindColumn(std::string_view name) const;
  // Throws ParseError (line 1) when the column is missing.
  std::size_t RequireColumn(std::string_view name) const;
};

// Throws ParseError when a row's field count differs from the header's or a
// quote is left open.
CsvTable ParseCsv(std::string_view text, std::string source = "<memory>");
// Throws DataError if the file cannot be read.
CsvTable ReadCsvFile(const std::filesystem::path& path);

class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void WriteRow(const std::vector<std::string>& fields);
  void WriteRow(std::initializer_list<std::string_view> fields);

 private:
  void WriteField(std::string_view field);

  std::ostream& out_;
};

std::string ReadFileToString(const std::filesystem::path& path);

}  // namespace groupmatch

#endif  // GROUPMATCH_CSV_H_
