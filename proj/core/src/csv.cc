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

#include "groupmatch/csv.h"

#include <fstream>
#include <sstream>

#include "groupmatch/errors.h"

namespace groupmatch {

std::optional<std::size_t> CsvTable::FindColumn(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t CsvTable::RequireColumn(std::string_view name) const {
  if (auto i = FindColumn(name)) return *i;
  throw ParseError(source, 1,
                   "missing required column '" + std::string(name) + "'");
}

CsvTable ParseCsv(std::string_view text, std::string source) {
  CsvTable table;
  table.source = std::move(source);
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

  std::vector<std::string> row;
  std::string field;
  bool in_quotes = false;
  bool field_quoted = false;
  bool row_has_content = false;
  std::size_t line = 1;
  std::size_t row_line = 1;

  auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
    field_quoted = false;
  };
  auto end_row = [&] {
    if (row_has_content) {
      end_field();
      if (table.header.empty() && table.rows.empty()) {
        table.header = std::move(row);
      } else {
        if (row.size() != table.header.size()) {
          throw ParseError(table.source, row_line,
                           "expected " + std::to_string(table.header.size()) +
                               " fields, found " + std::to_string(row.size()));
        }
        table.rows.push_back(std::move(row));
        table.row_lines.push_back(row_line);
      }
    }
    row.clear();
    field.clear();
    field_quoted = false;
    row_has_content = false;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field.empty() || field_quoted) {
          throw ParseError(table.source, line, "unexpected quote in field");
        }
        if (!row_has_content) row_line = line;
        in_quotes = true;
        field_quoted = true;
        row_has_content = true;
        break;
      case ',':
        if (!row_has_content) row_line = line;
        row_has_content = true;
        end_field();
        break;
      case '\r':
        break;
      case '\n':
        end_row();
        ++line;
        break;
      default:
        if (field_quoted) {
          throw ParseError(table.source, line,
                           "characters after closing quote");
        }
        if (!row_has_content) row_line = line;
        row_has_content = true;
        field.push_back(c);
    }
  }
  if (in_quotes) throw ParseError(table.source, row_line, "unterminated quote");
  end_row();
  return table;
}

std::string ReadFileToString(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path.string() + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw DataError("error while reading '" + path.string() + "'");
  return std::move(buffer).str();
}

CsvTable ReadCsvFile(const std::filesystem::path& path) {
  return ParseCsv(ReadFileToString(path), path.string());
}

void CsvWriter::WriteField(std::string_view field) {
  const bool quote = field.find_first_of(",\"\r\n") != std::string_view::npos;
  if (!quote) {
    out_ << field;
    return;
  }
  out_ << '"';
  for (char c : field) {
    if (c == '"') out_ << '"';
    out_ << c;
  }
  out_ << '"';
}

void CsvWriter::WriteRow(const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out_ << ',';
    WriteField(fields[i]);
  }
  out_ << '\n';
}

void CsvWriter::WriteRow(std::initializer_list<std::string_view> fields) {
  bool first = true;
  for (auto f : fields) {
    if (!first) out_ << ',';
    first = false;
    WriteField(f);
  }
  out_ << '\n';
}

}  // namespace groupmatch
