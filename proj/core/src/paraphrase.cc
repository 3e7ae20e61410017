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

#include <algorithm>
#include <array>
#include <cctype>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "groupmatch/datagen.h"

namespace groupmatch {

namespace {

constexpr std::array<std::string_view, 12> kStopwords = {
    "a", "an", "the", "of", "and", "for", "with", "to", "in", "on", "its", "their"};

// Symmetric: either side rewrites to the other.
constexpr std::array<std::pair<std::string_view, std::string_view>, 24> kSynonyms = {{
    {"provides", "offers"},
    {"company", "firm"},
    {"develops", "builds"},
    {"software", "applications"},
    {"services", "solutions"},
    {"customers", "clients"},
    {"platform", "system"},
    {"global", "worldwide"},
    {"manufacturer", "producer"},
    {"products", "goods"},
    {"leading", "major"},
    {"operates", "runs"},
    {"technology", "tech"},
    {"financial", "finance"},
    {"healthcare", "medical"},
    {"provider", "supplier"},
    {"businesses", "enterprises"},
    {"designs", "creates"},
    {"helps", "assists"},
    {"online", "digital"},
    {"specializes", "focuses"},
    {"retailer", "seller"},
    {"consumers", "households"},
    {"distributes", "supplies"},
}};

std::string LowerAscii(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) {
    s.remove_suffix(1);
  }
  return s;
}

std::optional<std::string_view> Synonym(std::string_view lower) {
  for (const auto& [a, b] : kSynonyms) {
    if (lower == a) return b;
    if (lower == b) return a;
  }
  return std::nullopt;
}

bool IsStopword(std::string_view lower) {
  return std::find(kStopwords.begin(), kStopwords.end(), lower) != kStopwords.end();
}

std::string RewriteClause(std::string_view clause, Rng& rng) {
  std::vector<std::string> words;
  std::size_t i = 0;
  while (i < clause.size()) {
    while (i < clause.size() && clause[i] == ' ') ++i;
    std::size_t j = i;
    while (j < clause.size() && clause[j] != ' ') ++j;
    if (j > i) words.emplace_back(clause.substr(i, j - i));
    i = j;
  }
  std::vector<std::string> out;
  for (std::size_t w = 0; w < words.size(); ++w) {
    std::string_view word = words[w];
    // Trailing sentence punctuation stays attached to whatever replaces it.
    std::size_t core_len = word.size();
    while (core_len > 0 && std::string_view(".;:!?").find(word[core_len - 1]) !=
                               std::string_view::npos) {
      --core_len;
    }
    const std::string_view core = word.substr(0, core_len);
    const std::string_view tail = word.substr(core_len);
    const std::string lower = LowerAscii(core);
    const bool last = w + 1 == words.size();
    if (IsStopword(lower) && tail.empty() && !(last && out.empty()) &&
        rng.Bernoulli(0.5)) {
      continue;
    }
    if (auto syn = Synonym(lower); syn && rng.Bernoulli(0.7)) {
      std::string replaced(*syn);
      if (!core.empty() && std::isupper(static_cast<unsigned char>(core.front())) != 0) {
        replaced.front() = static_cast<char>(std::toupper(static_cast<unsigned char>(replaced.front())));
      }
      out.push_back(replaced + std::string(tail));
      continue;
    }
    out.emplace_back(word);
  }
  std::string joined;
  for (const auto& w : out) {
    if (!joined.empty()) joined += ' ';
    joined += w;
  }
  return joined;
}

}  // namespace

std::string ParaphraseDescription(std::string_view text, Rng& rng) {
  text = Trim(text);
  const bool period = !text.empty() && text.back() == '.';
  if (period) text.remove_suffix(1);

  std::vector<std::string> clauses;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ',') {
      const std::string_view c = Trim(text.substr(start, i - start));
      if (!c.empty()) clauses.emplace_back(c);
      start = i + 1;
    }
  }
  if (clauses.size() >= 2) {
    const auto before = clauses;
    rng.Shuffle(std::span<std::string>(clauses));
    if (clauses == before) std::rotate(clauses.begin(), clauses.begin() + 1, clauses.end());
  }

  std::string out;
  for (const auto& c : clauses) {
    std::string rewritten = RewriteClause(c, rng);
    if (rewritten.empty()) continue;
    if (!out.empty()) out += ", ";
    out += rewritten;
  }
  if (!out.empty()) {
    out.front() = static_cast<char>(std::toupper(static_cast<unsigned char>(out.front())));
  }
  if (period) out += '.';
  return out;
}

}  // namespace groupmatch
