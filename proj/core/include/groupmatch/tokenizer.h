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

#ifndef GROUPMATCH_TOKENIZER_H_
#define GROUPMATCH_TOKENIZER_H_

#include <string>
#include <string_view>
#include <vector>

namespace groupmatch {

// Normalized word tokens shared by token blocking and the name matchers.
//
// Text is decoded as UTF-8 and split on every run of non-alphanumeric code
// points. Non-ASCII letters count as alphanumeric; ASCII, Latin-1, Latin
// Extended-A, Greek and Cyrillic capitals are lower-cased. Tokens shorter
// than two code points and the corporate stopwords
// {inc, ltd, corp, co, plc, the} are dropped. Invalid UTF-8 bytes act as
// separators.
std::vector<std::string> Tokenize(std::string_view text);

// Tokenize() output, sorted and deduplicated.
std::vector<std::string> TokenSet(std::string_view text);

bool IsCorporateStopword(std::string_view token);

// Jaccard similarity of two sorted unique token sets. Defined as 0 when both
// are empty.
double Jaccard(const std::vector<std::string>& a,
               const std::vector<std::string>& b);

}  // namespace groupmatch

#endif  // GROUPMATCH_TOKENIZER_H_
