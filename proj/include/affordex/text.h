// Copyright 2026 The Affordex Authors.
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

// Small text helpers shared by the tagger, the command grammar and the
// evaluation code. All functions operate on UTF-8 bytes but only fold ASCII.

#ifndef AFFORDEX_TEXT_H_
#define AFFORDEX_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace affordex {

std::string AsciiLowercase(std::string_view text);

// Lowercases, trims and collapses runs of whitespace to a single space.
std::string CanonicalSpacing(std::string_view text);

// Splits on ASCII whitespace, dropping empty pieces.
std::vector<std::string> SplitWords(std::string_view text);

// Splits on '\n', dropping a trailing '\r' from every line. A final line
// break does not produce an empty last line.
std::vector<std::string> SplitLines(std::string_view text);

// Joins words with single spaces.
std::string JoinWords(const std::vector<std::string>& words);

bool HasAlpha(std::string_view text);
bool IsLowerAlpha(std::string_view text);

// A maximal run of ASCII letters, lowercased. `boundary_before` is set when
// the run is separated from the previous one by anything other than plain
// spaces or hyphens (punctuation, digits, line breaks).
struct WordToken {
  std::string text;
  std::string surface;
  bool boundary_before = false;
};

std::vector<WordToken> TokenizeWords(std::string_view text);

}  // namespace affordex

#endif  // AFFORDEX_TEXT_H_
