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

#include "affordex/morphology.h"

#include <fstream>

#include "absl/status/status.h"
#include "affordex/text.h"
#include "fmt/format.h"

namespace affordex {
namespace {

bool IsVowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool IsConsonant(char c) { return c >= 'a' && c <= 'z' && !IsVowel(c); }

// Undoes the spelling changes made when -ing or -ed was attached.
std::string RestoreStem(std::string_view stem) {
  size_t n = stem.size();
  char last = stem[n - 1];
  if (n >= 3 && last == stem[n - 2] && IsConsonant(last) && last != 'l' &&
      last != 's' && last != 'f' && last != 'z') {
    return std::string(stem.substr(0, n - 1));
  }
  if (last == 'v' || last == 'u' || (last == 'c' && n >= 3)) {
    return std::string(stem) + "e";
  }
  if (n >= 3 && IsConsonant(stem[n - 3]) && IsVowel(stem[n - 2]) &&
      IsConsonant(last) && last != 'w' && last != 'x' && last != 'y') {
    return std::string(stem) + "e";
  }
  return std::string(stem);
}

}  // namespace

WordList::WordList(std::vector<std::string> words) {
  for (auto& w : words) words_.insert(std::move(w));
}

absl::StatusOr<WordList> WordList::Load(const std::string& path) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(fmt::format("cannot open {}", path));
  WordList list;
  std::string line;
  while (std::getline(in, line)) {
    std::string word = JoinWords(SplitWords(line));
    if (word.empty() || word[0] == '#') continue;
    list.words_.insert(std::move(word));
  }
  return list;
}

absl::StatusOr<WordMap> WordMap::Load(const std::string& path) {
  std::ifstream in(path);
  if (!in) return absl::NotFoundError(fmt::format("cannot open {}", path));
  WordMap map;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty() || line[0] == '#') continue;
    size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 == line.size() ||
        line.find('\t', tab + 1) != std::string::npos) {
      return absl::DataLossError(
          fmt::format("{}:{}: expected key<TAB>value", path, line_number));
    }
    map.map_[line.substr(0, tab)] = line.substr(tab + 1);
  }
  return map;
}

const std::string* WordMap::Find(std::string_view key) const {
  auto it = map_.find(std::string(key));
  return it == map_.end() ? nullptr : &it->second;
}

void WordMap::Insert(std::string key, std::string value) {
  map_[std::move(key)] = std::move(value);
}

std::string SingularizeByRule(std::string_view noun) {
  size_t n = noun.size();
  if (n <= 2) return std::string(noun);
  if (noun.ends_with("ss") || noun.ends_with("us") ||
      noun.ends_with("is")) {
    return std::string(noun);
  }
  if (n > 4 && noun.ends_with("ies")) {
    return std::string(noun.substr(0, n - 3)) + "y";
  }
  if (noun.ends_with("sses") || noun.ends_with("xes") ||
      noun.ends_with("zes") || noun.ends_with("ches") ||
      noun.ends_with("shes") || noun.ends_with("oes")) {
    return std::string(noun.substr(0, n - 2));
  }
  if (noun.back() == 's') return std::string(noun.substr(0, n - 1));
  return std::string(noun);
}

bool HasVerbalSuffix(std::string_view word) {
  return (word.size() >= 5 && word.ends_with("ing")) ||
         (word.size() >= 4 && word.ends_with("ed"));
}

std::string BaseFormByRule(std::string_view verb) {
  size_t n = verb.size();
  if (n > 4 && (verb.ends_with("ies") || verb.ends_with("ied"))) {
    return std::string(verb.substr(0, n - 3)) + "y";
  }
  if (n >= 5 && verb.ends_with("ing")) {
    return RestoreStem(verb.substr(0, n - 3));
  }
  if (n >= 4 && verb.ends_with("ed")) {
    return RestoreStem(verb.substr(0, n - 2));
  }
  if (n >= 4 && verb.ends_with("es")) {
    std::string_view stem = verb.substr(0, n - 2);
    if (stem.ends_with("s") || stem.ends_with("x") ||
        stem.ends_with("z") || stem.ends_with("ch") ||
        stem.ends_with("sh")) {
      return std::string(stem);
    }
  }
  if (n > 3 && verb.back() == 's' && verb[n - 2] != 's' &&
      verb[n - 2] != 'u' && verb[n - 2] != 'i') {
    return std::string(verb.substr(0, n - 1));
  }
  return std::string(verb);
}

std::string Singularizer::Singular(std::string_view noun) const {
  if (const std::string* hit = exceptions_.Find(noun)) return *hit;
  return SingularizeByRule(noun);
}

bool VerbNormalizer::IsVerbal(std::string_view token) const {
  if (!IsLowerAlpha(token)) return false;
  return verbs_.Contains(token) || exceptions_.Find(token) != nullptr ||
         HasVerbalSuffix(token);
}

absl::StatusOr<std::string> VerbNormalizer::BaseForm(
    std::string_view token) const {
  if (!IsLowerAlpha(token)) {
    return absl::InvalidArgumentError(
        fmt::format("not a lowercase word: '{}'", token));
  }
  if (const std::string* hit = exceptions_.Find(token)) return *hit;
  if (verbs_.Contains(token) || HasVerbalSuffix(token)) {
    return BaseFormByRule(token);
  }
  return absl::InvalidArgumentError(
      fmt::format("cannot normalize '{}' to an imperative verb", token));
}

}  // namespace affordex
