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

// Word lists and inflection handling: the suffix rules used to singularize
// nouns and to recover the base (imperative) form of verbs, backed by
// exception tables for words the rules get wrong.

#ifndef AFFORDEX_MORPHOLOGY_H_
#define AFFORDEX_MORPHOLOGY_H_

#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "absl/status/statusor.h"

namespace affordex {

// A set of lowercase words, loaded from a file with one word per line.
// Blank lines and lines starting with '#' are ignored.
class WordList {
 public:
  WordList() = default;
  explicit WordList(std::vector<std::string> words);

  static absl::StatusOr<WordList> Load(const std::string& path);

  bool Contains(std::string_view word) const {
    return words_.count(std::string(word)) > 0;
  }
  size_t size() const { return words_.size(); }
  void Insert(std::string word) { words_.insert(std::move(word)); }

 private:
  std::unordered_set<std::string> words_;
};

// A word-to-word map, loaded from "key<TAB>value" lines.
class WordMap {
 public:
  WordMap() = default;

  static absl::StatusOr<WordMap> Load(const std::string& path);

  const std::string* Find(std::string_view key) const;
  void Insert(std::string key, std::string value);
  size_t size() const { return map_.size(); }

 private:
  std::unordered_map<std::string, std::string> map_;
};

// Suffix rules only. Input must be lowercase ASCII letters.
std::string SingularizeByRule(std::string_view noun);

// Suffix rules only: -ies/-ied y-restoration, -ing/-ed stripping with
// consonant undoubling or e-restoration, and third-person -s/-es. Words
// without a recognised suffix are returned unchanged.
std::string BaseFormByRule(std::string_view verb);

// True when `word` carries an -ing or -ed suffix on a stem of at least two
// letters.
bool HasVerbalSuffix(std::string_view word);

class Singularizer {
 public:
  Singularizer() = default;
  explicit Singularizer(WordMap exceptions)
      : exceptions_(std::move(exceptions)) {}

  std::string Singular(std::string_view noun) const;

 private:
  WordMap exceptions_;
};

// Maps verb forms to their base form. Known forms (present in the verb list)
// go through the exception table, then the rules; unknown words are accepted
// only when they carry a verbal suffix.
class VerbNormalizer {
 public:
  VerbNormalizer() = default;
  VerbNormalizer(WordList verbs, WordMap exceptions)
      : verbs_(std::move(verbs)), exceptions_(std::move(exceptions)) {}

  // Whether the token can start a verb phrase.
  bool IsVerbal(std::string_view token) const;

  // Fails with InvalidArgument when the token is not normalizable.
  absl::StatusOr<std::string> BaseForm(std::string_view token) const;

  const WordList& verbs() const { return verbs_; }

 private:
  WordList verbs_;
  WordMap exceptions_;
};

}  // namespace affordex

#endif  // AFFORDEX_MORPHOLOGY_H_
