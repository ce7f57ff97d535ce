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

#include "affordex/objects.h"

#include <algorithm>
#include <map>

#include "affordex/text.h"
#include "fmt/format.h"

namespace affordex {
namespace {

bool IsDeterminerOrObjectPronoun(std::string_view word) {
  static constexpr std::string_view kWords[] = {
      "a",    "an",    "the",  "this", "that", "these", "those", "my",
      "your", "his",   "her",  "its",  "our",  "their", "some",  "every",
      "each", "you",   "me",   "him",  "them", "us",    "it"};
  return std::find(std::begin(kWords), std::end(kWords), word) !=
         std::end(kWords);
}

bool IsSubjectPronoun(std::string_view word) {
  static constexpr std::string_view kWords[] = {"i",  "you", "we", "they",
                                                "he", "she", "it"};
  return std::find(std::begin(kWords), std::end(kWords), word) !=
         std::end(kWords);
}

ExtractionResult Canonicalize(std::vector<ObjectMention> mentions,
                              std::vector<std::string> diagnostics) {
  std::map<std::string, ObjectMention> by_head;
  for (auto& m : mentions) by_head.emplace(m.head, std::move(m));
  ExtractionResult result;
  for (auto& [head, m] : by_head) result.mentions.push_back(std::move(m));
  result.diagnostics = std::move(diagnostics);
  return result;
}

}  // namespace

ExtractionResult ExtractObjectsListed(const std::vector<std::string>& phrases) {
  std::vector<ObjectMention> mentions;
  std::vector<std::string> diagnostics;
  for (const auto& phrase : phrases) {
    std::vector<WordToken> tokens = TokenizeWords(phrase);
    if (tokens.empty()) {
      diagnostics.push_back(
          fmt::format("object phrase '{}' has no word; skipped", phrase));
      continue;
    }
    mentions.push_back(
        {tokens.back().text, phrase, MentionSource::kProvidedList});
  }
  return Canonicalize(std::move(mentions), std::move(diagnostics));
}

LexiconNounTagger::LexiconNounTagger(WordList nouns, WordList verbs,
                                     WordList stopwords)
    : nouns_(std::move(nouns)),
      verbs_(std::move(verbs)),
      stopwords_(std::move(stopwords)) {}

std::vector<ObjectMention> LexiconNounTagger::Tag(std::string_view text) const {
  std::vector<WordToken> tokens = TokenizeWords(text);
  std::vector<bool> noun(tokens.size(), false);
  for (size_t i = 0; i < tokens.size(); ++i) {
    const std::string& word = tokens[i].text;
    if (word.size() < 2 || stopwords_.Contains(word) ||
        !nouns_.Contains(word)) {
      continue;
    }
    bool before_object = i + 1 < tokens.size() &&
                         !tokens[i + 1].boundary_before &&
                         IsDeterminerOrObjectPronoun(tokens[i + 1].text);
    bool after_subject = i > 0 && !tokens[i].boundary_before &&
                         IsSubjectPronoun(tokens[i - 1].text);
    bool verb_reading = verbs_.Contains(word) && (before_object || after_subject);
    noun[i] = !verb_reading;
  }

  std::vector<ObjectMention> mentions;
  size_t i = 0;
  while (i < tokens.size()) {
    if (!noun[i]) {
      ++i;
      continue;
    }
    size_t end = i + 1;
    while (end < tokens.size() && noun[end] && !tokens[end].boundary_before) {
      ++end;
    }
    std::vector<std::string> surface;
    for (size_t k = i; k < end; ++k) surface.push_back(tokens[k].surface);
    mentions.push_back({tokens[end - 1].text, JoinWords(surface),
                        MentionSource::kTaggedText});
    i = end;
  }
  return mentions;
}

absl::StatusOr<ExtractionResult> ExtractObjectsTagged(
    std::string_view text, const NounTagger& tagger) {
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) {
    return absl::InvalidArgumentError("object extraction needs non-empty text");
  }
  return Canonicalize(tagger.Tag(text), {});
}

}  // namespace affordex
