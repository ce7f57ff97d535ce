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

// Candidate objects of a step: either the head nouns of an engine-provided
// object list, or the nouns a tagger finds in the step text.

#ifndef AFFORDEX_OBJECTS_H_
#define AFFORDEX_OBJECTS_H_

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "affordex/morphology.h"

namespace affordex {

enum class MentionSource { kProvidedList, kTaggedText };

struct ObjectMention {
  std::string head;     // lowercase single token
  std::string surface;  // phrase as found, kept for display
  MentionSource source = MentionSource::kProvidedList;

  bool operator==(const ObjectMention&) const = default;
};

// Mentions sorted by head, one per head, plus notes about skipped input.
struct ExtractionResult {
  std::vector<ObjectMention> mentions;
  std::vector<std::string> diagnostics;
};

// Reduces each phrase to its final word ("the old steamer trunk" -> trunk)
// and merges phrases with the same head. Phrases without letters are
// skipped and reported.
ExtractionResult ExtractObjectsListed(const std::vector<std::string>& phrases);

// Finds noun heads in running text.
class NounTagger {
 public:
  virtual ~NounTagger() = default;

  // Mentions in text order, possibly repeating heads.
  virtual std::vector<ObjectMention> Tag(std::string_view text) const = 0;
};

// Tags every lexicon noun; a run of adjacent nouns ("brass lantern") is one
// noun phrase whose last noun is the head. A word that is also a verb form
// is read as a verb when a determiner or object pronoun directly follows it
// ("costumes litter the floor") or a subject pronoun directly precedes it
// ("you go on"). Immutable after construction and safe for concurrent use.
class LexiconNounTagger : public NounTagger {
 public:
  LexiconNounTagger(WordList nouns, WordList verbs, WordList stopwords);

  std::vector<ObjectMention> Tag(std::string_view text) const override;

 private:
  WordList nouns_;
  WordList verbs_;
  WordList stopwords_;
};

// Extracts distinct noun heads from `text`. Fails with InvalidArgument on
// empty text. No contextual filtering is applied: nouns in dialogue or on a
// painting are returned like any other.
absl::StatusOr<ExtractionResult> ExtractObjectsTagged(std::string_view text,
                                                      const NounTagger& tagger);

}  // namespace affordex

#endif  // AFFORDEX_OBJECTS_H_
