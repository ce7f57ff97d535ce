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

#include "affordex/resources.h"

#include <cstdlib>

#include "affordex/status_macros.h"
#include "fmt/format.h"

namespace affordex {

std::string DefaultDataDir() {
  const char* value = std::getenv(kDataDirEnv);
  if (value != nullptr && *value != '\0') return value;
  return AFFORDEX_DEFAULT_DATA_DIR;
}

absl::StatusOr<std::unique_ptr<LanguageResources>> LanguageResources::Load(
    const std::string& data_dir) {
  auto r = std::make_unique<LanguageResources>();
  auto file = [&](std::string_view name) {
    return fmt::format("{}/{}", data_dir, name);
  };
  AFFORDEX_ASSIGN_OR_RETURN(r->nouns, WordList::Load(file("nouns.txt")));
  AFFORDEX_ASSIGN_OR_RETURN(r->verb_forms, WordList::Load(file("verbs.txt")));
  AFFORDEX_ASSIGN_OR_RETURN(r->stopwords,
                            WordList::Load(file("stopwords.txt")));
  AFFORDEX_ASSIGN_OR_RETURN(WordMap plurals,
                            WordMap::Load(file("plural_exceptions.tsv")));
  AFFORDEX_ASSIGN_OR_RETURN(WordMap inflections,
                            WordMap::Load(file("verb_exceptions.tsv")));
  AFFORDEX_ASSIGN_OR_RETURN(r->prepositions,
                            PrepositionTable::Load(file("prepositions.tsv")));
  r->singularizer = Singularizer(std::move(plurals));
  r->verbs = VerbNormalizer(r->verb_forms, std::move(inflections));
  return r;
}

absl::StatusOr<std::unique_ptr<NounTagger>> MakeTagger(
    std::string_view backend, const LanguageResources& resources) {
  if (backend == "lexicon") {
    return std::unique_ptr<NounTagger>(std::make_unique<LexiconNounTagger>(
        resources.nouns, resources.verb_forms, resources.stopwords));
  }
  return absl::InvalidArgumentError(fmt::format(
      "tagger backend '{}' is not available; use the bundled 'lexicon' "
      "tagger or provided object lists (--objects list)",
      backend));
}

}  // namespace affordex
