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

// The bundled language tables, loaded together from one data directory.

#ifndef AFFORDEX_RESOURCES_H_
#define AFFORDEX_RESOURCES_H_

#include <memory>
#include <string>
#include <string_view>

#include "absl/status/statusor.h"
#include "affordex/commands.h"
#include "affordex/knowledge.h"
#include "affordex/morphology.h"
#include "affordex/objects.h"

namespace affordex {

// Environment variable overriding the compiled-in data directory.
inline constexpr char kDataDirEnv[] = "AFFORDEX_DATA_DIR";

std::string DefaultDataDir();

// Files: nouns.txt, verbs.txt, stopwords.txt, plural_exceptions.tsv,
// verb_exceptions.tsv, prepositions.tsv.
struct LanguageResources {
  WordList nouns;
  WordList verb_forms;
  WordList stopwords;
  Singularizer singularizer;
  VerbNormalizer verbs;
  PrepositionTable prepositions;

  static absl::StatusOr<std::unique_ptr<LanguageResources>> Load(
      const std::string& data_dir);

  PatternParser MakePatternParser() const {
    return PatternParser(verbs, nouns, stopwords);
  }
  CommandGenerator MakeCommandGenerator() const {
    return CommandGenerator(verbs, singularizer, prepositions);
  }
};

// Tagger backends: "lexicon" is bundled. Any other name, including
// "external", is a configuration error.
absl::StatusOr<std::unique_ptr<NounTagger>> MakeTagger(
    std::string_view backend, const LanguageResources& resources);

}  // namespace affordex

#endif  // AFFORDEX_RESOURCES_H_
