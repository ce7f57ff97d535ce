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

// Translation of affordance patterns into parser-style commands. Three
// templates exist: "verb object" for actions the object receives, "verb
// second preposition object" for uses that involve another object present in
// the same step, and "take object" for the optional take augmentation.

#ifndef AFFORDEX_COMMANDS_H_
#define AFFORDEX_COMMANDS_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "affordex/knowledge.h"
#include "affordex/morphology.h"
#include "affordex/objects.h"
#include "affordex/trace.h"

namespace affordex {

enum class CommandTemplate { kSingleObject, kTwoObject, kTake };

struct Affordance {
  std::string verb;    // imperative form
  std::string object;  // the queried object
  std::optional<std::string> second_object;
  std::optional<std::string> preposition;  // set iff second_object is set
  // The knowledge edge behind the affordance; empty for the take rule.
  std::optional<KnowledgeEdge> origin;

  // Two objects make a two-object command; a plain "take" is the take
  // template whatever its origin, since both render the same text.
  CommandTemplate Template() const;

  // Equality of the rendered fields, ignoring the origin.
  bool SameCommand(const Affordance& other) const {
    return verb == other.verb && object == other.object &&
           second_object == other.second_object &&
           preposition == other.preposition;
  }
  bool operator==(const Affordance&) const = default;
};

// The take-rule affordance for `object`.
Affordance TakeAffordance(std::string object);

// Fails with InvalidArgument when the verb or an object is empty or not a
// single lowercase word, or when preposition and second object disagree.
absl::Status ValidateAffordance(const Affordance& affordance);

std::string Render(const Affordance& affordance);

// Reads a rendered command back. The result has no origin.
struct ParsedCommand {
  CommandTemplate command_template = CommandTemplate::kSingleObject;
  Affordance affordance;
};

absl::StatusOr<ParsedCommand> ParseCommand(std::string_view text);

struct GeneratedCommand {
  std::string text;
  Affordance affordance;
  StepRef step_ref;

  bool operator==(const GeneratedCommand&) const = default;
};

// Imperative form of the leading verb of `verb_phrase`: "opened" -> "open".
absl::StatusOr<std::string> ImperativeForm(std::string_view verb_phrase,
                                           const VerbNormalizer& verbs);

// Verb to preposition counts. Choose() returns the most frequent preposition
// of a verb, breaking ties alphabetically, and "with" for unknown verbs.
class PrepositionTable {
 public:
  static constexpr std::string_view kDefault = "with";

  PrepositionTable() = default;

  // Lines "verb<TAB>preposition<TAB>count"; '#' lines are comments.
  static absl::StatusOr<PrepositionTable> Parse(std::string_view content,
                                                std::string_view name);
  static absl::StatusOr<PrepositionTable> Load(const std::string& path);

  void Add(const std::string& verb, const std::string& preposition,
           int64_t count);
  std::string Choose(std::string_view verb) const;
  size_t size() const { return best_.size(); }

 private:
  struct Best {
    std::string preposition;
    int64_t count = 0;
  };
  std::map<std::string, std::map<std::string, int64_t>> counts_;
  std::map<std::string, Best, std::less<>> best_;
};

struct GenerationOptions {
  bool take_augment = false;
};

struct StepCommands {
  std::vector<GeneratedCommand> commands;
  std::vector<std::string> diagnostics;
};

// Per-object patterns keyed by the object head they were retrieved for.
using PatternsByObject = std::map<std::string, std::vector<AffordancePattern>>;

// Applies the templates to one step. Output is free of duplicate texts and
// ordered by object head, then relation, then verb. A pattern with more than
// one extra noun yields one command per extra noun present in the step and
// is noted in the diagnostics, as are verbs that cannot be normalized.
// Immutable after construction and safe for concurrent use.
class CommandGenerator {
 public:
  // The tables must outlive the generator.
  CommandGenerator(const VerbNormalizer& verbs,
                   const Singularizer& singularizer,
                   const PrepositionTable& prepositions)
      : verbs_(verbs), singularizer_(singularizer), prepositions_(prepositions) {}

  StepCommands Generate(const StepRef& step,
                        const std::vector<ObjectMention>& objects,
                        const PatternsByObject& patterns,
                        const GenerationOptions& options) const;

 private:
  const VerbNormalizer& verbs_;
  const Singularizer& singularizer_;
  const PrepositionTable& prepositions_;
};

// Generated command lists, one record per step:
// {"game_id": ..., "step_index": ..., "commands": [...]}.
struct StepCommandList {
  StepRef step_ref;
  std::vector<std::string> commands;

  bool operator==(const StepCommandList&) const = default;
};

std::string SerializeCommandLists(const std::vector<StepCommandList>& lists);
absl::StatusOr<std::vector<StepCommandList>> ParseCommandLists(
    std::string_view content, std::string_view name);
absl::StatusOr<std::vector<StepCommandList>> LoadCommandLists(
    const std::string& path);

}  // namespace affordex

#endif  // AFFORDEX_COMMANDS_H_
