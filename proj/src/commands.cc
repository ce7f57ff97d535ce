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

#include "affordex/commands.h"

#include <algorithm>
#include <charconv>
#include <tuple>
#include <unordered_set>

#include "affordex/io.h"
#include "affordex/status_macros.h"
#include "affordex/text.h"
#include "fmt/format.h"
#include "json.hpp"

namespace affordex {
namespace {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

bool IsWord(const std::string& s) { return !s.empty() && IsLowerAlpha(s); }

// Sort rank of a candidate within its object: knowledge relations in their
// declaration order, then the take rule.
int RelationRank(Relation relation) {
  switch (relation) {
    case Relation::kUsedFor: return 0;
    case Relation::kReceivesAction: return 1;
    case Relation::kCapableOf: return 2;
  }
  return 0;
}
constexpr int kTakeRank = 3;

struct Candidate {
  int rank;
  std::string text;
  Affordance affordance;
};

}  // namespace

CommandTemplate Affordance::Template() const {
  if (second_object.has_value()) return CommandTemplate::kTwoObject;
  if (verb == "take") return CommandTemplate::kTake;
  return CommandTemplate::kSingleObject;
}

Affordance TakeAffordance(std::string object) {
  Affordance a;
  a.verb = "take";
  a.object = std::move(object);
  return a;
}

absl::Status ValidateAffordance(const Affordance& affordance) {
  if (!IsWord(affordance.verb)) {
    return absl::InvalidArgumentError(
        fmt::format("bad verb '{}'", affordance.verb));
  }
  if (!IsWord(affordance.object)) {
    return absl::InvalidArgumentError(
        fmt::format("bad object '{}'", affordance.object));
  }
  if (affordance.second_object.has_value() !=
      affordance.preposition.has_value()) {
    return absl::InvalidArgumentError(
        "preposition and second object must be given together");
  }
  if (affordance.second_object && (!IsWord(*affordance.second_object) ||
                                   !IsWord(*affordance.preposition))) {
    return absl::InvalidArgumentError("bad second object or preposition");
  }
  return absl::OkStatus();
}

std::string Render(const Affordance& affordance) {
  if (affordance.second_object) {
    return fmt::format("{} {} {} {}", affordance.verb,
                       *affordance.second_object, *affordance.preposition,
                       affordance.object);
  }
  return fmt::format("{} {}", affordance.verb, affordance.object);
}

absl::StatusOr<ParsedCommand> ParseCommand(std::string_view text) {
  std::vector<std::string> words = SplitWords(text);
  for (const auto& word : words) {
    if (!IsWord(word)) {
      return absl::InvalidArgumentError(
          fmt::format("'{}' is not a lowercase word in '{}'", word, text));
    }
  }
  ParsedCommand parsed;
  Affordance& a = parsed.affordance;
  if (words.size() == 2) {
    a.verb = words[0];
    a.object = words[1];
  } else if (words.size() == 4) {
    a.verb = words[0];
    a.second_object = words[1];
    a.preposition = words[2];
    a.object = words[3];
  } else {
    return absl::InvalidArgumentError(
        fmt::format("'{}' matches no command template", text));
  }
  parsed.command_template = a.Template();
  return parsed;
}

absl::StatusOr<std::string> ImperativeForm(std::string_view verb_phrase,
                                           const VerbNormalizer& verbs) {
  std::vector<WordToken> tokens = TokenizeWords(verb_phrase);
  if (tokens.empty()) {
    return absl::InvalidArgumentError(
        fmt::format("cannot normalize '{}': no word", verb_phrase));
  }
  return verbs.BaseForm(tokens.front().text);
}

// PrepositionTable -------------------------------------------------------------

absl::StatusOr<PrepositionTable> PrepositionTable::Parse(
    std::string_view content, std::string_view name) {
  PrepositionTable table;
  int line_number = 0;
  size_t pos = 0;
  while (pos < content.size()) {
    size_t end = content.find('\n', pos);
    if (end == std::string_view::npos) end = content.size();
    std::string_view line = content.substr(pos, end - pos);
    pos = end + 1;
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    size_t t1 = line.find('\t');
    size_t t2 = t1 == std::string_view::npos ? t1 : line.find('\t', t1 + 1);
    int64_t count = 0;
    if (t2 != std::string_view::npos) {
      std::string_view digits = line.substr(t2 + 1);
      auto [p, ec] =
          std::from_chars(digits.data(), digits.data() + digits.size(), count);
      if (ec != std::errc() || p != digits.data() + digits.size()) {
        t2 = std::string_view::npos;
      }
    }
    std::string verb, prep;
    if (t2 != std::string_view::npos) {
      verb = std::string(line.substr(0, t1));
      prep = std::string(line.substr(t1 + 1, t2 - t1 - 1));
    }
    if (!IsWord(verb) || !IsWord(prep) || count < 0) {
      return absl::DataLossError(fmt::format(
          "{}:{}: expected verb<TAB>preposition<TAB>count", name, line_number));
    }
    table.Add(verb, prep, count);
  }
  return table;
}

absl::StatusOr<PrepositionTable> PrepositionTable::Load(
    const std::string& path) {
  AFFORDEX_ASSIGN_OR_RETURN(std::string content, ReadFile(path));
  return Parse(content, path);
}

void PrepositionTable::Add(const std::string& verb,
                           const std::string& preposition, int64_t count) {
  auto& per_verb = counts_[verb];
  per_verb[preposition] += count;
  Best best;
  for (const auto& [prep, n] : per_verb) {
    // Map order is alphabetical, so a strict comparison keeps the first of
    // several equally frequent prepositions.
    if (best.preposition.empty() || n > best.count) best = {prep, n};
  }
  best_[verb] = best;
}

std::string PrepositionTable::Choose(std::string_view verb) const {
  auto it = best_.find(verb);
  if (it == best_.end()) return std::string(kDefault);
  return it->second.preposition;
}

// CommandGenerator -------------------------------------------------------------

StepCommands CommandGenerator::Generate(
    const StepRef& step, const std::vector<ObjectMention>& objects,
    const PatternsByObject& patterns, const GenerationOptions& options) const {
  StepCommands out;
  std::vector<std::string> heads;
  for (const auto& mention : objects) heads.push_back(mention.head);
  std::sort(heads.begin(), heads.end());
  heads.erase(std::unique(heads.begin(), heads.end()), heads.end());
  std::vector<std::string> singulars;
  for (const auto& head : heads) {
    singulars.push_back(singularizer_.Singular(head));
  }

  // The present object an extra noun of a pattern refers to, if any.
  auto find_present = [&](const std::string& noun,
                          const std::string& self) -> const std::string* {
    std::string singular = singularizer_.Singular(noun);
    for (size_t i = 0; i < heads.size(); ++i) {
      if (heads[i] == self) continue;
      if (heads[i] == noun || singulars[i] == singular) return &heads[i];
    }
    return nullptr;
  };

  std::unordered_set<std::string> emitted;
  for (const auto& head : heads) {
    std::vector<Candidate> candidates;
    auto it = patterns.find(head);
    if (it != patterns.end()) {
      for (const auto& pattern : it->second) {
        auto verb = ImperativeForm(pattern.verb_phrase, verbs_);
        if (!verb.ok()) {
          out.diagnostics.push_back(fmt::format(
              "{}#{}: skipped ({}, {}, \"{}\"): {}", step.game_id,
              step.step_index, pattern.origin.subject,
              RelationName(pattern.relation), pattern.origin.tail_text,
              StatusText(verb.status())));
          continue;
        }
        int rank = RelationRank(pattern.relation);
        if (pattern.relation == Relation::kReceivesAction) {
          Affordance a;
          a.verb = *verb;
          a.object = head;
          a.origin = pattern.origin;
          candidates.push_back({rank, Render(a), std::move(a)});
          continue;
        }
        if (pattern.extra_nouns.size() > 1) {
          out.diagnostics.push_back(fmt::format(
              "{}#{}: ({}, {}, \"{}\") names {} further objects; one command "
              "per present object",
              step.game_id, step.step_index, pattern.origin.subject,
              RelationName(pattern.relation), pattern.origin.tail_text,
              pattern.extra_nouns.size()));
        }
        for (const auto& noun : pattern.extra_nouns) {
          const std::string* present = find_present(noun, head);
          if (present == nullptr) continue;
          Affordance a;
          a.verb = *verb;
          a.object = head;
          a.second_object = *present;
          a.preposition = prepositions_.Choose(*verb);
          a.origin = pattern.origin;
          candidates.push_back({rank, Render(a), std::move(a)});
        }
      }
    }
    if (options.take_augment) {
      Affordance a = TakeAffordance(head);
      candidates.push_back({kTakeRank, Render(a), std::move(a)});
    }
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Candidate& x, const Candidate& y) {
                       return std::tie(x.rank, x.affordance.verb, x.text) <
                              std::tie(y.rank, y.affordance.verb, y.text);
                     });
    for (auto& c : candidates) {
      if (!emitted.insert(c.text).second) continue;
      out.commands.push_back({std::move(c.text), std::move(c.affordance), step});
    }
  }
  return out;
}

// Command lists ------------------------------------------------------------------

std::string SerializeCommandLists(const std::vector<StepCommandList>& lists) {
  std::string out;
  for (const auto& list : lists) {
    OrderedJson record;
    record["game_id"] = list.step_ref.game_id;
    record["step_index"] = list.step_ref.step_index;
    record["commands"] = list.commands;
    out += record.dump();
    out.push_back('\n');
  }
  return out;
}

absl::StatusOr<std::vector<StepCommandList>> ParseCommandLists(
    std::string_view content, std::string_view name) {
  std::vector<StepCommandList> lists;
  int line_number = 0;
  size_t pos = 0;
  while (pos < content.size()) {
    size_t end = content.find('\n', pos);
    if (end == std::string_view::npos) end = content.size();
    std::string_view line = content.substr(pos, end - pos);
    pos = end + 1;
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    try {
      Json record = Json::parse(line);
      StepCommandList list;
      list.step_ref.game_id = record.at("game_id").get<std::string>();
      list.step_ref.step_index = record.at("step_index").get<int>();
      list.commands =
          record.at("commands").get<std::vector<std::string>>();
      lists.push_back(std::move(list));
    } catch (const Json::exception& e) {
      return absl::DataLossError(
          fmt::format("{}:{}: {}", name, line_number, e.what()));
    }
  }
  return lists;
}

absl::StatusOr<std::vector<StepCommandList>> LoadCommandLists(
    const std::string& path) {
  AFFORDEX_ASSIGN_OR_RETURN(std::string content, ReadFile(path));
  return ParseCommandLists(content, path);
}

}  // namespace affordex
