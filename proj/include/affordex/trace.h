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

// Scenario traces: one recorded walkthrough of a game, one record per visited
// state, stored as line-delimited JSON objects.

#ifndef AFFORDEX_TRACE_H_
#define AFFORDEX_TRACE_H_

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace affordex {

enum class TraceSource { kTextWorld, kJericho, kOther };

std::string_view TraceSourceName(TraceSource source);
std::optional<TraceSource> ParseTraceSource(std::string_view name);

// Identifies one step of one game.
struct StepRef {
  std::string game_id;
  int step_index = 0;

  auto operator<=>(const StepRef&) const = default;
};

struct ScenarioStep {
  std::string game_id;
  int step_index = 0;
  std::string location_id;
  std::string description;
  std::string inventory;
  std::optional<std::vector<std::string>> object_list;
  std::optional<std::vector<std::string>> admissible_commands;
  std::optional<std::string> walkthrough_command;

  StepRef ref() const { return {game_id, step_index}; }

  // Description and inventory joined by a newline; the input of object
  // extraction.
  std::string ExtractionText() const;

  // Steps without admissible commands are not scored automatically.
  bool HasAdmissibleCommands() const {
    return admissible_commands.has_value() && !admissible_commands->empty();
  }

  bool operator==(const ScenarioStep&) const = default;
};

struct ScenarioTrace {
  std::string game_id;
  TraceSource source = TraceSource::kOther;
  std::vector<ScenarioStep> steps;

  bool operator==(const ScenarioTrace&) const = default;
};

// Checks the trace invariants: non-empty game id shared by every step,
// step indices contiguous from 0 in order, non-empty object phrases, and
// admissible commands unique after normalization.
absl::Status ValidateTrace(const ScenarioTrace& trace);

// Parses trace records. `name` is used in error messages. Malformed lines
// produce DataLoss errors naming the line; invariant violations produce
// FailedPrecondition errors.
absl::StatusOr<ScenarioTrace> ParseTrace(std::string_view content,
                                         std::string_view name);

absl::StatusOr<ScenarioTrace> LoadTrace(const std::string& path);

// Canonical serialization; ParseTrace(SerializeTrace(t)) == t and the bytes
// of a canonical file survive a load/write cycle unchanged.
std::string SerializeTrace(const ScenarioTrace& trace);
std::string SerializeStep(const ScenarioStep& step, TraceSource source);

absl::Status WriteTrace(const ScenarioTrace& trace, const std::string& path);

// Walkthrough order, keeping only the first visit of every location.
std::vector<ScenarioStep> EvaluationSteps(const ScenarioTrace& trace);
std::vector<ScenarioStep> EvaluationSteps(const std::vector<ScenarioStep>& steps);

// Location id for engines that do not export one: the first line of the
// room description, lowercased and trimmed.
std::string LocationIdFromDescription(std::string_view description);

}  // namespace affordex

#endif  // AFFORDEX_TRACE_H_
