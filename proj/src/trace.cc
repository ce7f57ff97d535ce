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

#include "affordex/trace.h"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "affordex/evaluation.h"
#include "affordex/io.h"
#include "affordex/status_macros.h"
#include "affordex/text.h"
#include "fmt/format.h"
#include "json.hpp"

namespace affordex {
namespace {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

const std::set<std::string>& KnownKeys() {
  static const auto* keys = new std::set<std::string>{
      "game_id",     "step_index",          "location_id",
      "description", "inventory",           "object_list",
      "admissible_commands", "walkthrough_command", "source"};
  return *keys;
}

absl::Status LineError(std::string_view name, int line, std::string_view what) {
  return absl::DataLossError(fmt::format("{}:{}: {}", name, line, what));
}

absl::StatusOr<std::optional<std::vector<std::string>>> StringListField(
    const Json& record, const char* key, std::string_view name, int line) {
  auto it = record.find(key);
  if (it == record.end() || it->is_null()) {
    return std::optional<std::vector<std::string>>();
  }
  if (!it->is_array()) {
    return LineError(name, line, fmt::format("'{}' must be a list", key));
  }
  std::vector<std::string> values;
  for (const auto& v : *it) {
    if (!v.is_string()) {
      return LineError(name, line,
                       fmt::format("'{}' must contain strings", key));
    }
    values.push_back(v.get<std::string>());
  }
  return std::optional<std::vector<std::string>>(std::move(values));
}

absl::StatusOr<std::string> StringField(const Json& record, const char* key,
                                        std::string_view name, int line) {
  auto it = record.find(key);
  if (it == record.end() || !it->is_string()) {
    return LineError(name, line, fmt::format("missing string '{}'", key));
  }
  return it->get<std::string>();
}

}  // namespace

std::string_view TraceSourceName(TraceSource source) {
  switch (source) {
    case TraceSource::kTextWorld: return "textworld";
    case TraceSource::kJericho: return "jericho";
    case TraceSource::kOther: return "other";
  }
  return "other";
}

std::optional<TraceSource> ParseTraceSource(std::string_view name) {
  if (name == "textworld") return TraceSource::kTextWorld;
  if (name == "jericho") return TraceSource::kJericho;
  if (name == "other") return TraceSource::kOther;
  return std::nullopt;
}

std::string ScenarioStep::ExtractionText() const {
  if (inventory.empty()) return description;
  return description + "\n" + inventory;
}

absl::Status ValidateTrace(const ScenarioTrace& trace) {
  if (trace.game_id.empty()) {
    return absl::FailedPreconditionError("trace has an empty game_id");
  }
  if (trace.steps.empty()) {
    return absl::FailedPreconditionError(
        fmt::format("trace for '{}' has no steps", trace.game_id));
  }
  for (size_t i = 0; i < trace.steps.size(); ++i) {
    const ScenarioStep& step = trace.steps[i];
    if (step.game_id != trace.game_id) {
      return absl::FailedPreconditionError(fmt::format(
          "step {} belongs to game '{}', expected '{}'", step.step_index,
          step.game_id, trace.game_id));
    }
    if (step.step_index != static_cast<int>(i)) {
      return absl::FailedPreconditionError(fmt::format(
          "step indices of '{}' are not contiguous from 0 (found {} at "
          "position {})",
          trace.game_id, step.step_index, i));
    }
    if (step.object_list) {
      for (const auto& phrase : *step.object_list) {
        if (phrase.empty()) {
          return absl::FailedPreconditionError(fmt::format(
              "step {} has an empty object phrase", step.step_index));
        }
      }
    }
    if (step.admissible_commands) {
      std::unordered_set<std::string> seen;
      for (const auto& command : *step.admissible_commands) {
        if (!seen.insert(NormalizeCommand(command)).second) {
          return absl::FailedPreconditionError(fmt::format(
              "step {} lists admissible command '{}' twice", step.step_index,
              command));
        }
      }
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<ScenarioTrace> ParseTrace(std::string_view content,
                                         std::string_view name) {
  ScenarioTrace trace;
  std::optional<TraceSource> source;
  int line_number = 0;
  size_t pos = 0;
  while (pos < content.size()) {
    size_t end = content.find('\n', pos);
    if (end == std::string_view::npos) end = content.size();
    std::string_view line = content.substr(pos, end - pos);
    pos = end + 1;
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;

    Json record;
    try {
      record = Json::parse(line);
    } catch (const Json::exception& e) {
      return LineError(name, line_number, e.what());
    }
    if (!record.is_object()) {
      return LineError(name, line_number, "record is not an object");
    }
    for (const auto& [key, value] : record.items()) {
      if (!KnownKeys().count(key)) {
        return LineError(name, line_number,
                         fmt::format("unknown field '{}'", key));
      }
    }

    ScenarioStep step;
    auto game_id = StringField(record, "game_id", name, line_number);
    if (!game_id.ok()) return game_id.status();
    step.game_id = *game_id;
    auto index = record.find("step_index");
    if (index == record.end() || !index->is_number_integer() ||
        index->get<long long>() < 0 || index->get<long long>() > (1 << 30)) {
      return LineError(name, line_number,
                       "'step_index' must be a non-negative integer");
    }
    step.step_index = static_cast<int>(index->get<long long>());
    auto location = StringField(record, "location_id", name, line_number);
    if (!location.ok()) return location.status();
    step.location_id = *location;
    auto description = StringField(record, "description", name, line_number);
    if (!description.ok()) return description.status();
    step.description = *description;
    auto inventory = StringField(record, "inventory", name, line_number);
    if (!inventory.ok()) return inventory.status();
    step.inventory = *inventory;
    auto objects = StringListField(record, "object_list", name, line_number);
    if (!objects.ok()) return objects.status();
    step.object_list = *objects;
    auto commands =
        StringListField(record, "admissible_commands", name, line_number);
    if (!commands.ok()) return commands.status();
    step.admissible_commands = *commands;
    auto walk = record.find("walkthrough_command");
    if (walk != record.end() && !walk->is_null()) {
      if (!walk->is_string()) {
        return LineError(name, line_number,
                         "'walkthrough_command' must be a string or null");
      }
      step.walkthrough_command = walk->get<std::string>();
    }
    auto src = record.find("source");
    if (src != record.end()) {
      std::optional<TraceSource> parsed;
      if (src->is_string()) parsed = ParseTraceSource(src->get<std::string>());
      if (!parsed) return LineError(name, line_number, "unknown 'source'");
      if (source && *source != *parsed) {
        return LineError(name, line_number, "'source' differs between steps");
      }
      source = parsed;
    }
    if (trace.game_id.empty()) trace.game_id = step.game_id;
    trace.steps.push_back(std::move(step));
  }
  if (trace.steps.empty()) {
    return absl::FailedPreconditionError(
        fmt::format("{}: trace file contains no steps", name));
  }
  trace.source = source.value_or(TraceSource::kOther);

  std::stable_sort(trace.steps.begin(), trace.steps.end(),
                   [](const ScenarioStep& a, const ScenarioStep& b) {
                     return a.step_index < b.step_index;
                   });
  for (size_t i = 1; i < trace.steps.size(); ++i) {
    if (trace.steps[i].step_index == trace.steps[i - 1].step_index) {
      return absl::FailedPreconditionError(
          fmt::format("{}: duplicate step_index {}", name,
                      trace.steps[i].step_index));
    }
  }
  absl::Status valid = ValidateTrace(trace);
  if (!valid.ok()) {
    return absl::FailedPreconditionError(
        fmt::format("{}: {}", name, StatusText(valid)));
  }
  return trace;
}

absl::StatusOr<ScenarioTrace> LoadTrace(const std::string& path) {
  auto content = ReadFile(path);
  if (!content.ok()) return content.status();
  return ParseTrace(*content, path);
}

std::string SerializeStep(const ScenarioStep& step, TraceSource source) {
  OrderedJson record;
  record["game_id"] = step.game_id;
  record["step_index"] = step.step_index;
  record["location_id"] = step.location_id;
  record["description"] = step.description;
  record["inventory"] = step.inventory;
  record["object_list"] = step.object_list ? OrderedJson(*step.object_list)
                                           : OrderedJson(nullptr);
  record["admissible_commands"] =
      step.admissible_commands ? OrderedJson(*step.admissible_commands)
                               : OrderedJson(nullptr);
  record["walkthrough_command"] = step.walkthrough_command
                                      ? OrderedJson(*step.walkthrough_command)
                                      : OrderedJson(nullptr);
  if (source != TraceSource::kOther) {
    record["source"] = std::string(TraceSourceName(source));
  }
  return record.dump();
}

std::string SerializeTrace(const ScenarioTrace& trace) {
  std::string out;
  for (const auto& step : trace.steps) {
    out += SerializeStep(step, trace.source);
    out.push_back('\n');
  }
  return out;
}

absl::Status WriteTrace(const ScenarioTrace& trace, const std::string& path) {
  return WriteFile(path, SerializeTrace(trace));
}

std::vector<ScenarioStep> EvaluationSteps(
    const std::vector<ScenarioStep>& steps) {
  std::vector<ScenarioStep> kept;
  std::unordered_set<std::string> visited;
  for (const auto& step : steps) {
    if (visited.insert(step.location_id).second) kept.push_back(step);
  }
  return kept;
}

std::vector<ScenarioStep> EvaluationSteps(const ScenarioTrace& trace) {
  return EvaluationSteps(trace.steps);
}

std::string LocationIdFromDescription(std::string_view description) {
  size_t start = description.find_first_not_of(" \t\r\n");
  if (start == std::string_view::npos) return "";
  size_t end = description.find('\n', start);
  std::string_view first = description.substr(
      start, end == std::string_view::npos ? std::string_view::npos
                                           : end - start);
  return CanonicalSpacing(first);
}

}  // namespace affordex
