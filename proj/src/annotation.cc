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

#include "affordex/annotation.h"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <functional>
#include <mutex>
#include <set>

#include "affordex/io.h"
#include "affordex/status_macros.h"
#include "fmt/format.h"
#include "json.hpp"

namespace affordex {
namespace {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

bool ValidAnnotator(std::string_view id) {
  if (id.empty()) return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
           c == '-' || c == '.';
  });
}

std::string LabelLine(const AnnotationRecord& r) {
  OrderedJson j;
  j["session_id"] = r.session_id;
  j["game_id"] = r.step_ref.game_id;
  j["step_index"] = r.step_ref.step_index;
  j["command"] = r.command_text;
  j["category"] = std::string(CategoryName(r.category));
  j["annotator_id"] = r.annotator_id;
  j["timestamp"] = r.timestamp;
  return j.dump();
}

// Calls `fn` for every record line. A final line without its newline is the
// remnant of an interrupted append: it is cut off when it does not parse and
// terminated when it does, so later appends start on a fresh line.
absl::Status ForEachRecord(const std::string& path,
                           const std::function<absl::Status(const Json&)>& fn) {
  auto content = ReadFile(path);
  if (absl::IsNotFound(content.status())) return absl::OkStatus();
  AFFORDEX_RETURN_IF_ERROR(content.status());
  const std::string& text = *content;
  size_t pos = 0;
  int line_number = 0;
  while (pos < text.size()) {
    size_t end = text.find('\n', pos);
    bool complete = end != std::string::npos;
    if (!complete) end = text.size();
    std::string_view line(text.data() + pos, end - pos);
    size_t line_start = pos;
    pos = end + 1;
    ++line_number;
    if (line.empty()) continue;
    Json record;
    try {
      record = Json::parse(line);
    } catch (const Json::exception& e) {
      if (!complete) {
        std::error_code ec;
        std::filesystem::resize_file(path, line_start, ec);
        if (ec) {
          return absl::InternalError(
              fmt::format("cannot truncate {}: {}", path, ec.message()));
        }
        break;
      }
      return absl::DataLossError(
          fmt::format("{}:{}: {}", path, line_number, e.what()));
    }
    absl::Status s = fn(record);
    if (!s.ok()) {
      return absl::DataLossError(
          fmt::format("{}:{}: {}", path, line_number, StatusText(s)));
    }
    if (!complete) {
      AFFORDEX_RETURN_IF_ERROR(AppendLineDurably(path, ""));
    }
  }
  return absl::OkStatus();
}

}  // namespace

std::string_view CategoryName(Category category) {
  switch (category) {
    case Category::kA: return "A";
    case Category::kB: return "B";
    case Category::kC: return "C";
  }
  return "A";
}

std::optional<Category> ParseCategory(std::string_view name) {
  if (name == "A") return Category::kA;
  if (name == "B") return Category::kB;
  if (name == "C") return Category::kC;
  return std::nullopt;
}

double LabelCounts::FunctionalPercent() const {
  if (total() == 0) return 0.0;
  return 100.0 * static_cast<double>(a + b) / static_cast<double>(total());
}

LabelCounts& LabelCounts::operator+=(const LabelCounts& other) {
  a += other.a;
  b += other.b;
  c += other.c;
  unlabeled += other.unlabeled;
  return *this;
}

absl::StatusOr<std::vector<SessionStep>> BuildSessionSteps(
    const std::vector<ScenarioTrace>& traces,
    const std::vector<StepCommandList>& commands) {
  std::map<StepRef, const ScenarioStep*> steps;
  for (const auto& trace : traces) {
    for (const auto& step : trace.steps) steps[step.ref()] = &step;
  }
  std::vector<SessionStep> out;
  for (const auto& list : commands) {
    auto it = steps.find(list.step_ref);
    if (it == steps.end()) {
      return absl::FailedPreconditionError(fmt::format(
          "commands for {}#{} do not belong to the given traces",
          list.step_ref.game_id, list.step_ref.step_index));
    }
    if (list.commands.empty()) continue;
    out.push_back({list.step_ref, it->second->ExtractionText(), list.commands});
  }
  return out;
}

AnnotationService::AnnotationService(std::string dir, Clock clock)
    : AnnotationService(std::move(dir), std::move(clock), Options()) {}

AnnotationService::AnnotationService(std::string dir, Clock clock,
                                     Options options)
    : dir_(std::move(dir)), clock_(std::move(clock)), options_(options) {}

std::string AnnotationService::SessionsPath() const {
  return dir_ + "/sessions.jsonl";
}
std::string AnnotationService::LabelsPath() const {
  return dir_ + "/labels.jsonl";
}

void AnnotationService::BuildQueue(Session& session) {
  for (const auto& step : session.steps) {
    for (const auto& command : step.commands) {
      auto key = std::make_pair(step.step_ref, command);
      if (session.index.count(key)) continue;
      session.index[key] = session.queue.size();
      session.queue.push_back({step.step_ref, command});
    }
  }
}

void AnnotationService::ApplyLabel(Session& session, size_t item,
                                   AnnotationRecord record) {
  LabelCounts& counts = session.running[record.annotator_id];
  auto bump = [&](Category c, int64_t delta) {
    switch (c) {
      case Category::kA: counts.a += delta; break;
      case Category::kB: counts.b += delta; break;
      case Category::kC: counts.c += delta; break;
    }
  };
  auto key = std::make_pair(item, record.annotator_id);
  auto it = session.labels.find(key);
  if (it != session.labels.end()) {
    bump(it->second.category, -1);
  }
  bump(record.category, +1);
  counts.unlabeled = static_cast<int64_t>(session.queue.size()) -
                     counts.total();
  session.labels[key] = std::move(record);
}

absl::Status AnnotationService::Open() {
  std::unique_lock lock(mu_);
  if (dir_.empty()) return absl::OkStatus();
  AFFORDEX_RETURN_IF_ERROR(EnsureDirectory(dir_));
  sessions_.clear();
  order_.clear();
  AFFORDEX_RETURN_IF_ERROR(ForEachRecord(
      SessionsPath(), [&](const Json& j) -> absl::Status {
        try {
          Session s;
          s.id = j.at("session_id").get<std::string>();
          s.annotator_id = j.at("annotator_id").get<std::string>();
          for (const auto& step : j.at("steps")) {
            SessionStep st;
            st.step_ref.game_id = step.at("game_id").get<std::string>();
            st.step_ref.step_index = step.at("step_index").get<int>();
            st.context = step.at("context").get<std::string>();
            st.commands = step.at("commands").get<std::vector<std::string>>();
            s.steps.push_back(std::move(st));
          }
          BuildQueue(s);
          order_.push_back(s.id);
          sessions_[s.id] = std::move(s);
        } catch (const Json::exception& e) {
          return absl::DataLossError(e.what());
        }
        return absl::OkStatus();
      }));
  return ForEachRecord(LabelsPath(), [&](const Json& j) -> absl::Status {
    try {
      AnnotationRecord r;
      r.session_id = j.at("session_id").get<std::string>();
      r.step_ref.game_id = j.at("game_id").get<std::string>();
      r.step_ref.step_index = j.at("step_index").get<int>();
      r.command_text = j.at("command").get<std::string>();
      auto category = ParseCategory(j.at("category").get<std::string>());
      if (!category) return absl::DataLossError("bad category");
      r.category = *category;
      r.annotator_id = j.at("annotator_id").get<std::string>();
      r.timestamp = j.value("timestamp", "");
      auto s = sessions_.find(r.session_id);
      if (s == sessions_.end()) return absl::DataLossError("unknown session");
      auto item = s->second.index.find({r.step_ref, r.command_text});
      if (item == s->second.index.end()) {
        return absl::DataLossError("label for an item outside its session");
      }
      ApplyLabel(s->second, item->second, std::move(r));
    } catch (const Json::exception& e) {
      return absl::DataLossError(e.what());
    }
    return absl::OkStatus();
  });
}

absl::StatusOr<std::string> AnnotationService::CreateSession(
    std::vector<SessionStep> steps, const std::string& annotator_id) {
  if (!ValidAnnotator(annotator_id)) {
    return absl::InvalidArgumentError(
        fmt::format("invalid annotator id '{}'", annotator_id));
  }
  Session session;
  session.annotator_id = annotator_id;
  session.steps = std::move(steps);
  BuildQueue(session);
  if (session.queue.empty()) {
    return absl::FailedPreconditionError("session has no commands to label");
  }
  std::unique_lock lock(mu_);
  session.id = fmt::format("s{:04d}", order_.size() + 1);
  if (!dir_.empty()) {
    OrderedJson j;
    j["session_id"] = session.id;
    j["annotator_id"] = session.annotator_id;
    j["created_at"] = clock_();
    OrderedJson steps_json = OrderedJson::array();
    for (const auto& st : session.steps) {
      OrderedJson s;
      s["game_id"] = st.step_ref.game_id;
      s["step_index"] = st.step_ref.step_index;
      s["context"] = st.context;
      s["commands"] = st.commands;
      steps_json.push_back(std::move(s));
    }
    j["steps"] = std::move(steps_json);
    AFFORDEX_RETURN_IF_ERROR(AppendLineDurably(SessionsPath(), j.dump()));
  }
  order_.push_back(session.id);
  std::string id = session.id;
  sessions_[id] = std::move(session);
  return id;
}

absl::StatusOr<std::string> AnnotationService::CreateSession(
    const std::vector<ScenarioTrace>& traces,
    const std::vector<StepCommandList>& commands,
    const std::string& annotator_id) {
  AFFORDEX_ASSIGN_OR_RETURN(std::vector<SessionStep> steps,
                            BuildSessionSteps(traces, commands));
  return CreateSession(std::move(steps), annotator_id);
}

const AnnotationService::Session* AnnotationService::FindSession(
    const std::string& id) const {
  auto it = sessions_.find(id);
  return it == sessions_.end() ? nullptr : &it->second;
}

absl::StatusOr<NextItem> AnnotationService::Next(
    const std::string& session_id, const std::string& annotator_id) const {
  std::shared_lock lock(mu_);
  const Session* s = FindSession(session_id);
  if (s == nullptr) {
    return absl::NotFoundError(fmt::format("no session '{}'", session_id));
  }
  NextItem next;
  next.total = static_cast<int64_t>(s->queue.size());
  for (size_t i = 0; i < s->queue.size(); ++i) {
    if (s->labels.count({i, annotator_id})) continue;
    next.item = s->queue[i];
    next.position = static_cast<int64_t>(i) + 1;
    for (const auto& step : s->steps) {
      if (step.step_ref == next.item.step_ref) {
        next.context = step.context;
        next.step_commands = step.commands;
        break;
      }
    }
    return next;
  }
  next.done = true;
  return next;
}

absl::StatusOr<AnnotationRecord> AnnotationService::SubmitLabel(
    const std::string& session_id, const std::string& annotator_id,
    const StepRef& step_ref, const std::string& command_text,
    std::string_view category) {
  auto parsed = ParseCategory(category);
  if (!parsed) {
    return absl::InvalidArgumentError(fmt::format(
        "category '{}' is not one of A, B, C", category));
  }
  if (!ValidAnnotator(annotator_id)) {
    return absl::InvalidArgumentError(
        fmt::format("invalid annotator id '{}'", annotator_id));
  }
  std::unique_lock lock(mu_);
  auto it = sessions_.find(session_id);
  if (it == sessions_.end()) {
    return absl::NotFoundError(fmt::format("no session '{}'", session_id));
  }
  Session& s = it->second;
  auto item = s.index.find({step_ref, command_text});
  if (item == s.index.end()) {
    return absl::NotFoundError(fmt::format(
        "'{}' at {}#{} is not an item of session {}", command_text,
        step_ref.game_id, step_ref.step_index, session_id));
  }
  AnnotationRecord record{session_id, step_ref, command_text, *parsed,
                          annotator_id, clock_()};
  if (!dir_.empty()) {
    AFFORDEX_RETURN_IF_ERROR(AppendLineDurably(LabelsPath(), LabelLine(record)));
  }
  ApplyLabel(s, item->second, record);
  if (!dir_.empty() && options_.compact_every > 0 &&
      ++appends_since_compaction_ >= options_.compact_every) {
    AFFORDEX_RETURN_IF_ERROR(CompactLocked());
  }
  return record;
}

absl::StatusOr<LabelSummary> AnnotationService::AggregateLabels(
    const std::string& session_id,
    std::optional<std::string> annotator_id) const {
  std::shared_lock lock(mu_);
  const Session* s = FindSession(session_id);
  if (s == nullptr) {
    return absl::NotFoundError(fmt::format("no session '{}'", session_id));
  }
  LabelSummary summary;
  summary.annotator_id = annotator_id.value_or(s->annotator_id);
  for (size_t i = 0; i < s->queue.size(); ++i) {
    const std::string& game = s->queue[i].step_ref.game_id;
    auto row = std::find_if(summary.per_game.begin(), summary.per_game.end(),
                            [&](const auto& r) { return r.first == game; });
    if (row == summary.per_game.end()) {
      summary.per_game.emplace_back(game, LabelCounts{});
      row = summary.per_game.end() - 1;
    }
    LabelCounts& counts = row->second;
    auto label = s->labels.find({i, summary.annotator_id});
    if (label == s->labels.end()) {
      ++counts.unlabeled;
      continue;
    }
    switch (label->second.category) {
      case Category::kA: ++counts.a; break;
      case Category::kB: ++counts.b; break;
      case Category::kC: ++counts.c; break;
    }
  }
  for (const auto& [game, counts] : summary.per_game) summary.overall += counts;
  return summary;
}

absl::StatusOr<LabelCounts> AnnotationService::RunningCounts(
    const std::string& session_id, const std::string& annotator_id) const {
  std::shared_lock lock(mu_);
  const Session* s = FindSession(session_id);
  if (s == nullptr) {
    return absl::NotFoundError(fmt::format("no session '{}'", session_id));
  }
  auto it = s->running.find(annotator_id);
  if (it == s->running.end()) {
    LabelCounts empty;
    empty.unlabeled = static_cast<int64_t>(s->queue.size());
    return empty;
  }
  return it->second;
}

absl::StatusOr<std::string> AnnotationService::ExportLabels(
    const std::string& session_id) const {
  std::shared_lock lock(mu_);
  const Session* s = FindSession(session_id);
  if (s == nullptr) {
    return absl::NotFoundError(fmt::format("no session '{}'", session_id));
  }
  std::string out = "session,game,step,command,category,annotator,timestamp\n";
  for (const auto& [key, r] : s->labels) {
    out += fmt::format("{},{},{},{},{},{},{}\n", r.session_id,
                       r.step_ref.game_id, r.step_ref.step_index,
                       r.command_text, CategoryName(r.category),
                       r.annotator_id, r.timestamp);
  }
  return out;
}

absl::StatusOr<std::vector<AnnotationItem>> AnnotationService::Queue(
    const std::string& session_id) const {
  std::shared_lock lock(mu_);
  const Session* s = FindSession(session_id);
  if (s == nullptr) {
    return absl::NotFoundError(fmt::format("no session '{}'", session_id));
  }
  return s->queue;
}

std::vector<std::string> AnnotationService::SessionIds() const {
  std::shared_lock lock(mu_);
  return order_;
}

absl::Status AnnotationService::Compact() {
  std::unique_lock lock(mu_);
  return CompactLocked();
}

absl::Status AnnotationService::CompactLocked() {
  appends_since_compaction_ = 0;
  if (dir_.empty()) return absl::OkStatus();
  std::string content;
  for (const auto& id : order_) {
    for (const auto& [key, record] : sessions_.at(id).labels) {
      content += LabelLine(record);
      content.push_back('\n');
    }
  }
  return WriteFileDurably(LabelsPath(), content);
}

}  // namespace affordex
