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

// Human-baseline annotation: sessions queue every (step, command) pair of a
// generated-command run, annotators label each pair A (contextually
// suitable), B (valid but contextually infeasible) or C (invalid), and the
// labels are folded into per-game counts.
//
// Persistence is two append-only record logs in a directory, sessions.jsonl
// and labels.jsonl. Every label is flushed to stable storage before it is
// acknowledged; reopening the directory replays both logs, and compaction
// rewrites the label log keeping only the last record of every key.

#ifndef AFFORDEX_ANNOTATION_H_
#define AFFORDEX_ANNOTATION_H_

#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "affordex/commands.h"
#include "affordex/knowledge.h"
#include "affordex/trace.h"

namespace affordex {

enum class Category { kA, kB, kC };

std::string_view CategoryName(Category category);
// Accepts "A", "B" or "C".
std::optional<Category> ParseCategory(std::string_view name);

struct AnnotationRecord {
  std::string session_id;
  StepRef step_ref;
  std::string command_text;
  Category category = Category::kA;
  std::string annotator_id;
  std::string timestamp;

  bool operator==(const AnnotationRecord&) const = default;
};

// One step as the annotator sees it: the scene text and the commands
// generated for it. Admissible commands are never part of a session.
struct SessionStep {
  StepRef step_ref;
  std::string context;
  std::vector<std::string> commands;

  bool operator==(const SessionStep&) const = default;
};

struct AnnotationItem {
  StepRef step_ref;
  std::string command_text;

  bool operator==(const AnnotationItem&) const = default;
};

// The next pair to label, shown together with the rest of its step.
struct NextItem {
  bool done = false;
  AnnotationItem item;
  std::string context;
  std::vector<std::string> step_commands;
  int64_t position = 0;  // 1-based position in the queue
  int64_t total = 0;     // queue length
};

struct LabelCounts {
  int64_t a = 0;
  int64_t b = 0;
  int64_t c = 0;
  int64_t unlabeled = 0;

  int64_t total() const { return a + b + c; }
  // 100 * (A + B) / total, or 0 when nothing is labeled.
  double FunctionalPercent() const;

  LabelCounts& operator+=(const LabelCounts& other);
  bool operator==(const LabelCounts&) const = default;
};

struct LabelSummary {
  std::string annotator_id;
  std::vector<std::pair<std::string, LabelCounts>> per_game;  // queue order
  LabelCounts overall;

  bool operator==(const LabelSummary&) const = default;
};

// Builds session steps from traces and per-step command lists, in the order
// of the lists. Fails with FailedPrecondition when a list names a step that
// is not in the traces or when no command is given at all.
absl::StatusOr<std::vector<SessionStep>> BuildSessionSteps(
    const std::vector<ScenarioTrace>& traces,
    const std::vector<StepCommandList>& commands);

class AnnotationService {
 public:
  struct Options {
    // Label appends between automatic compactions; 0 disables them.
    int compact_every = 1000;
  };

  // `dir` empty keeps everything in memory.
  explicit AnnotationService(std::string dir, Clock clock = UtcNow);
  AnnotationService(std::string dir, Clock clock, Options options);

  // Replays the record logs. A missing directory is created. A torn final
  // line, left by a crash during an append, is ignored.
  absl::Status Open();

  // Queues every (step, command) pair once, in step order. `annotator_id`
  // becomes the session's default annotator for aggregation.
  absl::StatusOr<std::string> CreateSession(std::vector<SessionStep> steps,
                                            const std::string& annotator_id);
  absl::StatusOr<std::string> CreateSession(
      const std::vector<ScenarioTrace>& traces,
      const std::vector<StepCommandList>& commands,
      const std::string& annotator_id);

  absl::StatusOr<NextItem> Next(const std::string& session_id,
                                const std::string& annotator_id) const;

  // Validates, persists and then applies the label. A second label for the
  // same item and annotator replaces the first.
  absl::StatusOr<AnnotationRecord> SubmitLabel(const std::string& session_id,
                                               const std::string& annotator_id,
                                               const StepRef& step_ref,
                                               const std::string& command_text,
                                               std::string_view category);

  // Counts recomputed from the stored records. Without an annotator the
  // session's default annotator is used.
  absl::StatusOr<LabelSummary> AggregateLabels(
      const std::string& session_id,
      std::optional<std::string> annotator_id = std::nullopt) const;

  // Counts maintained as labels arrive; equal to AggregateLabels.
  absl::StatusOr<LabelCounts> RunningCounts(
      const std::string& session_id, const std::string& annotator_id) const;

  // CSV with columns session, game, step, command, category, annotator,
  // timestamp; queue order, then annotator.
  absl::StatusOr<std::string> ExportLabels(const std::string& session_id) const;

  absl::StatusOr<std::vector<AnnotationItem>> Queue(
      const std::string& session_id) const;
  std::vector<std::string> SessionIds() const;

  // Rewrites the label log with one record per key.
  absl::Status Compact();

 private:
  struct Session {
    std::string id;
    std::string annotator_id;
    std::vector<SessionStep> steps;
    std::vector<AnnotationItem> queue;
    std::map<std::pair<StepRef, std::string>, size_t> index;  // into queue
    // (item index, annotator) -> record
    std::map<std::pair<size_t, std::string>, AnnotationRecord> labels;
    std::map<std::string, LabelCounts> running;
  };

  const Session* FindSession(const std::string& id) const;
  static void BuildQueue(Session& session);
  void ApplyLabel(Session& session, size_t item, AnnotationRecord record);
  absl::Status CompactLocked();
  std::string SessionsPath() const;
  std::string LabelsPath() const;

  std::string dir_;
  Clock clock_;
  Options options_;
  mutable std::shared_mutex mu_;
  std::map<std::string, Session> sessions_;
  std::vector<std::string> order_;
  int appends_since_compaction_ = 0;
};

}  // namespace affordex

#endif  // AFFORDEX_ANNOTATION_H_
