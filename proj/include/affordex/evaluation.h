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

// Automated scoring: generated commands are matched against the admissible
// commands of their step after normalization, then counts are folded into
// per-game and overall precision.

#ifndef AFFORDEX_EVALUATION_H_
#define AFFORDEX_EVALUATION_H_

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "affordex/trace.h"

namespace affordex {

struct GeneratedCommand;

// Lowercase, trimmed, single-spaced, with standalone articles removed.
std::string NormalizeCommand(std::string_view text);

struct StepResult {
  StepRef step_ref;
  int64_t generated_count = 0;
  int64_t matched_count = 0;
  std::vector<std::string> matched_texts;
};

// Matches distinct normalized generated texts against the normalized
// admissible set; both counts are of distinct texts. No synonym or fuzzy
// matching.
StepResult MatchStep(const StepRef& ref,
                     const std::vector<std::string>& generated,
                     const std::vector<std::string>& admissible);
StepResult MatchStep(const StepRef& ref,
                     const std::vector<GeneratedCommand>& generated,
                     const std::vector<std::string>& admissible);

// Counts behind one report row. The ratio matched/generated is kept exact;
// percentages are derived on demand.
struct ScoreTotals {
  int64_t steps = 0;
  int64_t generated = 0;
  int64_t matched = 0;

  // 100 * matched / generated, or 0 when nothing was generated.
  double PrecisionPercent() const;
  // The percentage in hundredths, rounded half up: 52/12949 -> 40 (0.40%).
  int64_t PrecisionHundredths() const;

  ScoreTotals& operator+=(const ScoreTotals& other);
  bool operator==(const ScoreTotals&) const = default;
};

struct EvaluationReport {
  // Games in first-seen order.
  std::vector<std::pair<std::string, ScoreTotals>> per_game;
  ScoreTotals overall;

  const ScoreTotals* Find(std::string_view game_id) const;

  // Adds another report's counts. Games unknown to this report are appended
  // in the other report's order.
  void Merge(const EvaluationReport& other);

  bool operator==(const EvaluationReport&) const = default;
};

// Each result counts as one step of the game `game_of` assigns to it.
EvaluationReport Aggregate(
    const std::vector<StepResult>& results,
    const std::function<std::string(const StepRef&)>& game_of);
EvaluationReport Aggregate(const std::vector<StepResult>& results,
                           const std::map<StepRef, std::string>& game_index);
// Uses the game id carried by each step reference.
EvaluationReport Aggregate(const std::vector<StepResult>& results);

enum class ReportFormat { kTable, kCsv };

// "0.40" style, two decimals.
std::string FormatPercent(const ScoreTotals& totals);

// Columns: game, steps, generated, matched, matched_percent; the overall row
// comes last. Lines starting with '#' state the counting policy.
std::string RenderReport(const EvaluationReport& report, ReportFormat format);

}  // namespace affordex

#endif  // AFFORDEX_EVALUATION_H_
