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

#include "affordex/evaluation.h"

#include <algorithm>
#include <unordered_set>

#include "affordex/commands.h"
#include "affordex/text.h"
#include "fmt/format.h"

namespace affordex {

std::string NormalizeCommand(std::string_view text) {
  std::vector<std::string> kept;
  for (auto& word : SplitWords(AsciiLowercase(text))) {
    if (word == "a" || word == "an" || word == "the") continue;
    kept.push_back(std::move(word));
  }
  return JoinWords(kept);
}

StepResult MatchStep(const StepRef& ref,
                     const std::vector<std::string>& generated,
                     const std::vector<std::string>& admissible) {
  StepResult result;
  result.step_ref = ref;
  std::unordered_set<std::string> acs;
  for (const auto& ac : admissible) acs.insert(NormalizeCommand(ac));
  std::unordered_set<std::string> seen;
  for (const auto& text : generated) {
    std::string norm = NormalizeCommand(text);
    if (!seen.insert(norm).second) continue;
    if (acs.count(norm)) result.matched_texts.push_back(std::move(norm));
  }
  result.generated_count = static_cast<int64_t>(seen.size());
  result.matched_count = static_cast<int64_t>(result.matched_texts.size());
  return result;
}

StepResult MatchStep(const StepRef& ref,
                     const std::vector<GeneratedCommand>& generated,
                     const std::vector<std::string>& admissible) {
  std::vector<std::string> texts;
  texts.reserve(generated.size());
  for (const auto& command : generated) texts.push_back(command.text);
  return MatchStep(ref, texts, admissible);
}

double ScoreTotals::PrecisionPercent() const {
  if (generated == 0) return 0.0;
  return 100.0 * static_cast<double>(matched) / static_cast<double>(generated);
}

int64_t ScoreTotals::PrecisionHundredths() const {
  if (generated == 0) return 0;
  return (20000 * matched + generated) / (2 * generated);
}

ScoreTotals& ScoreTotals::operator+=(const ScoreTotals& other) {
  steps += other.steps;
  generated += other.generated;
  matched += other.matched;
  return *this;
}

const ScoreTotals* EvaluationReport::Find(std::string_view game_id) const {
  for (const auto& [game, totals] : per_game) {
    if (game == game_id) return &totals;
  }
  return nullptr;
}

void EvaluationReport::Merge(const EvaluationReport& other) {
  for (const auto& [game, totals] : other.per_game) {
    auto it = std::find_if(per_game.begin(), per_game.end(),
                           [&](const auto& row) { return row.first == game; });
    if (it == per_game.end()) {
      per_game.emplace_back(game, totals);
    } else {
      it->second += totals;
    }
  }
  overall += other.overall;
}

EvaluationReport Aggregate(
    const std::vector<StepResult>& results,
    const std::function<std::string(const StepRef&)>& game_of) {
  EvaluationReport report;
  std::map<std::string, size_t> row_of;
  for (const auto& result : results) {
    std::string game = game_of(result.step_ref);
    auto [it, inserted] = row_of.emplace(game, report.per_game.size());
    if (inserted) report.per_game.emplace_back(game, ScoreTotals{});
    ScoreTotals step{1, result.generated_count, result.matched_count};
    report.per_game[it->second].second += step;
    report.overall += step;
  }
  return report;
}

EvaluationReport Aggregate(const std::vector<StepResult>& results,
                           const std::map<StepRef, std::string>& game_index) {
  return Aggregate(results, [&](const StepRef& ref) {
    auto it = game_index.find(ref);
    return it == game_index.end() ? ref.game_id : it->second;
  });
}

EvaluationReport Aggregate(const std::vector<StepResult>& results) {
  return Aggregate(results, [](const StepRef& ref) { return ref.game_id; });
}

std::string FormatPercent(const ScoreTotals& totals) {
  int64_t h = totals.PrecisionHundredths();
  return fmt::format("{}.{:02d}", h / 100, h % 100);
}

std::string RenderReport(const EvaluationReport& report, ReportFormat format) {
  static constexpr std::string_view kPolicy =
      "# generated commands deduplicated within a step, not across steps; "
      "steps without admissible commands are not scored; "
      "precision is 0 when nothing was generated\n";
  std::string out(kPolicy);
  auto row = [&](std::string_view game, const ScoreTotals& t) {
    if (format == ReportFormat::kCsv) {
      out += fmt::format("{},{},{},{},{}\n", game, t.steps, t.generated,
                         t.matched, FormatPercent(t));
    } else {
      out += fmt::format("{:<24} {:>7} {:>10} {:>8} {:>16}\n", game, t.steps,
                         t.generated, t.matched, FormatPercent(t));
    }
  };
  if (format == ReportFormat::kCsv) {
    out += "game,steps,generated,matched,matched_percent\n";
  } else {
    out += fmt::format("{:<24} {:>7} {:>10} {:>8} {:>16}\n", "game", "steps",
                       "generated", "matched", "matched_percent");
  }
  for (const auto& [game, totals] : report.per_game) row(game, totals);
  row("Overall", report.overall);
  return out;
}

}  // namespace affordex
