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

#include "affordex/pipeline.h"

#include <algorithm>
#include <atomic>
#include <thread>

#include "affordex/io.h"
#include "affordex/status_macros.h"
#include "fmt/format.h"

namespace affordex {
namespace {

std::string StepName(const StepRef& ref) {
  return fmt::format("{}#{}", ref.game_id, ref.step_index);
}

}  // namespace

absl::StatusOr<ObjectMode> ParseObjectMode(std::string_view name) {
  if (name == "auto") return ObjectMode::kAuto;
  if (name == "list") return ObjectMode::kList;
  if (name == "tagger") return ObjectMode::kTagger;
  return absl::InvalidArgumentError(fmt::format(
      "unknown object mode '{}' (expected auto, list or tagger)", name));
}

absl::StatusOr<KnowledgeMode> ParseKnowledgeMode(std::string_view name) {
  if (name == "live") return KnowledgeMode::kLive;
  if (name == "snapshot") return KnowledgeMode::kSnapshot;
  if (name == "live-cache") return KnowledgeMode::kLiveCache;
  return absl::InvalidArgumentError(fmt::format(
      "unknown knowledge mode '{}' (expected live, snapshot or live-cache)",
      name));
}

absl::StatusOr<ReportFormat> ParseReportFormat(std::string_view name) {
  if (name == "table") return ReportFormat::kTable;
  if (name == "csv") return ReportFormat::kCsv;
  return absl::InvalidArgumentError(
      fmt::format("unknown report format '{}' (expected table or csv)", name));
}

ExtractionResult ExtractStepObjects(const ScenarioStep& step, ObjectMode mode,
                                    const NounTagger& tagger) {
  bool use_list = mode == ObjectMode::kList ||
                  (mode == ObjectMode::kAuto && step.object_list.has_value());
  if (use_list) {
    if (step.object_list) return ExtractObjectsListed(*step.object_list);
    ExtractionResult none;
    none.diagnostics.push_back("no object list in list mode");
    return none;
  }
  auto tagged = ExtractObjectsTagged(step.ExtractionText(), tagger);
  if (tagged.ok()) return *std::move(tagged);
  ExtractionResult none;
  none.diagnostics.push_back(StatusText(tagged.status()));
  return none;
}

Pipeline::Pipeline(const LanguageResources& resources, const NounTagger& tagger,
                   KnowledgeClient& knowledge, Options options)
    : resources_(resources),
      tagger_(tagger),
      knowledge_(knowledge),
      parser_(resources.MakePatternParser()),
      generator_(resources.MakeCommandGenerator()),
      options_(std::move(options)) {}

StepOutcome Pipeline::ProcessStep(const ScenarioStep& step) const {
  StepOutcome out;
  out.step_ref = step.ref();
  out.location_id = step.location_id;
  const std::string name = StepName(out.step_ref);

  ExtractionResult extraction =
      ExtractStepObjects(step, options_.object_mode, tagger_);
  for (auto& d : extraction.diagnostics) {
    out.diagnostics.push_back(fmt::format("{}: {}", name, d));
  }
  out.objects = std::move(extraction.mentions);

  PatternsByObject patterns;
  for (const auto& mention : out.objects) {
    auto edges = knowledge_.QueryEdges(mention.head, options_.relations,
                                       options_.min_weight);
    if (edges.ok() && edges->empty()) {
      // Plural heads fall back to the singular entry.
      std::string singular = resources_.singularizer.Singular(mention.head);
      if (singular != mention.head) {
        edges = knowledge_.QueryEdges(singular, options_.relations,
                                      options_.min_weight);
        if (edges.ok() && !edges->empty()) {
          out.diagnostics.push_back(fmt::format(
              "{}: no entry for '{}', used singular '{}'", name, mention.head,
              singular));
        }
      }
    }
    if (!edges.ok()) {
      out.diagnostics.push_back(fmt::format(
          "{}: skipped object '{}': {}", name, mention.head,
          StatusText(edges.status())));
      continue;
    }
    auto& list = patterns[mention.head];
    for (const auto& edge : *edges) {
      auto pattern = parser_.Parse(edge);
      if (!pattern.ok()) {
        out.diagnostics.push_back(
            fmt::format("{}: {}", name, StatusText(pattern.status())));
        continue;
      }
      list.push_back(*std::move(pattern));
    }
  }

  GenerationOptions generation;
  generation.take_augment = options_.take_augment;
  StepCommands generated =
      generator_.Generate(out.step_ref, out.objects, patterns, generation);
  out.commands = std::move(generated.commands);
  for (auto& d : generated.diagnostics) out.diagnostics.push_back(std::move(d));

  out.scored = step.HasAdmissibleCommands();
  if (out.scored) {
    out.result = MatchStep(out.step_ref, out.commands, *step.admissible_commands);
  } else {
    out.result.step_ref = out.step_ref;
    out.result.generated_count = static_cast<int64_t>(out.commands.size());
  }
  return out;
}

std::vector<StepOutcome> Pipeline::ProcessTrace(
    const ScenarioTrace& trace) const {
  std::vector<StepOutcome> outcomes;
  for (const auto& step : EvaluationSteps(trace)) {
    outcomes.push_back(ProcessStep(step));
  }
  return outcomes;
}

absl::StatusOr<std::unique_ptr<KnowledgeClient>> MakeKnowledgeClient(
    const RunConfig& config) {
  if (config.knowledge_mode == KnowledgeMode::kSnapshot) {
    if (config.snapshot_path.empty()) {
      return absl::InvalidArgumentError(
          "snapshot mode needs a snapshot file (--snapshot)");
    }
    auto snapshot = Snapshot::Load(config.snapshot_path);
    if (absl::IsNotFound(snapshot.status())) {
      return absl::InvalidArgumentError(fmt::format(
          "snapshot {} does not exist", config.snapshot_path));
    }
    if (!snapshot.ok()) return snapshot.status();
    return std::make_unique<KnowledgeClient>(
        std::make_unique<Snapshot>(*std::move(snapshot)), nullptr);
  }
  auto source = std::make_unique<ConceptNetSource>(config.conceptnet);
  std::unique_ptr<EdgeCache> cache;
  if (config.knowledge_mode == KnowledgeMode::kLiveCache) {
    std::string path = config.cache_path;
    if (path.empty() && !config.out_dir.empty()) {
      path = config.out_dir + "/knowledge_cache.jsonl";
    }
    cache = std::make_unique<EdgeCache>(path);
    AFFORDEX_RETURN_IF_ERROR(cache->Open());
  } else {
    // Repeated queries within one run are answered from memory.
    cache = std::make_unique<EdgeCache>();
  }
  return std::make_unique<KnowledgeClient>(std::move(source), std::move(cache));
}

absl::StatusOr<RunResult> RunPipeline(const RunConfig& config) {
  std::string data_dir =
      config.data_dir.empty() ? DefaultDataDir() : config.data_dir;
  auto resources = LanguageResources::Load(data_dir);
  if (!resources.ok()) {
    return absl::InvalidArgumentError(fmt::format(
        "cannot load language data from {}: {}", data_dir,
        StatusText(resources.status())));
  }
  if (!config.out_dir.empty()) {
    AFFORDEX_RETURN_IF_ERROR(EnsureDirectory(config.out_dir));
  }
  AFFORDEX_ASSIGN_OR_RETURN(std::unique_ptr<KnowledgeClient> knowledge,
                            MakeKnowledgeClient(config));
  return RunPipeline(config, **resources, *knowledge);
}

absl::StatusOr<RunResult> RunPipeline(const RunConfig& config,
                                      const LanguageResources& resources,
                                      KnowledgeClient& knowledge) {
  std::unique_ptr<NounTagger> tagger;
  if (config.object_mode != ObjectMode::kList) {
    AFFORDEX_ASSIGN_OR_RETURN(tagger,
                              MakeTagger(config.tagger_backend, resources));
  } else {
    tagger = std::make_unique<LexiconNounTagger>(WordList(), WordList(),
                                                 WordList());
  }
  if (!config.out_dir.empty()) {
    AFFORDEX_RETURN_IF_ERROR(EnsureDirectory(config.out_dir));
  }
  AFFORDEX_ASSIGN_OR_RETURN(std::vector<std::string> trace_paths,
                            ExpandPaths(config.trace_paths, ".jsonl"));
  std::vector<ScenarioTrace> traces;
  for (const auto& path : trace_paths) {
    AFFORDEX_ASSIGN_OR_RETURN(ScenarioTrace trace, LoadTrace(path));
    traces.push_back(std::move(trace));
  }

  Pipeline::Options options;
  options.object_mode = config.object_mode;
  options.relations = config.relations;
  options.min_weight = config.min_weight;
  options.take_augment = config.take_augment;
  Pipeline pipeline(resources, *tagger, knowledge, options);

  std::vector<std::vector<StepOutcome>> per_trace(traces.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < traces.size(); i = next++) {
      per_trace[i] = pipeline.ProcessTrace(traces[i]);
    }
  };
  int jobs = std::clamp<int>(config.jobs, 1, std::max<int>(1, traces.size()));
  std::vector<std::thread> threads;
  for (int j = 1; j < jobs; ++j) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();

  RunResult result;
  for (size_t i = 0; i < traces.size(); ++i) {
    std::vector<StepResult> scored;
    for (const auto& outcome : per_trace[i]) {
      if (outcome.scored) scored.push_back(outcome.result);
    }
    EvaluationReport report = Aggregate(scored);
    if (report.Find(traces[i].game_id) == nullptr) {
      report.per_game.emplace_back(traces[i].game_id, ScoreTotals{});
    }
    result.report.Merge(report);
    for (auto& outcome : per_trace[i]) {
      if (config.graph_enabled) {
        for (const auto& command : outcome.commands) {
          result.graph.Insert(command.affordance);
        }
      }
      result.steps.push_back(std::move(outcome));
    }
  }
  if (!config.out_dir.empty()) {
    AFFORDEX_RETURN_IF_ERROR(WriteRunOutputs(config, result));
  }
  return result;
}

absl::StatusOr<std::vector<std::string>> CollectQueryTerms(
    const RunConfig& config, const LanguageResources& resources) {
  AFFORDEX_ASSIGN_OR_RETURN(std::unique_ptr<NounTagger> tagger,
                            MakeTagger(config.tagger_backend, resources));
  AFFORDEX_ASSIGN_OR_RETURN(std::vector<std::string> trace_paths,
                            ExpandPaths(config.trace_paths, ".jsonl"));
  std::set<std::string> terms;
  for (const auto& path : trace_paths) {
    AFFORDEX_ASSIGN_OR_RETURN(ScenarioTrace trace, LoadTrace(path));
    for (const auto& step : EvaluationSteps(trace)) {
      ExtractionResult extraction =
          ExtractStepObjects(step, config.object_mode, *tagger);
      for (const auto& mention : extraction.mentions) {
        terms.insert(mention.head);
        terms.insert(resources.singularizer.Singular(mention.head));
      }
    }
  }
  return std::vector<std::string>(terms.begin(), terms.end());
}

int ExitCodeFor(const absl::Status& status) {
  switch (status.code()) {
    case absl::StatusCode::kOk: return 0;
    case absl::StatusCode::kInvalidArgument: return 1;
    case absl::StatusCode::kDataLoss:
    case absl::StatusCode::kFailedPrecondition: return 3;
    default: return 2;
  }
}

std::string RenderRunLog(const RunResult& result) {
  std::string out;
  for (const auto& step : result.steps) {
    out += fmt::format("{} {} objects={} generated={} matched={}",
                       StepName(step.step_ref), step.location_id,
                       step.objects.size(), step.result.generated_count,
                       step.result.matched_count);
    if (!step.scored) out += " unscored";
    if (!step.result.matched_texts.empty()) {
      out += " |";
      for (size_t i = 0; i < step.result.matched_texts.size(); ++i) {
        out += (i == 0 ? " " : "; ") + step.result.matched_texts[i];
      }
    }
    out.push_back('\n');
  }
  return out;
}

absl::Status WriteRunOutputs(const RunConfig& config, const RunResult& result) {
  const std::string& dir = config.out_dir;
  AFFORDEX_RETURN_IF_ERROR(EnsureDirectory(dir));
  bool csv = config.report_format == ReportFormat::kCsv;
  AFFORDEX_RETURN_IF_ERROR(
      WriteFile(dir + (csv ? "/report.csv" : "/report.txt"),
                RenderReport(result.report, config.report_format)));
  AFFORDEX_RETURN_IF_ERROR(WriteFile(dir + "/run.log", RenderRunLog(result)));
  std::vector<StepCommandList> lists;
  std::string diagnostics;
  for (const auto& step : result.steps) {
    StepCommandList list;
    list.step_ref = step.step_ref;
    for (const auto& command : step.commands) list.commands.push_back(command.text);
    lists.push_back(std::move(list));
    for (const auto& d : step.diagnostics) diagnostics += d + "\n";
  }
  AFFORDEX_RETURN_IF_ERROR(
      WriteFile(dir + "/commands.jsonl", SerializeCommandLists(lists)));
  AFFORDEX_RETURN_IF_ERROR(WriteFile(dir + "/diagnostics.log", diagnostics));
  if (config.graph_enabled) {
    AFFORDEX_RETURN_IF_ERROR(result.graph.Export(dir + "/graph.nt"));
  }
  return absl::OkStatus();
}

}  // namespace affordex
