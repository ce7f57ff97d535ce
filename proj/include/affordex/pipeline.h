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

// The end-to-end run over recorded traces: location deduplication, object
// extraction, knowledge lookup, command generation and scoring, with the
// report and per-step logs written to an output directory.

#ifndef AFFORDEX_PIPELINE_H_
#define AFFORDEX_PIPELINE_H_

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "affordex/affordance_graph.h"
#include "affordex/commands.h"
#include "affordex/conceptnet.h"
#include "affordex/evaluation.h"
#include "affordex/knowledge.h"
#include "affordex/objects.h"
#include "affordex/resources.h"
#include "affordex/trace.h"

namespace affordex {

// kAuto uses the step's object list when present and the tagger otherwise.
enum class ObjectMode { kAuto, kList, kTagger };
enum class KnowledgeMode { kLive, kSnapshot, kLiveCache };

absl::StatusOr<ObjectMode> ParseObjectMode(std::string_view name);
absl::StatusOr<KnowledgeMode> ParseKnowledgeMode(std::string_view name);
absl::StatusOr<ReportFormat> ParseReportFormat(std::string_view name);

// Candidate objects of a step under the given mode. Extraction problems are
// reported in the diagnostics.
ExtractionResult ExtractStepObjects(const ScenarioStep& step, ObjectMode mode,
                                    const NounTagger& tagger);

struct RunConfig {
  // Trace files, or directories of *.jsonl trace files.
  std::vector<std::string> trace_paths;
  ObjectMode object_mode = ObjectMode::kAuto;
  std::string tagger_backend = "lexicon";
  KnowledgeMode knowledge_mode = KnowledgeMode::kSnapshot;
  std::string snapshot_path;
  // Record file for live-cache mode; defaults to <out>/knowledge_cache.jsonl.
  std::string cache_path;
  ConceptNetOptions conceptnet;
  std::set<Relation> relations = DefaultRelations();
  double min_weight = 0.0;
  bool take_augment = false;
  bool graph_enabled = false;
  // Empty: nothing is written.
  std::string out_dir;
  ReportFormat report_format = ReportFormat::kTable;
  // Empty: DefaultDataDir().
  std::string data_dir;
  // Traces processed concurrently.
  int jobs = 1;
};

// Outcome of one evaluation step.
struct StepOutcome {
  StepRef step_ref;
  std::string location_id;
  std::vector<ObjectMention> objects;
  std::vector<GeneratedCommand> commands;
  bool scored = false;
  StepResult result;
  std::vector<std::string> diagnostics;
};

struct RunResult {
  EvaluationReport report;
  std::vector<StepOutcome> steps;  // trace order, then walkthrough order
  AffordanceGraph graph;
};

// Processes steps against a knowledge client. Safe for concurrent use when
// the client is.
class Pipeline {
 public:
  struct Options {
    ObjectMode object_mode = ObjectMode::kAuto;
    std::set<Relation> relations = DefaultRelations();
    double min_weight = 0.0;
    bool take_augment = false;
  };

  // All references must outlive the pipeline.
  Pipeline(const LanguageResources& resources, const NounTagger& tagger,
           KnowledgeClient& knowledge, Options options);

  StepOutcome ProcessStep(const ScenarioStep& step) const;

  // Evaluation steps of the trace, in order.
  std::vector<StepOutcome> ProcessTrace(const ScenarioTrace& trace) const;

 private:
  const LanguageResources& resources_;
  const NounTagger& tagger_;
  KnowledgeClient& knowledge_;
  PatternParser parser_;
  CommandGenerator generator_;
  Options options_;
};

// Builds the knowledge client the config asks for. A snapshot mode without
// a readable snapshot is a configuration error.
absl::StatusOr<std::unique_ptr<KnowledgeClient>> MakeKnowledgeClient(
    const RunConfig& config);

// Loads everything named by the config and runs it. Errors keep their
// category: InvalidArgument for configuration, NotFound/PermissionDenied
// for I/O, DataLoss/FailedPrecondition for invalid traces.
absl::StatusOr<RunResult> RunPipeline(const RunConfig& config);

// The same with resources and knowledge supplied by the caller.
absl::StatusOr<RunResult> RunPipeline(const RunConfig& config,
                                      const LanguageResources& resources,
                                      KnowledgeClient& knowledge);

// Artifacts of a run: report.txt or report.csv, run.log, commands.jsonl,
// diagnostics.log and, with the graph enabled, graph.nt.
absl::Status WriteRunOutputs(const RunConfig& config, const RunResult& result);

// Object heads of the evaluation steps of `config.trace_paths`, plus their
// singular forms, sorted and unique: the terms a snapshot for these traces
// has to cover.
absl::StatusOr<std::vector<std::string>> CollectQueryTerms(
    const RunConfig& config, const LanguageResources& resources);

// Process exit status for a failed command: 1 configuration error, 2 I/O
// error, 3 invalid input.
int ExitCodeFor(const absl::Status& status);

// One line per step: "<game>#<step> <location> objects=N generated=G
// matched=M [unscored]" followed by "| text; text" when something matched.
std::string RenderRunLog(const RunResult& result);

}  // namespace affordex

#endif  // AFFORDEX_PIPELINE_H_
