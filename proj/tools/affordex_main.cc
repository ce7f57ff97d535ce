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

// affordex: affordance extraction and evaluation over recorded game traces.
//
//   affordex run --trace t.jsonl --snapshot s.jsonl --out results/
//   affordex snapshot --trace t.jsonl --out s.jsonl
//   affordex annotate --dir labels/ --port 8080

#include <csignal>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "affordex/annotation.h"
#include "affordex/annotation_server.h"
#include "affordex/conceptnet.h"
#include "affordex/io.h"
#include "affordex/knowledge.h"
#include "affordex/pipeline.h"
#include "affordex/resources.h"
#include "affordex/status_macros.h"
#include "affordex/text.h"
#include "fmt/format.h"

namespace affordex {
namespace {

int Fail(const absl::Status& status) {
  std::cerr << "affordex: " << StatusText(status) << "\n";
  return ExitCodeFor(status);
}

struct CommonFlags {
  std::vector<std::string> traces;
  std::string objects = "auto";
  std::string tagger = "lexicon";
  std::string data_dir;
  std::string api_base;
  int page_limit = 1000;
  int max_pages = 5;
  int rate_limit_ms = 1000;
};

void AddCommonFlags(CLI::App* app, CommonFlags& f) {
  app->add_option("--trace", f.traces, "Trace files or directories of *.jsonl traces");
  app->add_option("--objects", f.objects, "Object mode: auto, list or tagger");
  app->add_option("--tagger", f.tagger, "Tagger backend");
  app->add_option("--data-dir", f.data_dir, "Language data directory");
  app->add_option("--api-base", f.api_base,
                  fmt::format("Knowledge API base URL (default ${} or {})",
                              kConceptNetUrlEnv, kConceptNetBase));
  app->add_option("--page-limit", f.page_limit, "Edges per API page");
  app->add_option("--max-pages", f.max_pages, "API pages per query");
  app->add_option("--rate-limit-ms", f.rate_limit_ms,
                  "Minimum interval between API requests");
}

absl::Status ApplyCommonFlags(const CommonFlags& f, RunConfig& config) {
  config.trace_paths = f.traces;
  AFFORDEX_ASSIGN_OR_RETURN(config.object_mode, ParseObjectMode(f.objects));
  config.tagger_backend = f.tagger;
  config.data_dir = f.data_dir;
  config.conceptnet.api_base = f.api_base.empty()
                                   ? ConceptNetBaseFromEnvironment()
                                   : f.api_base;
  config.conceptnet.page_limit = f.page_limit;
  config.conceptnet.max_pages = f.max_pages;
  config.conceptnet.rate_limit_ms = f.rate_limit_ms;
  if (f.page_limit <= 0 || f.max_pages <= 0 || f.rate_limit_ms < 0) {
    return absl::InvalidArgumentError(
        "--page-limit and --max-pages must be positive, --rate-limit-ms "
        "non-negative");
  }
  return absl::OkStatus();
}

int Run(const CommonFlags& common, const std::string& knowledge,
        const std::string& snapshot, const std::string& cache,
        const std::string& relations, double min_weight, bool take, bool graph,
        const std::string& out, const std::string& report, int jobs) {
  RunConfig config;
  if (absl::Status s = ApplyCommonFlags(common, config); !s.ok()) {
    return Fail(s);
  }
  auto mode = ParseKnowledgeMode(knowledge);
  if (!mode.ok()) return Fail(mode.status());
  config.knowledge_mode = *mode;
  config.snapshot_path = snapshot;
  config.cache_path = cache;
  if (!relations.empty()) {
    auto parsed = ParseRelationList(relations);
    if (!parsed.ok()) return Fail(parsed.status());
    config.relations = *parsed;
  }
  if (!(min_weight >= 0)) {
    return Fail(absl::InvalidArgumentError("--min-weight must be >= 0"));
  }
  config.min_weight = min_weight;
  config.take_augment = take;
  config.graph_enabled = graph;
  config.out_dir = out;
  auto format = ParseReportFormat(report);
  if (!format.ok()) return Fail(format.status());
  config.report_format = *format;
  config.jobs = jobs;

  auto result = RunPipeline(config);
  if (!result.ok()) return Fail(result.status());
  std::cout << RenderReport(result->report, config.report_format);
  size_t diagnostics = 0;
  for (const auto& step : result->steps) diagnostics += step.diagnostics.size();
  if (diagnostics > 0) {
    std::cerr << fmt::format("affordex: {} diagnostics{}\n", diagnostics,
                             out.empty() ? "" : " (see diagnostics.log)");
  }
  return 0;
}

int BuildSnapshotCommand(const CommonFlags& common,
                         const std::vector<std::string>& extra_terms,
                         const std::string& terms_file,
                         const std::string& out) {
  RunConfig config;
  if (absl::Status s = ApplyCommonFlags(common, config); !s.ok()) {
    return Fail(s);
  }
  std::string data_dir =
      config.data_dir.empty() ? DefaultDataDir() : config.data_dir;
  auto resources = LanguageResources::Load(data_dir);
  if (!resources.ok()) {
    return Fail(absl::InvalidArgumentError(
        fmt::format("cannot load language data from {}: {}", data_dir,
                    StatusText(resources.status()))));
  }
  auto collected = CollectQueryTerms(config, **resources);
  if (!collected.ok()) return Fail(collected.status());
  std::set<std::string> terms(collected->begin(), collected->end());
  for (const auto& t : extra_terms) terms.insert(AsciiLowercase(t));
  if (!terms_file.empty()) {
    auto content = ReadFile(terms_file);
    if (!content.ok()) return Fail(content.status());
    for (const auto& line : SplitLines(*content)) {
      std::string term = CanonicalSpacing(line);
      if (!term.empty() && term.front() != '#') terms.insert(term);
    }
  }
  ConceptNetSource source(config.conceptnet);
  SnapshotBuildOptions options;
  options.api_base = config.conceptnet.api_base;
  options.page_limit = config.conceptnet.page_limit;
  options.max_pages = config.conceptnet.max_pages;
  auto manifest = BuildSnapshot(
      source, std::vector<std::string>(terms.begin(), terms.end()), out,
      options);
  if (!manifest.ok()) return Fail(manifest.status());
  std::cout << fmt::format("{}: {} terms, {} failed\n", out,
                           manifest->terms.size(),
                           manifest->failed_terms.size());
  for (const auto& t : manifest->failed_terms) {
    std::cerr << "affordex: lookup failed for '" << t << "'\n";
  }
  return 0;
}

AnnotationServer* g_server = nullptr;

void StopServer(int) {
  if (g_server != nullptr) g_server->Stop();
}

int Annotate(const std::string& dir, const std::string& host, int port) {
  AnnotationService service(dir);
  if (absl::Status s = service.Open(); !s.ok()) return Fail(s);
  AnnotationServer server(service);
  int bound = server.Bind(host, port);
  if (bound < 0) {
    return Fail(absl::UnavailableError(
        fmt::format("cannot listen on {}:{}", host, port)));
  }
  std::cout << fmt::format("annotation service on http://{}:{}/\n", host,
                           bound)
            << std::flush;
  g_server = &server;
  std::signal(SIGINT, StopServer);
  std::signal(SIGTERM, StopServer);
  server.Serve();
  g_server = nullptr;
  return 0;
}

int Main(int argc, char** argv) {
  CLI::App app("Affordance extraction for text games", "affordex");
  app.set_version_flag("--version", AFFORDEX_VERSION);
  app.require_subcommand(1);

  CommonFlags run_common;
  std::string knowledge = "snapshot", snapshot, cache, relations, out,
              report = "table";
  double min_weight = 0;
  bool take = false, graph = false;
  int jobs = 1;
  CLI::App* run = app.add_subcommand("run", "Generate and score commands");
  AddCommonFlags(run, run_common);
  run->add_option("--knowledge", knowledge,
                  "Knowledge mode: live, snapshot or live-cache");
  run->add_option("--snapshot", snapshot, "Snapshot file (snapshot mode)");
  run->add_option("--cache", cache, "Record cache file (live-cache mode)");
  run->add_option("--relations", relations,
                  "Relations to query, e.g. UsedFor,ReceivesAction");
  run->add_option("--min-weight", min_weight, "Minimum edge weight");
  run->add_flag("--take", take, "Add a take command for every object");
  run->add_flag("--graph", graph, "Export the affordance graph");
  run->add_option("--out", out, "Output directory");
  run->add_option("--report", report, "Report format: table or csv");
  run->add_option("--jobs", jobs, "Traces processed in parallel");

  CommonFlags snap_common;
  std::vector<std::string> snap_terms;
  std::string terms_file, snap_out;
  CLI::App* snap =
      app.add_subcommand("snapshot", "Record knowledge answers for offline runs");
  AddCommonFlags(snap, snap_common);
  snap->add_option("--term", snap_terms, "Additional terms");
  snap->add_option("--terms-file", terms_file, "File with one term per line");
  snap->add_option("--out", snap_out, "Snapshot file")->required();

  std::string annotate_dir, host = "127.0.0.1";
  int port = 8080;
  CLI::App* annotate =
      app.add_subcommand("annotate", "Serve the human annotation workflow");
  annotate->add_option("--dir", annotate_dir, "Label store directory")
      ->required();
  annotate->add_option("--host", host, "Listen address");
  annotate->add_option("--port", port, "Listen port (0 picks a free one)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (run->parsed()) {
    return Run(run_common, knowledge, snapshot, cache, relations, min_weight,
               take, graph, out, report, jobs);
  }
  if (snap->parsed()) {
    return BuildSnapshotCommand(snap_common, snap_terms, terms_file, snap_out);
  }
  return Annotate(annotate_dir, host, port);
}

}  // namespace
}  // namespace affordex

int main(int argc, char** argv) { return affordex::Main(argc, argv); }
