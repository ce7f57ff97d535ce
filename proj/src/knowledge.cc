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

#include "affordex/knowledge.h"

#include <chrono>
#include <ctime>
#include <filesystem>

#include "affordex/io.h"
#include "affordex/status_macros.h"
#include "affordex/text.h"
#include "fmt/format.h"
#include "json.hpp"

namespace affordex {
namespace {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

std::optional<EdgeSource> ParseEdgeSource(std::string_view name) {
  if (name == "live_api") return EdgeSource::kLiveApi;
  if (name == "snapshot") return EdgeSource::kSnapshot;
  if (name == "cache") return EdgeSource::kCache;
  return std::nullopt;
}

absl::Status CheckEdge(const KnowledgeEdge& edge) {
  if (edge.subject.empty()) return absl::DataLossError("edge without subject");
  if (edge.tail_text.empty()) return absl::DataLossError("edge without tail");
  if (!(edge.weight >= 0.0)) return absl::DataLossError("negative edge weight");
  return absl::OkStatus();
}

std::vector<std::string> StringArray(const Json& value) {
  std::vector<std::string> out;
  if (!value.is_array()) return out;
  for (const auto& v : value) {
    if (v.is_string()) out.push_back(v.get<std::string>());
  }
  return out;
}

}  // namespace

std::string_view RelationName(Relation relation) {
  switch (relation) {
    case Relation::kUsedFor: return "UsedFor";
    case Relation::kReceivesAction: return "ReceivesAction";
    case Relation::kCapableOf: return "CapableOf";
  }
  return "UsedFor";
}

std::optional<Relation> ParseRelation(std::string_view name) {
  for (Relation r : kAllRelations) {
    if (RelationName(r) == name) return r;
  }
  return std::nullopt;
}

std::set<Relation> DefaultRelations() {
  return {Relation::kUsedFor, Relation::kReceivesAction};
}

absl::StatusOr<std::set<Relation>> ParseRelationList(std::string_view csv) {
  std::set<Relation> relations;
  size_t pos = 0;
  while (pos <= csv.size()) {
    size_t comma = csv.find(',', pos);
    if (comma == std::string_view::npos) comma = csv.size();
    std::string name = JoinWords(SplitWords(csv.substr(pos, comma - pos)));
    pos = comma + 1;
    if (name.empty()) continue;
    auto relation = ParseRelation(name);
    if (!relation) {
      return absl::InvalidArgumentError(fmt::format(
          "unknown relation '{}' (expected UsedFor, ReceivesAction or "
          "CapableOf)",
          name));
    }
    relations.insert(*relation);
  }
  if (relations.empty()) {
    return absl::InvalidArgumentError("relation list is empty");
  }
  return relations;
}

std::string_view EdgeSourceName(EdgeSource source) {
  switch (source) {
    case EdgeSource::kLiveApi: return "live_api";
    case EdgeSource::kSnapshot: return "snapshot";
    case EdgeSource::kCache: return "cache";
  }
  return "snapshot";
}

std::string UtcNow() {
  std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buffer[32];
  std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buffer;
}

// Snapshot ------------------------------------------------------------------

absl::StatusOr<Snapshot> Snapshot::Parse(std::string_view content,
                                         std::string_view name) {
  Snapshot snapshot;
  int line_number = 0;
  bool have_manifest = false;
  size_t pos = 0;
  while (pos < content.size()) {
    size_t end = content.find('\n', pos);
    if (end == std::string_view::npos) end = content.size();
    std::string_view line = content.substr(pos, end - pos);
    pos = end + 1;
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    Json record;
    try {
      record = Json::parse(line);
    } catch (const Json::exception& e) {
      return absl::DataLossError(
          fmt::format("{}:{}: {}", name, line_number, e.what()));
    }
    if (!have_manifest) {
      auto m = record.find("manifest");
      if (m == record.end() || !m->is_object()) {
        return absl::DataLossError(
            fmt::format("{}:{}: first record must be the manifest", name,
                        line_number));
      }
      SnapshotManifest& manifest = snapshot.manifest_;
      manifest.version = m->value("version", 0);
      if (manifest.version != 1) {
        return absl::DataLossError(fmt::format(
            "{}: unsupported snapshot version {}", name, manifest.version));
      }
      manifest.built_at = m->value("built_at", "");
      manifest.api_base = m->value("api_base", "");
      manifest.page_limit = m->value("page_limit", 0);
      manifest.max_pages = m->value("max_pages", 0);
      manifest.relations = StringArray(m->value("relations", Json::array()));
      manifest.terms = StringArray(m->value("terms", Json::array()));
      manifest.failed_terms =
          StringArray(m->value("failed_terms", Json::array()));
      snapshot.terms_.insert(manifest.terms.begin(), manifest.terms.end());
      have_manifest = true;
      continue;
    }
    KnowledgeEdge edge;
    try {
      edge.subject = record.at("subject").get<std::string>();
      auto relation = ParseRelation(record.at("relation").get<std::string>());
      if (!relation) throw std::invalid_argument("unknown relation");
      edge.relation = *relation;
      edge.tail_text = record.at("tail").get<std::string>();
      edge.weight = record.at("weight").get<double>();
    } catch (const std::exception& e) {
      return absl::DataLossError(
          fmt::format("{}:{}: bad edge record: {}", name, line_number,
                      e.what()));
    }
    edge.source = EdgeSource::kSnapshot;
    if (absl::Status s = CheckEdge(edge); !s.ok()) {
      return absl::DataLossError(
          fmt::format("{}:{}: {}", name, line_number, StatusText(s)));
    }
    snapshot.terms_.insert(edge.subject);
    snapshot.edges_[{edge.subject, edge.relation}].push_back(std::move(edge));
  }
  if (!have_manifest) {
    return absl::DataLossError(fmt::format("{}: snapshot has no manifest", name));
  }
  return snapshot;
}

absl::StatusOr<Snapshot> Snapshot::Load(const std::string& path) {
  auto content = ReadFile(path);
  if (!content.ok()) return content.status();
  return Parse(*content, path);
}

absl::StatusOr<std::vector<KnowledgeEdge>> Snapshot::Fetch(
    const std::string& term, Relation relation) {
  auto it = edges_.find({term, relation});
  if (it == edges_.end()) return std::vector<KnowledgeEdge>{};
  return it->second;
}

bool Snapshot::Covers(const std::string& term) const {
  return terms_.count(term) > 0;
}

size_t Snapshot::edge_count() const {
  size_t n = 0;
  for (const auto& [key, edges] : edges_) n += edges.size();
  return n;
}

std::string SerializeSnapshot(
    const SnapshotManifest& manifest,
    const std::map<std::pair<std::string, Relation>,
                   std::vector<KnowledgeEdge>>& answers) {
  OrderedJson m;
  m["format"] = "affordex-snapshot";
  m["version"] = manifest.version;
  m["built_at"] = manifest.built_at;
  m["api_base"] = manifest.api_base;
  m["page_limit"] = manifest.page_limit;
  m["max_pages"] = manifest.max_pages;
  m["language"] = "en";
  m["relations"] = manifest.relations;
  m["terms"] = manifest.terms;
  m["failed_terms"] = manifest.failed_terms;
  OrderedJson head;
  head["manifest"] = std::move(m);
  std::string out = head.dump();
  out.push_back('\n');
  for (const auto& [key, edges] : answers) {
    for (const auto& edge : edges) {
      OrderedJson record;
      record["subject"] = edge.subject;
      record["relation"] = std::string(RelationName(edge.relation));
      record["tail"] = edge.tail_text;
      record["weight"] = edge.weight;
      out += record.dump();
      out.push_back('\n');
    }
  }
  return out;
}

absl::StatusOr<SnapshotManifest> BuildSnapshot(
    KnowledgeSource& source, const std::vector<std::string>& terms,
    const std::string& out_path, const SnapshotBuildOptions& options) {
  SnapshotManifest manifest;
  manifest.built_at = options.clock();
  manifest.api_base = options.api_base;
  manifest.page_limit = options.page_limit;
  manifest.max_pages = options.max_pages;
  for (Relation r : kAllRelations) {
    manifest.relations.emplace_back(RelationName(r));
  }
  std::set<std::string> unique(terms.begin(), terms.end());
  std::map<std::pair<std::string, Relation>, std::vector<KnowledgeEdge>>
      answers;
  for (const auto& term : unique) {
    if (term.empty()) continue;
    std::map<std::pair<std::string, Relation>, std::vector<KnowledgeEdge>>
        fetched;
    bool failed = false;
    for (Relation r : kAllRelations) {
      auto edges = source.Fetch(term, r);
      if (!edges.ok()) {
        failed = true;
        break;
      }
      fetched[{term, r}] = *std::move(edges);
    }
    if (failed) {
      manifest.failed_terms.push_back(term);
      continue;
    }
    manifest.terms.push_back(term);
    answers.merge(fetched);
  }
  absl::Status written =
      WriteFile(out_path, SerializeSnapshot(manifest, answers));
  if (!written.ok()) return written;
  return manifest;
}

// EdgeCache -----------------------------------------------------------------

absl::Status EdgeCache::Open() {
  if (path_.empty()) return absl::OkStatus();
  auto content = ReadFile(path_);
  if (!content.ok()) {
    return absl::IsNotFound(content.status()) ? absl::OkStatus()
                                              : content.status();
  }
  std::lock_guard<std::mutex> lock(mu_);
  int line_number = 0;
  size_t pos = 0;
  const std::string& text = *content;
  while (pos < text.size()) {
    size_t end = text.find('\n', pos);
    bool complete = end != std::string::npos;
    if (!complete) end = text.size();
    std::string_view line(text.data() + pos, end - pos);
    size_t line_start = pos;
    pos = end + 1;
    ++line_number;
    if (line.empty()) continue;
    try {
      if (!complete && !Json::accept(line)) {
        // The remnant of an interrupted append.
        std::error_code ec;
        std::filesystem::resize_file(path_, line_start, ec);
        if (ec) {
          return absl::InternalError(
              fmt::format("cannot truncate {}: {}", path_, ec.message()));
        }
        break;
      }
      Json record = Json::parse(line);
      std::string term = record.at("term").get<std::string>();
      auto relation = ParseRelation(record.at("relation").get<std::string>());
      auto origin = ParseEdgeSource(record.value("source", "live_api"));
      if (!relation || !origin) throw std::invalid_argument("bad key");
      Entry entry;
      entry.fetched_at = record.value("fetched_at", "");
      entry.origin = *origin;
      for (const auto& e : record.at("edges")) {
        KnowledgeEdge edge;
        edge.subject = term;
        edge.relation = *relation;
        edge.tail_text = e.at("tail").get<std::string>();
        edge.weight = e.at("weight").get<double>();
        edge.source = EdgeSource::kCache;
        entry.edges.push_back(std::move(edge));
      }
      entries_[{term, *relation}] = std::move(entry);
      if (!complete) {
        absl::Status s = AppendLineDurably(path_, "");
        if (!s.ok()) return s;
      }
    } catch (const std::exception& e) {
      return absl::DataLossError(
          fmt::format("{}:{}: bad cache record: {}", path_, line_number,
                      e.what()));
    }
  }
  return absl::OkStatus();
}

std::optional<EdgeCache::Entry> EdgeCache::Lookup(const std::string& term,
                                                  Relation relation) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = entries_.find({term, relation});
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

absl::Status EdgeCache::Store(const std::string& term, Relation relation,
                              Entry entry) {
  std::lock_guard<std::mutex> lock(mu_);
  if (!path_.empty()) {
    OrderedJson record;
    record["term"] = term;
    record["relation"] = std::string(RelationName(relation));
    record["fetched_at"] = entry.fetched_at;
    record["source"] = std::string(EdgeSourceName(entry.origin));
    OrderedJson edges = OrderedJson::array();
    for (const auto& edge : entry.edges) {
      OrderedJson e;
      e["tail"] = edge.tail_text;
      e["weight"] = edge.weight;
      edges.push_back(std::move(e));
    }
    record["edges"] = std::move(edges);
    absl::Status s = AppendLineDurably(path_, record.dump());
    if (!s.ok()) return s;
  }
  for (auto& edge : entry.edges) edge.source = EdgeSource::kCache;
  entries_[{term, relation}] = std::move(entry);
  return absl::OkStatus();
}

size_t EdgeCache::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return entries_.size();
}

// KnowledgeClient -------------------------------------------------------------

KnowledgeClient::KnowledgeClient(std::unique_ptr<KnowledgeSource> source,
                                 std::unique_ptr<EdgeCache> cache, Clock clock)
    : source_(std::move(source)),
      cache_(std::move(cache)),
      clock_(std::move(clock)) {}

absl::StatusOr<std::vector<KnowledgeEdge>> KnowledgeClient::Answer(
    const std::string& term, Relation relation) {
  if (cache_) {
    if (auto hit = cache_->Lookup(term, relation)) return hit->edges;
  }
  std::lock_guard<std::mutex> lock(fetch_mu_);
  if (cache_) {
    if (auto hit = cache_->Lookup(term, relation)) return hit->edges;
  }
  auto fetched = source_->Fetch(term, relation);
  if (!fetched.ok()) return fetched.status();
  if (cache_) {
    EdgeCache::Entry entry;
    entry.edges = *fetched;
    entry.fetched_at = clock_();
    entry.origin = fetched->empty() ? EdgeSource::kLiveApi
                                    : fetched->front().source;
    absl::Status stored = cache_->Store(term, relation, std::move(entry));
    if (!stored.ok()) return stored;
  }
  return fetched;
}

absl::StatusOr<std::vector<KnowledgeEdge>> KnowledgeClient::QueryEdges(
    const std::string& term, const std::set<Relation>& relations,
    double min_weight) {
  if (term.empty()) return absl::InvalidArgumentError("empty query term");
  std::vector<KnowledgeEdge> out;
  for (Relation relation : kAllRelations) {
    if (!relations.count(relation)) continue;
    auto edges = Answer(term, relation);
    if (!edges.ok()) {
      return absl::Status(
          edges.status().code(),
          fmt::format("query for '{}' ({}) failed: {}", term,
                      RelationName(relation), StatusText(edges.status())));
    }
    for (auto& edge : *edges) {
      if (edge.weight >= min_weight) out.push_back(std::move(edge));
    }
  }
  return out;
}

// PatternParser ---------------------------------------------------------------

bool PatternParser::IsVerbToken(const std::string& word) const {
  if (stopwords_.Contains(word) || !verbs_.IsVerbal(word)) return false;
  return verbs_.verbs().Contains(word) || !nouns_.Contains(word);
}

absl::StatusOr<AffordancePattern> PatternParser::Parse(
    const KnowledgeEdge& edge) const {
  std::vector<WordToken> tokens = TokenizeWords(edge.tail_text);
  size_t first = 0;
  while (first + 1 < tokens.size() &&
         (tokens[first].text == "to" || tokens[first].text == "be" ||
          tokens[first].text == "being" || tokens[first].text == "been")) {
    ++first;
  }
  if (first >= tokens.size() || !IsVerbToken(tokens[first].text)) {
    return absl::InvalidArgumentError(
        fmt::format("non-verbal tail '{}' for ({}, {})", edge.tail_text,
                    edge.subject, RelationName(edge.relation)));
  }
  AffordancePattern pattern;
  pattern.verb_phrase = tokens[first].text;
  pattern.relation = edge.relation;
  pattern.origin = edge;
  for (size_t i = first + 1; i < tokens.size(); ++i) {
    const std::string& word = tokens[i].text;
    if (word.size() < 2 || stopwords_.Contains(word) ||
        !nouns_.Contains(word) || word == edge.subject) {
      continue;
    }
    if (std::find(pattern.extra_nouns.begin(), pattern.extra_nouns.end(),
                  word) == pattern.extra_nouns.end()) {
      pattern.extra_nouns.push_back(word);
    }
  }
  return pattern;
}

}  // namespace affordex
