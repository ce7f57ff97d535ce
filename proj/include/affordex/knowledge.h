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

// Commonsense knowledge lookups. A KnowledgeSource answers one (term,
// relation) question; the KnowledgeClient layers the record cache, weight
// filtering and relation selection on top. Sources are pluggable: the
// ConceptNet HTTP client and the offline snapshot are the two provided.

#ifndef AFFORDEX_KNOWLEDGE_H_
#define AFFORDEX_KNOWLEDGE_H_

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "affordex/morphology.h"

namespace affordex {

enum class Relation { kUsedFor, kReceivesAction, kCapableOf };

inline constexpr Relation kAllRelations[] = {
    Relation::kUsedFor, Relation::kReceivesAction, Relation::kCapableOf};

std::string_view RelationName(Relation relation);
std::optional<Relation> ParseRelation(std::string_view name);

// {UsedFor, ReceivesAction}; CapableOf is opt-in.
std::set<Relation> DefaultRelations();

// Parses "UsedFor,ReceivesAction".
absl::StatusOr<std::set<Relation>> ParseRelationList(std::string_view csv);

enum class EdgeSource { kLiveApi, kSnapshot, kCache };

std::string_view EdgeSourceName(EdgeSource source);

struct KnowledgeEdge {
  std::string subject;
  Relation relation = Relation::kUsedFor;
  std::string tail_text;
  double weight = 0.0;
  EdgeSource source = EdgeSource::kSnapshot;

  // Equality of the assertion itself, ignoring where it was served from.
  bool SameAssertion(const KnowledgeEdge& other) const {
    return subject == other.subject && relation == other.relation &&
           tail_text == other.tail_text && weight == other.weight;
  }
  bool operator==(const KnowledgeEdge&) const = default;
};

// Answers for one term and relation, in source order.
class KnowledgeSource {
 public:
  virtual ~KnowledgeSource() = default;

  // Unavailable errors signal transport problems; an unknown term is an
  // empty answer, not an error.
  virtual absl::StatusOr<std::vector<KnowledgeEdge>> Fetch(
      const std::string& term, Relation relation) = 0;
};

struct SnapshotManifest {
  int version = 1;
  std::string built_at;
  std::string api_base;
  int page_limit = 0;
  int max_pages = 0;
  std::vector<std::string> relations;
  std::vector<std::string> terms;
  std::vector<std::string> failed_terms;

  bool operator==(const SnapshotManifest&) const = default;
};

// Frozen answers loaded from a snapshot file: a manifest line followed by
// one edge record per line. Read-only after load; safe to share.
class Snapshot : public KnowledgeSource {
 public:
  Snapshot() = default;

  static absl::StatusOr<Snapshot> Parse(std::string_view content,
                                        std::string_view name);
  static absl::StatusOr<Snapshot> Load(const std::string& path);

  absl::StatusOr<std::vector<KnowledgeEdge>> Fetch(const std::string& term,
                                                   Relation relation) override;

  const SnapshotManifest& manifest() const { return manifest_; }
  bool Covers(const std::string& term) const;
  size_t edge_count() const;

 private:
  SnapshotManifest manifest_;
  std::set<std::string> terms_;
  std::map<std::pair<std::string, Relation>, std::vector<KnowledgeEdge>> edges_;
};

// Serializes a snapshot. Everything after the first (manifest) line depends
// only on the answers, so two builds against the same server agree byte for
// byte below the manifest.
std::string SerializeSnapshot(
    const SnapshotManifest& manifest,
    const std::map<std::pair<std::string, Relation>,
                   std::vector<KnowledgeEdge>>& answers);

// Append-only store of fetched answers keyed by (term, relation); a later
// record for the same key replaces an earlier one. Without a path the cache
// lives in memory only. Lookups and appends may come from several threads;
// writes are serialized internally.
class EdgeCache {
 public:
  struct Entry {
    std::vector<KnowledgeEdge> edges;
    std::string fetched_at;
    EdgeSource origin = EdgeSource::kLiveApi;
  };

  EdgeCache() = default;
  explicit EdgeCache(std::string path) : path_(std::move(path)) {}

  // Replays the record file, if any. A missing file is an empty cache; a
  // torn final record left by an interrupted append is dropped.
  absl::Status Open();

  std::optional<Entry> Lookup(const std::string& term, Relation relation) const;
  absl::Status Store(const std::string& term, Relation relation, Entry entry);
  size_t size() const;

 private:
  std::string path_;
  mutable std::mutex mu_;
  std::map<std::pair<std::string, Relation>, Entry> entries_;
};

using Clock = std::function<std::string()>;

// UTC time as "2026-10-14T08:30:00Z".
std::string UtcNow();

// Pairs a source with a cache. QueryEdges is safe to call concurrently.
class KnowledgeClient {
 public:
  // `cache` may be null (no caching). When `source` is a Snapshot, answers
  // are served directly and marked as snapshot edges.
  KnowledgeClient(std::unique_ptr<KnowledgeSource> source,
                  std::unique_ptr<EdgeCache> cache, Clock clock = UtcNow);

  // Edges about `term` whose relation is in `relations` and whose weight is
  // at least `min_weight`. Transport failures come back as Unavailable
  // errors naming the term.
  absl::StatusOr<std::vector<KnowledgeEdge>> QueryEdges(
      const std::string& term, const std::set<Relation>& relations,
      double min_weight);

  EdgeCache* cache() { return cache_.get(); }

 private:
  absl::StatusOr<std::vector<KnowledgeEdge>> Answer(const std::string& term,
                                                    Relation relation);

  std::unique_ptr<KnowledgeSource> source_;
  std::unique_ptr<EdgeCache> cache_;
  Clock clock_;
  std::mutex fetch_mu_;
};

// Queries every relation for every term through `source` and writes a
// snapshot. Terms whose lookup fails are listed in the manifest's
// failed_terms and contribute no edges; the file is still written.
struct SnapshotBuildOptions {
  std::string api_base;
  int page_limit = 0;
  int max_pages = 0;
  Clock clock = UtcNow;
};

absl::StatusOr<SnapshotManifest> BuildSnapshot(
    KnowledgeSource& source, const std::vector<std::string>& terms,
    const std::string& out_path, const SnapshotBuildOptions& options);

// A knowledge-base edge read as an affordance: the leading verb of the tail
// and any further nouns, which name objects the action needs.
struct AffordancePattern {
  std::string verb_phrase;
  std::vector<std::string> extra_nouns;
  Relation relation = Relation::kUsedFor;
  KnowledgeEdge origin;
};

class PatternParser {
 public:
  // The word lists must outlive the parser.
  PatternParser(const VerbNormalizer& verbs, const WordList& nouns,
                const WordList& stopwords)
      : verbs_(verbs), nouns_(nouns), stopwords_(stopwords) {}

  // Fails with InvalidArgument when the tail does not start with a verb
  // ("sharp").
  absl::StatusOr<AffordancePattern> Parse(const KnowledgeEdge& edge) const;

 private:
  bool IsVerbToken(const std::string& word) const;

  const VerbNormalizer& verbs_;
  const WordList& nouns_;
  const WordList& stopwords_;
};

}  // namespace affordex

#endif  // AFFORDEX_KNOWLEDGE_H_
