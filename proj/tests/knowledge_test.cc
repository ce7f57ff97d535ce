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

#include <atomic>
#include <map>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "affordex/io.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace affordex {
namespace {

using ::testing::ElementsAre;
using testing::Resources;

KnowledgeEdge Edge(std::string subject, Relation relation, std::string tail,
                   double weight, EdgeSource source = EdgeSource::kLiveApi) {
  KnowledgeEdge e;
  e.subject = std::move(subject);
  e.relation = relation;
  e.tail_text = std::move(tail);
  e.weight = weight;
  e.source = source;
  return e;
}

// Answers from a fixed table, counting calls; terms in `failing` report a
// transport error.
class FakeSource : public KnowledgeSource {
 public:
  void Add(const KnowledgeEdge& e) {
    table_[{e.subject, e.relation}].push_back(e);
  }
  std::set<std::string> failing;
  std::atomic<int> calls{0};

  absl::StatusOr<std::vector<KnowledgeEdge>> Fetch(const std::string& term,
                                                   Relation relation) override {
    ++calls;
    if (failing.count(term)) return absl::UnavailableError("connection reset");
    auto it = table_.find({term, relation});
    if (it == table_.end()) return std::vector<KnowledgeEdge>{};
    return it->second;
  }

 private:
  std::map<std::pair<std::string, Relation>, std::vector<KnowledgeEdge>> table_;
};

std::unique_ptr<FakeSource> DoorSource() {
  auto source = std::make_unique<FakeSource>();
  source->Add(Edge("door", Relation::kReceivesAction, "opened", 2.0));
  source->Add(Edge("door", Relation::kReceivesAction, "closed", 1.0));
  source->Add(Edge("door", Relation::kReceivesAction, "painted", 0.5));
  source->Add(Edge("door", Relation::kUsedFor, "entering a house", 1.0));
  source->Add(Edge("door", Relation::kCapableOf, "squeak", 1.0));
  return source;
}

std::string FixedClock() { return "2026-10-14T00:00:00Z"; }

TEST(RelationTest, NamesRoundTrip) {
  for (Relation r : kAllRelations) {
    EXPECT_EQ(ParseRelation(RelationName(r)), r);
  }
  EXPECT_EQ(RelationName(Relation::kReceivesAction), "ReceivesAction");
  EXPECT_FALSE(ParseRelation("IsA").has_value());
}

TEST(RelationTest, DefaultsExcludeCapableOf) {
  EXPECT_EQ(DefaultRelations(),
            (std::set<Relation>{Relation::kUsedFor, Relation::kReceivesAction}));
}

TEST(RelationTest, ParseRelationList) {
  auto all = ParseRelationList("UsedFor,ReceivesAction,CapableOf");
  ASSERT_TRUE(all.ok());
  EXPECT_EQ(all->size(), 3u);
  EXPECT_EQ(*ParseRelationList("CapableOf"),
            std::set<Relation>{Relation::kCapableOf});
  EXPECT_EQ(ParseRelationList("UsedFor,IsA").status().code(),
            absl::StatusCode::kInvalidArgument);
  EXPECT_EQ(ParseRelationList("").status().code(),
            absl::StatusCode::kInvalidArgument);
}

TEST(KnowledgeClientTest, FiltersByRelationAndWeight) {
  KnowledgeClient client(DoorSource(), nullptr, FixedClock);
  auto edges = client.QueryEdges(
      "door", {Relation::kReceivesAction}, 1.0);
  ASSERT_TRUE(edges.ok());
  std::vector<std::string> tails;
  for (const auto& e : *edges) tails.push_back(e.tail_text);
  EXPECT_THAT(tails, ElementsAre("opened", "closed"));

  auto defaults = client.QueryEdges("door", DefaultRelations(), 0.0);
  ASSERT_TRUE(defaults.ok());
  ASSERT_EQ(defaults->size(), 4u);
  // Relations come back in a fixed order: UsedFor, then ReceivesAction.
  EXPECT_EQ((*defaults)[0].relation, Relation::kUsedFor);
}

TEST(KnowledgeClientTest, UnknownTermIsEmpty) {
  KnowledgeClient client(DoorSource(), nullptr, FixedClock);
  auto edges = client.QueryEdges("xyzzy", DefaultRelations(), 0.0);
  ASSERT_TRUE(edges.ok());
  EXPECT_TRUE(edges->empty());
  EXPECT_EQ(client.QueryEdges("", DefaultRelations(), 0.0).status().code(),
            absl::StatusCode::kInvalidArgument);
}

TEST(KnowledgeClientTest, TransportErrorsNameTheTerm) {
  auto source = DoorSource();
  source->failing.insert("door");
  KnowledgeClient client(std::move(source), nullptr, FixedClock);
  absl::Status s = client.QueryEdges("door", DefaultRelations(), 0.0).status();
  EXPECT_EQ(s.code(), absl::StatusCode::kUnavailable);
  EXPECT_NE(s.ToString().find("'door'"), std::string::npos);
}

// Raising the weight threshold only ever removes edges.
TEST(KnowledgeClientTest, WeightFilterIsMonotone) {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> weight(0.0, 5.0);
  auto source = std::make_unique<FakeSource>();
  for (int i = 0; i < 40; ++i) {
    source->Add(Edge("box", Relation::kReceivesAction,
                     "tail" + std::to_string(i), weight(rng)));
  }
  KnowledgeClient client(std::move(source), nullptr, FixedClock);
  std::set<std::string> previous;
  bool first = true;
  for (double t = 0.0; t <= 5.5; t += 0.25) {
    auto edges = client.QueryEdges("box", DefaultRelations(), t);
    ASSERT_TRUE(edges.ok());
    std::set<std::string> tails;
    for (const auto& e : *edges) {
      EXPECT_GE(e.weight, t);
      tails.insert(e.tail_text);
    }
    if (!first) {
      EXPECT_TRUE(std::includes(previous.begin(), previous.end(),
                                tails.begin(), tails.end()));
    }
    previous = tails;
    first = false;
  }
  EXPECT_TRUE(previous.empty());
}

// Answers served from the cache carry the same assertions as a fresh fetch,
// and each key reaches the source once.
TEST(KnowledgeClientTest, CacheIsTransparent) {
  testing::ScratchDir dir;
  std::string path = dir.File("cache.jsonl");

  KnowledgeClient direct(DoorSource(), nullptr, FixedClock);
  auto want = direct.QueryEdges("door", DefaultRelations(), 0.0);
  ASSERT_TRUE(want.ok());

  auto source = DoorSource();
  FakeSource* raw = source.get();
  auto cache = std::make_unique<EdgeCache>(path);
  ASSERT_TRUE(cache->Open().ok());
  KnowledgeClient cached(std::move(source), std::move(cache), FixedClock);
  auto first = cached.QueryEdges("door", DefaultRelations(), 0.0);
  auto second = cached.QueryEdges("door", DefaultRelations(), 0.0);
  ASSERT_TRUE(first.ok() && second.ok());
  EXPECT_EQ(raw->calls.load(), 2);  // UsedFor and ReceivesAction
  ASSERT_EQ(first->size(), want->size());
  for (size_t i = 0; i < want->size(); ++i) {
    EXPECT_TRUE((*first)[i].SameAssertion((*want)[i]));
    EXPECT_TRUE((*second)[i].SameAssertion((*want)[i]));
    EXPECT_EQ((*second)[i].source, EdgeSource::kCache);
  }

  // A new process replays the record file without touching the source.
  auto failing = DoorSource();
  failing->failing.insert("door");
  auto reopened = std::make_unique<EdgeCache>(path);
  ASSERT_TRUE(reopened->Open().ok());
  EXPECT_EQ(reopened->size(), 2u);
  KnowledgeClient replay(std::move(failing), std::move(reopened), FixedClock);
  auto third = replay.QueryEdges("door", DefaultRelations(), 0.0);
  ASSERT_TRUE(third.ok()) << third.status();
  ASSERT_EQ(third->size(), want->size());
  for (size_t i = 0; i < want->size(); ++i) {
    EXPECT_TRUE((*third)[i].SameAssertion((*want)[i]));
  }
}

TEST(KnowledgeClientTest, ConcurrentQueriesFetchOnce) {
  auto source = DoorSource();
  FakeSource* raw = source.get();
  KnowledgeClient client(std::move(source), std::make_unique<EdgeCache>(),
                         FixedClock);
  std::vector<std::thread> threads;
  std::atomic<int> failures{0};
  for (int i = 0; i < 8; ++i) {
    threads.emplace_back([&] {
      for (int k = 0; k < 50; ++k) {
        auto edges = client.QueryEdges("door", DefaultRelations(), 0.0);
        if (!edges.ok() || edges->size() != 4) ++failures;
      }
    });
  }
  for (auto& t : threads) t.join();
  EXPECT_EQ(failures.load(), 0);
  EXPECT_EQ(raw->calls.load(), 2);
}

TEST(EdgeCacheTest, LastRecordWins) {
  testing::ScratchDir dir;
  std::string path = dir.File("cache.jsonl");
  {
    EdgeCache cache(path);
    ASSERT_TRUE(cache.Open().ok());
    EdgeCache::Entry a;
    a.edges = {Edge("box", Relation::kUsedFor, "storing things", 1.0)};
    a.fetched_at = "t1";
    ASSERT_TRUE(cache.Store("box", Relation::kUsedFor, a).ok());
    EdgeCache::Entry b;
    b.fetched_at = "t2";
    ASSERT_TRUE(cache.Store("box", Relation::kUsedFor, b).ok());
  }
  EdgeCache cache(path);
  ASSERT_TRUE(cache.Open().ok());
  auto hit = cache.Lookup("box", Relation::kUsedFor);
  ASSERT_TRUE(hit.has_value());
  EXPECT_TRUE(hit->edges.empty());
  EXPECT_EQ(hit->fetched_at, "t2");
  EXPECT_FALSE(cache.Lookup("box", Relation::kReceivesAction).has_value());
}

// An interrupted append leaves a partial last record. Reopening drops it and
// later records land on their own lines.
TEST(EdgeCacheTest, TornFinalRecordIsDropped) {
  testing::ScratchDir dir;
  std::string path = dir.File("cache.jsonl");
  EdgeCache::Entry entry;
  entry.edges = {Edge("box", Relation::kUsedFor, "storing things", 1.0)};
  entry.fetched_at = "t1";
  {
    EdgeCache cache(path);
    ASSERT_TRUE(cache.Open().ok());
    ASSERT_TRUE(cache.Store("box", Relation::kUsedFor, entry).ok());
  }
  std::string intact = testing::Slurp(path);
  ASSERT_TRUE(WriteFile(path, intact + "{\"term\":\"lamp\",\"rel").ok());
  {
    EdgeCache cache(path);
    ASSERT_TRUE(cache.Open().ok());
    EXPECT_EQ(cache.size(), 1u);
    EXPECT_EQ(testing::Slurp(path), intact);
    ASSERT_TRUE(cache.Store("lamp", Relation::kUsedFor, entry).ok());
  }
  EdgeCache cache(path);
  ASSERT_TRUE(cache.Open().ok());
  EXPECT_EQ(cache.size(), 2u);
  EXPECT_TRUE(cache.Lookup("lamp", Relation::kUsedFor).has_value());
}

TEST(EdgeCacheTest, MissingFileIsEmptyAndGarbageIsDataLoss) {
  testing::ScratchDir dir;
  EdgeCache missing(dir.File("none.jsonl"));
  EXPECT_TRUE(missing.Open().ok());
  EXPECT_EQ(missing.size(), 0u);
  ASSERT_TRUE(WriteFile(dir.File("bad.jsonl"), "{\"term\":1}\n").ok());
  EdgeCache bad(dir.File("bad.jsonl"));
  EXPECT_EQ(bad.Open().code(), absl::StatusCode::kDataLoss);
}

TEST(SnapshotTest, BuildParseAndServe) {
  testing::ScratchDir dir;
  auto source = DoorSource();
  source->failing.insert("mailbox");
  SnapshotBuildOptions options;
  options.api_base = "http://example.test";
  options.page_limit = 1000;
  options.max_pages = 5;
  options.clock = FixedClock;
  auto manifest = BuildSnapshot(*source, {"door", "mailbox", "door", "lamp"},
                                dir.File("s.jsonl"), options);
  ASSERT_TRUE(manifest.ok());
  EXPECT_THAT(manifest->terms, ElementsAre("door", "lamp"));
  EXPECT_THAT(manifest->failed_terms, ElementsAre("mailbox"));
  EXPECT_THAT(manifest->relations,
              ElementsAre("UsedFor", "ReceivesAction", "CapableOf"));

  auto snapshot = Snapshot::Load(dir.File("s.jsonl"));
  ASSERT_TRUE(snapshot.ok()) << snapshot.status();
  EXPECT_EQ(snapshot->manifest(), *manifest);
  EXPECT_EQ(snapshot->edge_count(), 5u);
  EXPECT_TRUE(snapshot->Covers("lamp"));
  EXPECT_FALSE(snapshot->Covers("mailbox"));
  auto edges = snapshot->Fetch("door", Relation::kReceivesAction);
  ASSERT_TRUE(edges.ok());
  ASSERT_EQ(edges->size(), 3u);
  EXPECT_EQ((*edges)[0].tail_text, "opened");  // source order is kept
  EXPECT_EQ((*edges)[0].source, EdgeSource::kSnapshot);

  // Rebuilding against the same answers yields the same bytes.
  auto again = BuildSnapshot(*source, {"lamp", "door", "mailbox"},
                             dir.File("t.jsonl"), options);
  ASSERT_TRUE(again.ok());
  EXPECT_EQ(testing::Slurp(dir.File("s.jsonl")),
            testing::Slurp(dir.File("t.jsonl")));
}

TEST(SnapshotTest, BundledSnapshotsLoad) {
  for (const char* name : {"jericho/snapshot.jsonl", "textworld/snapshot.jsonl"}) {
    auto snapshot = Snapshot::Load(testing::FixturePath(name));
    ASSERT_TRUE(snapshot.ok()) << snapshot.status();
    EXPECT_GT(snapshot->edge_count(), 100u);
    EXPECT_TRUE(snapshot->manifest().failed_terms.empty());
  }
}

TEST(SnapshotTest, RejectsMalformedFiles) {
  EXPECT_EQ(Snapshot::Parse("", "s").status().code(),
            absl::StatusCode::kDataLoss);
  EXPECT_EQ(Snapshot::Parse("{\"subject\":\"x\"}\n", "s").status().code(),
            absl::StatusCode::kDataLoss);
  EXPECT_EQ(Snapshot::Parse("{\"manifest\":{\"version\":2}}\n", "s")
                .status()
                .code(),
            absl::StatusCode::kDataLoss);
  EXPECT_EQ(Snapshot::Parse("{\"manifest\":{\"version\":1}}\n"
                            "{\"subject\":\"x\",\"relation\":\"IsA\","
                            "\"tail\":\"y\",\"weight\":1}\n",
                            "s")
                .status()
                .code(),
            absl::StatusCode::kDataLoss);
}

TEST(SnapshotTest, ClientServesSnapshotEdges) {
  auto snapshot = Snapshot::Load(testing::FixturePath("jericho/snapshot.jsonl"));
  ASSERT_TRUE(snapshot.ok());
  KnowledgeClient client(std::make_unique<Snapshot>(*std::move(snapshot)),
                         nullptr, FixedClock);
  auto edges = client.QueryEdges("glasses", {Relation::kReceivesAction}, 0.0);
  ASSERT_TRUE(edges.ok());
  std::vector<std::string> tails;
  for (const auto& e : *edges) tails.push_back(e.tail_text);
  EXPECT_THAT(tails, ElementsAre("filled", "needed", "worn"));
}

class PatternParserTest : public ::testing::Test {
 protected:
  PatternParser parser_ = Resources().MakePatternParser();
};

TEST_F(PatternParserTest, UsedForWithObject) {
  auto p = parser_.Parse(Edge("knife", Relation::kUsedFor, "slicing bread", 1));
  ASSERT_TRUE(p.ok()) << p.status();
  EXPECT_EQ(p->verb_phrase, "slicing");
  EXPECT_THAT(p->extra_nouns, ElementsAre("bread"));
  EXPECT_EQ(p->relation, Relation::kUsedFor);
  EXPECT_EQ(p->origin.tail_text, "slicing bread");
}

TEST_F(PatternParserTest, ReceivesActionParticiple) {
  auto p = parser_.Parse(Edge("door", Relation::kReceivesAction, "opened", 1));
  ASSERT_TRUE(p.ok());
  EXPECT_EQ(p->verb_phrase, "opened");
  EXPECT_TRUE(p->extra_nouns.empty());
}

TEST_F(PatternParserTest, LeadingAuxiliariesAreSkipped) {
  auto p = parser_.Parse(
      Edge("cake", Relation::kReceivesAction, "to be eaten", 1));
  ASSERT_TRUE(p.ok());
  EXPECT_EQ(p->verb_phrase, "eaten");
}

TEST_F(PatternParserTest, NonVerbalTailIsRejected) {
  auto p = parser_.Parse(Edge("knife", Relation::kReceivesAction, "sharp", 1));
  EXPECT_EQ(p.status().code(), absl::StatusCode::kInvalidArgument);
  EXPECT_NE(p.status().ToString().find("sharp"), std::string::npos);
  EXPECT_FALSE(parser_.Parse(Edge("x", Relation::kUsedFor, "", 1)).ok());
}

TEST_F(PatternParserTest, ExtraNounsSkipSubjectAndRepeats) {
  auto p = parser_.Parse(Edge("knife", Relation::kUsedFor,
                              "cutting bread and cheese with a knife, bread", 1));
  ASSERT_TRUE(p.ok());
  EXPECT_THAT(p->extra_nouns, ElementsAre("bread", "cheese"));
}

}  // namespace
}  // namespace affordex
