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

#include "affordex/conceptnet.h"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "fmt/format.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "httplib.h"
#include "json.hpp"
#include "test_util.h"

namespace affordex {
namespace {

using ::testing::ElementsAre;
using Json = nlohmann::json;

Json EdgeJson(const std::string& label, const std::string& lang,
              std::optional<double> weight) {
  Json end = {{"@id", fmt::format("/c/{}/{}", lang, label)},
              {"label", label},
              {"language", lang}};
  Json edge = {{"end", end}};
  if (weight) edge["weight"] = *weight;
  return edge;
}

// A local stand-in for the ConceptNet /query endpoint. "door" has five
// ReceivesAction answers served two per page; "broken" answers HTTP 500.
class FakeConceptNet {
 public:
  explicit FakeConceptNet(std::string prefix = "") : prefix_(prefix) {
    server_.Get(prefix + "/query", [this](const httplib::Request& req,
                                          httplib::Response& res) {
      ++requests;
      std::string start = req.get_param_value("start");
      std::string rel = req.get_param_value("rel");
      int offset = req.has_param("offset")
                       ? std::stoi(req.get_param_value("offset"))
                       : 0;
      if (start == "/c/en/broken") {
        res.status = 500;
        return;
      }
      std::vector<Json> all;
      if (start == "/c/en/door" && rel == "/r/ReceivesAction") {
        all = {EdgeJson("opened", "en", 2.0), EdgeJson("geoeffnet", "de", 1.0),
               EdgeJson("closed", "en", std::nullopt),
               EdgeJson("eaten", "en", -1.0), EdgeJson("locked", "en", 1.5)};
      }
      Json page = {{"edges", Json::array()}};
      for (int i = offset; i < offset + 2 && i < static_cast<int>(all.size());
           ++i) {
        page["edges"].push_back(all[i]);
      }
      if (offset + 2 < static_cast<int>(all.size())) {
        page["view"] = {{"nextPage",
                         fmt::format("{}/query?start={}&rel={}&offset={}",
                                     prefix_, start, rel, offset + 2)}};
      }
      res.set_content(page.dump(), "application/json");
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~FakeConceptNet() {
    server_.stop();
    thread_.join();
  }

  std::string base() const {
    return fmt::format("http://127.0.0.1:{}{}", port_, prefix_);
  }
  std::atomic<int> requests{0};

 private:
  std::string prefix_;
  httplib::Server server_;
  int port_ = 0;
  std::thread thread_;
};

ConceptNetOptions Options(const std::string& base) {
  ConceptNetOptions o;
  o.api_base = base;
  o.rate_limit_ms = 0;
  o.timeout_seconds = 5;
  return o;
}

std::vector<std::string> Tails(const std::vector<KnowledgeEdge>& edges) {
  std::vector<std::string> tails;
  for (const auto& e : edges) tails.push_back(e.tail_text);
  return tails;
}

TEST(ConceptNetTest, FollowsPagesAndKeepsEnglishEdges) {
  FakeConceptNet server;
  ConceptNetSource source(Options(server.base()));
  auto edges = source.Fetch("door", Relation::kReceivesAction);
  ASSERT_TRUE(edges.ok()) << edges.status();
  EXPECT_THAT(Tails(*edges), ElementsAre("opened", "closed", "locked"));
  EXPECT_EQ(server.requests.load(), 3);
  EXPECT_EQ((*edges)[0].weight, 2.0);
  EXPECT_EQ((*edges)[1].weight, 1.0);  // missing weight
  for (const auto& e : *edges) {
    EXPECT_EQ(e.subject, "door");
    EXPECT_EQ(e.relation, Relation::kReceivesAction);
    EXPECT_EQ(e.source, EdgeSource::kLiveApi);
  }
}

TEST(ConceptNetTest, StopsAtMaxPages) {
  FakeConceptNet server;
  ConceptNetOptions options = Options(server.base());
  options.max_pages = 1;
  ConceptNetSource source(options);
  auto edges = source.Fetch("door", Relation::kReceivesAction);
  ASSERT_TRUE(edges.ok());
  EXPECT_THAT(Tails(*edges), ElementsAre("opened"));
  EXPECT_EQ(server.requests.load(), 1);
}

TEST(ConceptNetTest, BaseUrlMayCarryAPath) {
  FakeConceptNet server("/api");
  ConceptNetSource source(Options(server.base() + "/"));
  auto edges = source.Fetch("door", Relation::kReceivesAction);
  ASSERT_TRUE(edges.ok()) << edges.status();
  EXPECT_EQ(edges->size(), 3u);
}

TEST(ConceptNetTest, UnknownTermIsEmpty) {
  FakeConceptNet server;
  ConceptNetSource source(Options(server.base()));
  auto edges = source.Fetch("door", Relation::kUsedFor);
  ASSERT_TRUE(edges.ok());
  EXPECT_TRUE(edges->empty());
}

TEST(ConceptNetTest, ServerErrorsAreUnavailable) {
  FakeConceptNet server;
  ConceptNetSource source(Options(server.base()));
  EXPECT_EQ(source.Fetch("broken", Relation::kUsedFor).status().code(),
            absl::StatusCode::kUnavailable);
}

TEST(ConceptNetTest, UnreachableHostIsUnavailable) {
  int port;
  {
    httplib::Server probe;
    port = probe.bind_to_any_port("127.0.0.1");
  }
  ConceptNetOptions options =
      Options(fmt::format("http://127.0.0.1:{}", port));
  options.timeout_seconds = 1;
  ConceptNetSource source(options);
  EXPECT_EQ(source.Fetch("door", Relation::kUsedFor).status().code(),
            absl::StatusCode::kUnavailable);
}

TEST(ConceptNetTest, RequestsAreRateLimited) {
  FakeConceptNet server;
  ConceptNetOptions options = Options(server.base());
  options.rate_limit_ms = 100;
  ConceptNetSource source(options);
  auto start = std::chrono::steady_clock::now();
  ASSERT_TRUE(source.Fetch("door", Relation::kReceivesAction).ok());
  auto elapsed = std::chrono::steady_clock::now() - start;
  // Three pages, two waits.
  EXPECT_GE(elapsed, std::chrono::milliseconds(200));
}

TEST(ConceptNetTest, ClientWrapsSourceErrors) {
  FakeConceptNet server;
  KnowledgeClient client(
      std::make_unique<ConceptNetSource>(Options(server.base())), nullptr);
  absl::Status s = client.QueryEdges("broken", DefaultRelations(), 0).status();
  EXPECT_EQ(s.code(), absl::StatusCode::kUnavailable);
  EXPECT_NE(s.ToString().find("'broken'"), std::string::npos);
}

TEST(ConceptNetTest, SnapshotRebuildIsByteIdentical) {
  FakeConceptNet server;
  testing::ScratchDir dir;
  SnapshotBuildOptions build;
  build.api_base = server.base();
  build.page_limit = 1000;
  build.max_pages = 5;
  build.clock = [] { return std::string("2026-10-14T00:00:00Z"); };
  for (const char* name : {"a.jsonl", "b.jsonl"}) {
    ConceptNetSource source(Options(server.base()));
    auto manifest =
        BuildSnapshot(source, {"door", "lamp", "broken"}, dir.File(name), build);
    ASSERT_TRUE(manifest.ok());
    EXPECT_THAT(manifest->failed_terms, ElementsAre("broken"));
  }
  EXPECT_EQ(testing::Slurp(dir.File("a.jsonl")),
            testing::Slurp(dir.File("b.jsonl")));
  auto snapshot = Snapshot::Load(dir.File("a.jsonl"));
  ASSERT_TRUE(snapshot.ok());
  EXPECT_EQ(snapshot->edge_count(), 3u);
}

TEST(ConceptNetTest, EnvironmentOverridesBase) {
  unsetenv(kConceptNetUrlEnv);
  EXPECT_EQ(ConceptNetBaseFromEnvironment(), kConceptNetBase);
  setenv(kConceptNetUrlEnv, "http://localhost:8084", 1);
  EXPECT_EQ(ConceptNetBaseFromEnvironment(), "http://localhost:8084");
  unsetenv(kConceptNetUrlEnv);
}

TEST(ConceptNetTest, UrlEncode) {
  EXPECT_EQ(UrlEncode("/c/en/steamer_trunk"), "/c/en/steamer_trunk");
  EXPECT_EQ(UrlEncode("a b&c"), "a%20b%26c");
}

}  // namespace
}  // namespace affordex
