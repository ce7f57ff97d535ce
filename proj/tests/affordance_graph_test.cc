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

#include "affordex/affordance_graph.h"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "test_util.h"

namespace affordex {
namespace {

Affordance Single(std::string verb, std::string object) {
  Affordance a;
  a.verb = std::move(verb);
  a.object = std::move(object);
  return a;
}

Affordance Double(std::string verb, std::string second, std::string prep,
                  std::string object) {
  Affordance a = Single(std::move(verb), std::move(object));
  a.second_object = std::move(second);
  a.preposition = std::move(prep);
  return a;
}

TEST(AffordanceGraphTest, InsertAndQuery) {
  AffordanceGraph graph;
  graph.Insert(Single("open", "door"));
  graph.Insert(Double("slice", "tomato", "with", "knife"));
  graph.Insert(Single("open", "door"));
  EXPECT_EQ(graph.size(), 3u);
  EXPECT_TRUE(graph.Affords("door", "open"));
  EXPECT_TRUE(graph.Affords("knife", "slice"));
  EXPECT_TRUE(graph.Requires("knife", "slice", "tomato"));
  EXPECT_FALSE(graph.Affords("tomato", "slice"));
  EXPECT_FALSE(graph.Requires("knife", "slice", "bread"));
}

TEST(AffordanceGraphTest, SerializesAsNTriples) {
  AffordanceGraph graph;
  graph.Insert(Double("slice", "tomato", "with", "knife"));
  graph.Insert(Single("open", "door"));
  EXPECT_EQ(graph.Serialize(),
            "# affordex affordance graph, version " AFFORDEX_VERSION "\n"
            "<urn:affordex:affordance:knife:slice> <urn:affordex:requires> "
            "<urn:affordex:object:tomato> .\n"
            "<urn:affordex:object:door> <urn:affordex:affords> "
            "<urn:affordex:verb:open> .\n"
            "<urn:affordex:object:knife> <urn:affordex:affords> "
            "<urn:affordex:verb:slice> .\n");
}

TEST(AffordanceGraphTest, RoundTripIsByteIdentical) {
  testing::ScratchDir dir;
  AffordanceGraph graph;
  graph.Insert(Double("slice", "tomato", "with", "knife"));
  graph.Insert(Double("slice", "bread", "with", "knife"));
  graph.Insert(Single("take", "lamp"));
  ASSERT_TRUE(graph.Export(dir.File("g.nt")).ok());
  auto loaded = AffordanceGraph::Load(dir.File("g.nt"));
  ASSERT_TRUE(loaded.ok()) << loaded.status();
  EXPECT_EQ(*loaded, graph);
  EXPECT_EQ(loaded->Serialize(), testing::Slurp(dir.File("g.nt")));
}

TEST(AffordanceGraphTest, InsertionOrderDoesNotMatter) {
  std::vector<Affordance> items = {
      Single("open", "door"),  Single("close", "door"),
      Single("take", "lamp"),  Double("slice", "tomato", "with", "knife"),
      Double("slice", "bread", "with", "knife"),
      Double("put", "lamp", "on", "table"), Single("open", "door")};
  AffordanceGraph reference;
  for (const auto& a : items) reference.Insert(a);
  std::mt19937 rng(5);
  for (int i = 0; i < 50; ++i) {
    std::shuffle(items.begin(), items.end(), rng);
    AffordanceGraph graph;
    for (const auto& a : items) graph.Insert(a);
    EXPECT_EQ(graph.Serialize(), reference.Serialize());
  }
}

TEST(AffordanceGraphTest, ParseRejectsBadInput) {
  const char* bad[] = {
      "<urn:affordex:object:door> <urn:affordex:affords> "
      "<urn:affordex:verb:open>\n",
      "<urn:affordex:object:door> <urn:affordex:opens> "
      "<urn:affordex:verb:open> .\n",
      "<http://example.org/door> <urn:affordex:affords> "
      "<urn:affordex:verb:open> .\n",
      // A requires-edge without its affords-edge.
      "<urn:affordex:affordance:knife:slice> <urn:affordex:requires> "
      "<urn:affordex:object:tomato> .\n",
  };
  for (const char* text : bad) {
    EXPECT_EQ(AffordanceGraph::Parse(text, "g").status().code(),
              absl::StatusCode::kDataLoss)
        << text;
  }
  auto empty = AffordanceGraph::Parse("# comment only\n\n", "g");
  ASSERT_TRUE(empty.ok());
  EXPECT_EQ(empty->size(), 0u);
}

}  // namespace
}  // namespace affordex
