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

#include "affordex/objects.h"

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace affordex {
namespace {

using ::testing::ElementsAre;
using testing::Resources;

constexpr char kBackstage[] =
    "Backstage\n"
    "Ah ah choo. Those curtains. If I weren t so busy helping you with this "
    "game, I d suggest you go on without me and let me clean this place up "
    "enough so that when you returned, I could at least describe it "
    "decently. I ll do the best I can though. A thick maroon curtain "
    "separates the backstage area from the stage. This area was obviously "
    "the target of a small underground tornado, a Vorx as scrims scenery "
    "and costumes litter the floor. Even an old steamer trunk, virtually "
    "decaying from age, rests in a corner.\n"
    "Your inventory: brass lantern, glasses, ZM$100000,  "
    "Multi-Implementeers,  Forever Gores,  Baby Rune, razor-like gloves, "
    "cheaply-made sword";

std::vector<std::string> Heads(const ExtractionResult& result) {
  std::vector<std::string> heads;
  for (const auto& m : result.mentions) heads.push_back(m.head);
  return heads;
}

std::unique_ptr<NounTagger> Tagger() {
  auto tagger = MakeTagger("lexicon", Resources());
  EXPECT_TRUE(tagger.ok());
  return std::move(tagger).value();
}

// Engine object phrases and the head noun each reduces to.
TEST(ObjectsTest, ListedPhraseHeads) {
  const std::pair<const char*, const char*> kTable[] = {
      {"red apple", "apple"},
      {"yellow bell pepper", "pepper"},
      {"chopped red onion", "onion"},
      {"sliced carrot", "carrot"},
      {"wooden door", "door"},
      {"screen door", "door"},
      {"fridge", "fridge"},
      {"stove", "stove"},
      {"kitchen cupboard", "cupboard"},
      {"cookbook", "cookbook"},
      {"knife", "knife"},
      {"purple potato", "potato"},
      {"block of cheese", "cheese"},
      {"bag of chips", "chips"},
      {"type 1 box", "box"},
      {"Microsoft limited edition key", "key"},
      {"antique trunk", "trunk"},
      {"chest drawer", "drawer"},
      {"wooden table", "table"},
      {"rectangular locker", "locker"},
      {"frosted-glass door", "door"},
      {"shiny keycard", "keycard"},
      {"old hat", "hat"},
      {"BBQ", "bbq"},
      {"toolbox", "toolbox"},
      {"sofa", "sofa"},
      {"bed stand", "stand"},
      {"shelf", "shelf"},
      {"red hot pepper", "pepper"},
      {"white onion", "onion"},
      {"pork chop", "chop"},
      {"chicken wing", "wing"},
      {"chicken leg", "leg"},
      {"raw tuna", "tuna"},
      {"salt", "salt"},
      {"black pepper", "pepper"},
      {"water", "water"},
      {"milk", "milk"},
      {"flour", "flour"},
      {"olive oil", "oil"},
      {"showcase", "showcase"},
      {"counter", "counter"},
      {"meal", "meal"},
      {"workbench", "workbench"},
      {"dining chair", "chair"},
      {"armchair", "armchair"},
      {"sliding patio door", "door"},
      {"plain gate", "gate"},
      {"iron key", "key"},
      {"banana", "banana"},
  };
  ASSERT_EQ(std::size(kTable), 50u);
  for (const auto& [phrase, head] : kTable) {
    ExtractionResult r = ExtractObjectsListed({phrase});
    ASSERT_EQ(r.mentions.size(), 1u) << phrase;
    EXPECT_EQ(r.mentions[0].head, head) << phrase;
    EXPECT_EQ(r.mentions[0].surface, phrase);
    EXPECT_EQ(r.mentions[0].source, MentionSource::kProvidedList);
  }
}

TEST(ObjectsTest, ListedPhrasesMergeByHeadAndSort) {
  ExtractionResult r =
      ExtractObjectsListed({"wooden door", "red apple", "screen door", "42"});
  EXPECT_THAT(Heads(r), ElementsAre("apple", "door"));
  EXPECT_EQ(r.mentions[1].surface, "wooden door");
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_NE(r.diagnostics[0].find("'42'"), std::string::npos);
}

TEST(ObjectsTest, TaggerFindsBackstageObjects) {
  auto tagger = Tagger();
  absl::StatusOr<ExtractionResult> r = ExtractObjectsTagged(kBackstage, *tagger);
  ASSERT_TRUE(r.ok());
  std::vector<std::string> heads = Heads(*r);
  for (const char* expected :
       {"area", "curtain", "curtains", "floor", "game", "glasses", "gloves",
        "lantern", "scenery", "stage", "sword", "tornado", "trunk",
        "costumes", "corner"}) {
    EXPECT_NE(std::find(heads.begin(), heads.end(), expected), heads.end())
        << expected;
  }
  // Verbs in the scene that are also nouns.
  for (const char* verb : {"litter", "go", "separates", "clean"}) {
    EXPECT_EQ(std::find(heads.begin(), heads.end(), verb), heads.end())
        << verb;
  }
  EXPECT_TRUE(std::is_sorted(heads.begin(), heads.end()));
}

TEST(ObjectsTest, AdjacentNounsFormOnePhrase) {
  auto tagger = Tagger();
  std::vector<ObjectMention> tags = tagger->Tag("a brass lantern, a trunk");
  ASSERT_EQ(tags.size(), 2u);
  EXPECT_EQ(tags[0].head, "lantern");
  EXPECT_EQ(tags[0].surface, "brass lantern");
  EXPECT_EQ(tags[0].source, MentionSource::kTaggedText);
  EXPECT_EQ(tags[1].head, "trunk");
}

TEST(ObjectsTest, CurtainSentence) {
  auto tagger = Tagger();
  auto r = ExtractObjectsTagged(
      "A thick maroon curtain separates the backstage area from the stage.",
      *tagger);
  ASSERT_TRUE(r.ok());
  EXPECT_THAT(Heads(*r), ElementsAre("area", "curtain", "stage"));
}

TEST(ObjectsTest, NoContextualFiltering) {
  auto tagger = Tagger();
  auto r = ExtractObjectsTagged(
      "\"Bring me a sword,\" says the painting of a king.", *tagger);
  ASSERT_TRUE(r.ok());
  std::vector<std::string> heads = Heads(*r);
  EXPECT_NE(std::find(heads.begin(), heads.end(), "sword"), heads.end());
  EXPECT_NE(std::find(heads.begin(), heads.end(), "king"), heads.end());
}

TEST(ObjectsTest, EmptyTextIsAnError) {
  auto tagger = Tagger();
  EXPECT_EQ(ExtractObjectsTagged(" \n\t", *tagger).status().code(),
            absl::StatusCode::kInvalidArgument);
}

TEST(ObjectsTest, UnknownTaggerBackendIsAConfigurationError) {
  EXPECT_EQ(MakeTagger("external", Resources()).status().code(),
            absl::StatusCode::kInvalidArgument);
}

}  // namespace
}  // namespace affordex
