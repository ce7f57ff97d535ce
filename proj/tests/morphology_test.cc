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

#include "affordex/morphology.h"

#include <string>
#include <utility>
#include <vector>

#include "affordex/text.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace affordex {
namespace {

using testing::Resources;

std::vector<std::pair<std::string, std::string>> ReadPairs(
    const std::string& path) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& line : SplitLines(testing::Slurp(path))) {
    if (line.empty() || line[0] == '#') continue;
    size_t tab = line.find('\t');
    pairs.emplace_back(line.substr(0, tab), line.substr(tab + 1));
  }
  return pairs;
}

TEST(MorphologyTest, SingularizeByRule) {
  EXPECT_EQ(SingularizeByRule("curtains"), "curtain");
  EXPECT_EQ(SingularizeByRule("berries"), "berry");
  EXPECT_EQ(SingularizeByRule("boxes"), "box");
  EXPECT_EQ(SingularizeByRule("torches"), "torch");
  EXPECT_EQ(SingularizeByRule("dishes"), "dish");
  EXPECT_EQ(SingularizeByRule("potatoes"), "potato");
  EXPECT_EQ(SingularizeByRule("glass"), "glass");
  EXPECT_EQ(SingularizeByRule("cactus"), "cactus");
  EXPECT_EQ(SingularizeByRule("axis"), "axis");
  EXPECT_EQ(SingularizeByRule("as"), "as");
  EXPECT_EQ(SingularizeByRule("lantern"), "lantern");
}

TEST(MorphologyTest, SingularizerUsesExceptions) {
  const Singularizer& s = Resources().singularizer;
  EXPECT_EQ(s.Singular("knives"), "knife");
  EXPECT_EQ(s.Singular("mice"), "mouse");
  EXPECT_EQ(s.Singular("feet"), "foot");
  // The lexicon lists the eyewear sense as its own lemma.
  EXPECT_EQ(s.Singular("glasses"), "glasses");
  EXPECT_EQ(s.Singular("classes"), "class");
  EXPECT_EQ(s.Singular("gloves"), "glove");
  EXPECT_EQ(s.Singular("costumes"), "costume");
  EXPECT_EQ(s.Singular("trunk"), "trunk");
}

TEST(MorphologyTest, BaseFormByRule) {
  EXPECT_EQ(BaseFormByRule("hoped"), "hope");
  EXPECT_EQ(BaseFormByRule("hopped"), "hop");
  EXPECT_EQ(BaseFormByRule("sliced"), "slice");
  EXPECT_EQ(BaseFormByRule("slicing"), "slice");
  EXPECT_EQ(BaseFormByRule("chopping"), "chop");
  EXPECT_EQ(BaseFormByRule("carried"), "carry");
  EXPECT_EQ(BaseFormByRule("carries"), "carry");
  EXPECT_EQ(BaseFormByRule("watches"), "watch");
  EXPECT_EQ(BaseFormByRule("opens"), "open");
  EXPECT_EQ(BaseFormByRule("open"), "open");
}

// The e-restoration rule misreads "opened"; the exception table fixes it.
TEST(MorphologyTest, ExceptionsOverrideRules) {
  EXPECT_EQ(BaseFormByRule("opened"), "opene");
  EXPECT_EQ(*Resources().verbs.BaseForm("opened"), "open");
}

TEST(MorphologyTest, HasVerbalSuffix) {
  EXPECT_TRUE(HasVerbalSuffix("opened"));
  EXPECT_TRUE(HasVerbalSuffix("slicing"));
  EXPECT_FALSE(HasVerbalSuffix("bed"));
  EXPECT_FALSE(HasVerbalSuffix("ring"));
  EXPECT_FALSE(HasVerbalSuffix("sharp"));
}

// Every entry of the hand-checked table maps to its base form.
TEST(MorphologyTest, InflectionTable) {
  const VerbNormalizer& verbs = Resources().verbs;
  auto pairs = ReadPairs(testing::TestDataPath("verb_inflections.tsv"));
  ASSERT_GE(pairs.size(), 200u);
  int wrong = 0;
  for (const auto& [form, base] : pairs) {
    absl::StatusOr<std::string> got = verbs.BaseForm(form);
    if (!got.ok() || *got != base) {
      ++wrong;
      ADD_FAILURE() << form << " -> "
                    << (got.ok() ? *got : std::string("error")) << ", want "
                    << base;
    }
  }
  EXPECT_EQ(wrong, 0);
}

TEST(MorphologyTest, CopulaIsNotAnImperativeVerb) {
  const VerbNormalizer& verbs = Resources().verbs;
  for (const char* form : {"is", "was", "been", "are"}) {
    EXPECT_FALSE(verbs.BaseForm(form).ok()) << form;
  }
}

TEST(MorphologyTest, RejectsNonWords) {
  const VerbNormalizer& verbs = Resources().verbs;
  EXPECT_EQ(verbs.BaseForm("Opened").status().code(),
            absl::StatusCode::kInvalidArgument);
  EXPECT_EQ(verbs.BaseForm("").status().code(),
            absl::StatusCode::kInvalidArgument);
  EXPECT_EQ(verbs.BaseForm("sharp").status().code(),
            absl::StatusCode::kInvalidArgument);
  EXPECT_FALSE(verbs.IsVerbal("sharp"));
  EXPECT_TRUE(verbs.IsVerbal("opened"));
}

TEST(MorphologyTest, UnknownWordsNeedAVerbalSuffix) {
  VerbNormalizer verbs(WordList({"open"}), WordMap());
  EXPECT_EQ(*verbs.BaseForm("blorped"), "blorp");
  EXPECT_EQ(*verbs.BaseForm("open"), "open");
  EXPECT_FALSE(verbs.BaseForm("blorp").ok());
}

TEST(MorphologyTest, WordListLoadSkipsCommentsAndBlanks) {
  testing::ScratchDir dir;
  {
    FILE* f = fopen(dir.File("w.txt").c_str(), "w");
    fputs("# header\n\nlamp\n  rope \n", f);
    fclose(f);
  }
  absl::StatusOr<WordList> list = WordList::Load(dir.File("w.txt"));
  ASSERT_TRUE(list.ok());
  EXPECT_EQ(list->size(), 2u);
  EXPECT_TRUE(list->Contains("rope"));
  EXPECT_EQ(WordList::Load(dir.File("missing.txt")).status().code(),
            absl::StatusCode::kNotFound);
}

TEST(MorphologyTest, WordMapRejectsMalformedLines) {
  testing::ScratchDir dir;
  FILE* f = fopen(dir.File("m.tsv").c_str(), "w");
  fputs("mice\tmouse\nbroken line\n", f);
  fclose(f);
  EXPECT_EQ(WordMap::Load(dir.File("m.tsv")).status().code(),
            absl::StatusCode::kDataLoss);
}

}  // namespace
}  // namespace affordex
