//
// Copyright 2026 The MWPA Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "mwpa/common/status.h"
#include "mwpa/textlab/annotator.h"
#include "mwpa/textlab/tokenizer.h"

namespace mwpa {
namespace {

using ::testing::ElementsAre;

TEST(TokenizerTest, SplitsPunctuationButNotNumbers) {
  EXPECT_EQ(NormalizeText("Nancy grew 8 potatoes. Sandy grew 5.5 potatoes."),
            "Nancy grew 8 potatoes . Sandy grew 5.5 potatoes .");
  EXPECT_EQ(NormalizeText("It cost $1,000, (roughly)!"),
            "It cost $ 1,000 , ( roughly ) !");
  EXPECT_EQ(NormalizeText("Mrs. Hilt's 20% share?"),
            "Mrs. Hilt 's 20 % share ?");
  EXPECT_EQ(NormalizeText("  spaced\tout \n words "), "spaced out words");
}

TEST(TokenizerTest, NormalizeIsIdempotent) {
  for (const char* text :
       {"Mrs. Hilt's 20% share?", "It cost $1,000, (roughly)!",
        "He said \"no\" ... twice.", "'s 's", "boys' toys."}) {
    std::string once = NormalizeText(text);
    EXPECT_EQ(NormalizeText(once), once) << text;
  }
}

TEST(TokenizerTest, SpansCoverSourceBytes) {
  const std::string text = "Tom's 3.5 apples, please.";
  std::vector<TokenSpan> spans = TokenizeSpans(text);
  std::vector<std::string> got;
  for (const TokenSpan& s : spans) {
    got.push_back(text.substr(s.begin, s.end - s.begin));
  }
  EXPECT_THAT(got,
              ElementsAre("Tom", "'s", "3.5", "apples", ",", "please", "."));
}

TEST(TokenizerTest, Numerals) {
  EXPECT_TRUE(IsNumeral("8"));
  EXPECT_TRUE(IsNumeral("1,000"));
  EXPECT_TRUE(IsNumeral("0.25"));
  EXPECT_FALSE(IsNumeral("8th"));
  EXPECT_FALSE(IsNumeral("."));
  EXPECT_FALSE(IsNumeral("1,00"));
}

TEST(TokenizerTest, Sentences) {
  EXPECT_THAT(SplitSentences("A b. C d? E f"),
              ElementsAre("A b .", "C d ?", "E f"));
  EXPECT_THAT(SplitSentences("Mr. Smith has 3 cats."),
              ElementsAre("Mr. Smith has 3 cats ."));
}

class AnnotatorTest : public ::testing::Test {
 protected:
  AnnotatedText Run(absl::string_view text) {
    absl::StatusOr<AnnotatedText> a = Annotate(text, backend_);
    EXPECT_TRUE(a.ok()) << a.status();
    return a.ok() ? *a : AnnotatedText();
  }
  RuleBasedAnnotator backend_;
};

TEST_F(AnnotatorTest, PersonAndNumber) {
  AnnotatedText a = Run("Sally found 7 seashells .");
  ASSERT_EQ(a.entities.size(), 1u);
  EXPECT_EQ(a.entities[0].begin, 0);
  EXPECT_EQ(a.entities[0].end, 1);
  EXPECT_EQ(a.entities[0].kind, EntityKind::kPerson);
  EXPECT_EQ(a.entities[0].gender, Gender::kFemale);
  EXPECT_EQ(a.pos[2], PosTag::kNum);
  EXPECT_EQ(a.pos[3], PosTag::kNoun);
  EXPECT_EQ(a.pos[4], PosTag::kPunct);
}

TEST_F(AnnotatorTest, EmptyTextRejected) {
  absl::StatusOr<AnnotatedText> a = Annotate("  ", backend_);
  EXPECT_EQ(ErrorKind(a.status()), "empty_text");
}

TEST_F(AnnotatorTest, QuestionIndex) {
  EXPECT_EQ(Run("How many fish would Lucy have then ?").question_index, 0);
  EXPECT_EQ(Run("Lucy has 5 fish .").question_index, std::nullopt);
  EXPECT_EQ(Run("A ? B ?").question_index, 1);
}

TEST_F(AnnotatorTest, PlacesOrgsAndHonorifics) {
  AnnotatedText a =
      Run("Mrs. Hilt drove from New York to Best Buy with Tom .");
  ASSERT_EQ(a.entities.size(), 4u);
  EXPECT_EQ(a.entities[0].kind, EntityKind::kPerson);
  EXPECT_EQ(a.entities[0].end - a.entities[0].begin, 2);
  EXPECT_EQ(a.entities[0].gender, Gender::kFemale);
  EXPECT_EQ(a.entities[1].kind, EntityKind::kPlace);
  EXPECT_EQ(a.entities[1].end - a.entities[1].begin, 2);
  EXPECT_EQ(a.entities[2].kind, EntityKind::kOrg);
  EXPECT_EQ(a.entities[3].gender, Gender::kMale);
}

TEST_F(AnnotatorTest, DetokenizeIsLossless) {
  for (const char* text :
       {"Sally found 7 seashells .", "Mrs. Hilt 's 20 % share ?",
        "It cost $ 1,000 , ( roughly ) !"}) {
    EXPECT_EQ(Detokenize(Run(text)), text);
  }
}

TEST_F(AnnotatorTest, ResolvesSingleAntecedent) {
  EXPECT_EQ(ResolvePronouns(Run("Lucy has 5 fish . She wants 1 more .")),
            "Lucy has 5 fish . Lucy wants 1 more .");
  EXPECT_EQ(ResolvePronouns(Run("Tom has 2 dogs . Sara gave him 3 more .")),
            "Tom has 2 dogs . Sara gave Tom 3 more .");
}

TEST_F(AnnotatorTest, LeavesAmbiguousAndPossessivePronouns) {
  const std::string ambiguous =
      "Sally has 3 pens . Jessica has 4 pens . She lost 1 .";
  EXPECT_EQ(ResolvePronouns(Run(ambiguous)), ambiguous);
  const std::string possessive = "Lucy has 5 fish . Her aunt gave her 3 .";
  EXPECT_EQ(ResolvePronouns(Run(possessive)),
            "Lucy has 5 fish . Her aunt gave Lucy 3 .");
  const std::string none = "There are 5 fish in the tank .";
  EXPECT_EQ(ResolvePronouns(Run(none)), none);
}

TEST_F(AnnotatorTest, ResolutionKeepsNumbersAndEntities) {
  AnnotatedText a = Run("Mrs. Hilt had 3 pies . She sold 2 of them .");
  std::string resolved = ResolvePronouns(a);
  EXPECT_EQ(resolved, "Mrs. Hilt had 3 pies . Mrs. Hilt sold 2 of them .");
}

TEST(FindQuestionTest, Rules) {
  EXPECT_EQ(*FindQuestion({"Nancy grew 8 potatoes .",
                           "Sandy grew 5 potatoes .",
                           "How many potatoes did they grow in total ?"}),
            2);
  EXPECT_EQ(*FindQuestion({"What is it ?", "Really ?"}), 1);
  EXPECT_EQ(*FindQuestion({"Tom has 3 apples .",
                           "Find the number of apples he has ."}),
            1);
  EXPECT_EQ(ErrorKind(FindQuestion({"Tom has 3 apples ."}).status()),
            "no_question");
}

}  // namespace
}  // namespace mwpa
