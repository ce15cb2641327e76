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

#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "mwpa/common/status.h"
#include "mwpa/corpus/loaders.h"
#include "mwpa/corpus/problem.h"
#include "mwpa/corpus/stats.h"
#include "mwpa/equation/solver.h"

namespace mwpa {
namespace {

using ::testing::ElementsAre;

const std::filesystem::path kTestData = MWPA_TEST_DATA_DIR;

LoadResult MustLoad(const std::filesystem::path& path, CorpusFormat format) {
  absl::StatusOr<LoadResult> r = LoadCorpus(path, format);
  EXPECT_TRUE(r.ok()) << r.status();
  return r.ok() ? *r : LoadResult();
}

Problem MakeSimple(std::string id, std::string body, std::string question,
                   std::string equation) {
  ProblemSpec spec;
  spec.id = std::move(id);
  spec.body = {std::move(body)};
  spec.question = std::move(question);
  spec.equation = std::move(equation);
  absl::StatusOr<Problem> p = BuildProblem(spec);
  EXPECT_TRUE(p.ok()) << p.status();
  return p.ok() ? *p : Problem();
}

TEST(ExtractQuantitiesTest, TextOrderWithSentencePositions) {
  std::vector<Quantity> q =
      ExtractQuantities("Nancy grew 8 potatoes. Sandy grew 5 potatoes.");
  ASSERT_EQ(q.size(), 2u);
  EXPECT_EQ(q[0].value, 8);
  EXPECT_EQ(q[0].segment, 0);
  EXPECT_EQ(q[0].token_index, 2);
  EXPECT_EQ(q[1].value, 5);
  EXPECT_EQ(q[1].segment, 1);
  EXPECT_EQ(q[1].placeholder_id, 1);
  EXPECT_TRUE(ExtractQuantities("How many in all ?").empty());
}

TEST(ExtractQuantitiesTest, DuplicatesGetDistinctIds) {
  std::vector<Quantity> q =
      ExtractQuantities("He had 2.5 liters and 2.5 more");
  ASSERT_EQ(q.size(), 2u);
  EXPECT_EQ(q[0].value, Rational(5, 2));
  EXPECT_EQ(q[1].value, Rational(5, 2));
  EXPECT_NE(q[0].placeholder_id, q[1].placeholder_id);
}

TEST(ExtractQuantitiesTest, NumberWordsAreNotQuantities) {
  EXPECT_TRUE(ExtractQuantities("He had two apples").empty());
}

TEST(BuildProblemTest, RejectsWithKinds) {
  ProblemSpec spec;
  spec.id = "p";
  spec.body = {"Tom has 3 apples ."};
  spec.question = "How many apples does Tom have ?";
  spec.equation = "X = 3+4";
  EXPECT_EQ(ErrorKind(BuildProblem(spec).status()), "alignment_failed");
  spec.equation = "X = ((3";
  EXPECT_EQ(ErrorKind(BuildProblem(spec).status()), "unbalanced_parentheses");
  spec.equation = "X = 3";
  spec.expected_answer = Rational(4);
  EXPECT_EQ(ErrorKind(BuildProblem(spec).status()), "answer_mismatch");
  spec.expected_answer.reset();
  spec.question = "How many apples does Tom have .";
  EXPECT_EQ(ErrorKind(BuildProblem(spec).status()), "question_mark");
  spec.body.clear();
  spec.question.clear();
  EXPECT_EQ(ErrorKind(BuildProblem(spec).status()), "empty_problem");
}

TEST(LoadCorpusTest, MawpsFixtureLoadsCleanly) {
  LoadResult r = MustLoad(kTestData / "mawps_fixture.json",
                          CorpusFormat::kMawpsJson);
  for (const Reject& rej : r.rejects) {
    ADD_FAILURE() << rej.record_id << ": " << rej.kind << " " << rej.reason;
  }
  ASSERT_EQ(r.problems.size(), 100u);
  const Problem& nancy = r.problems[0];
  EXPECT_EQ(nancy.id, "1000");
  EXPECT_THAT(nancy.body, ElementsAre("Nancy grew 8 potatoes .",
                                      "Sandy grew 5 potatoes ."));
  EXPECT_EQ(nancy.question, "How many potatoes did they grow in total ?");
  EXPECT_EQ(nancy.answer, 13);
  EXPECT_EQ(nancy.equation.ToSExpr(), "(= X (+ 8 5))");
  for (const Problem& p : r.problems) {
    EXPECT_EQ(*Solve(p.equation), p.answer) << p.id;
    EXPECT_TRUE(AlignQuantities(p).ok()) << p.id;
    EXPECT_EQ(p.question.back(), '?') << p.id;
    for (const Quantity& q : p.quantities) {
      EXPECT_EQ(TokenAt(p, q), q.surface) << p.id;
    }
  }
}

TEST(LoadCorpusTest, AsdivFixtureLoadsCleanly) {
  LoadResult r = MustLoad(kTestData / "asdiv_fixture.xml",
                          CorpusFormat::kAsdivXmlish);
  for (const Reject& rej : r.rejects) {
    ADD_FAILURE() << rej.record_id << ": " << rej.kind << " " << rej.reason;
  }
  ASSERT_EQ(r.problems.size(), 100u);
  EXPECT_EQ(r.problems[0].id, "nluds-2000");
  EXPECT_EQ(r.problems[0].answer, 9);
  EXPECT_EQ(r.problems[0].equation.ToSExpr(), "(= X (+ 7 2))");
}

TEST(LoadCorpusTest, MalformedRecordsAreRejectedNotFatal) {
  absl::StatusOr<LoadResult> r = ParseCorpus(
      R"([{"iIndex": 1, "sQuestion": "Tom has 3 apples . How many ?",
           "lEquations": ["X=3"], "lSolutions": [3.0]},
          {"iIndex": 2, "sQuestion": "Tom has 3 apples . How many ?"},
          {"iIndex": 3, "sQuestion": "Tom has 3 apples . How many ?",
           "lEquations": ["X=((3"], "lSolutions": [3.0]},
          {"iIndex": 4, "sQuestion": "Tom has 3 apples . How many ?",
           "lEquations": ["X=3"], "lSolutions": [4.0]},
          {"iIndex": 5, "sQuestion": "Tom has 3 apples .",
           "lEquations": ["X=3"], "lSolutions": [3.0]}])",
      CorpusFormat::kMawpsJson);
  ASSERT_TRUE(r.ok());
  ASSERT_EQ(r->problems.size(), 1u);
  ASSERT_EQ(r->rejects.size(), 4u);
  EXPECT_EQ(r->rejects[0].kind, "malformed_record");
  EXPECT_EQ(r->rejects[1].kind, "unbalanced_parentheses");
  EXPECT_EQ(r->rejects[2].kind, "answer_mismatch");
  EXPECT_EQ(r->rejects[3].kind, "no_question");
  EXPECT_EQ(r->rejects[3].record_id, "5");
}

TEST(LoadCorpusTest, FileLevelErrors) {
  EXPECT_FALSE(LoadCorpus("/nonexistent/file.json", CorpusFormat::kMawpsJson)
                   .ok());
  EXPECT_FALSE(ParseCorpus("{not json", CorpusFormat::kMawpsJson).ok());
  EXPECT_EQ(ErrorKind(ParseCorpusFormat("csv").status()), "unknown_format");
  absl::StatusOr<LoadResult> empty =
      ParseCorpus("", CorpusFormat::kCanonicalJsonl);
  ASSERT_TRUE(empty.ok());
  EXPECT_TRUE(empty->problems.empty());
  EXPECT_TRUE(empty->rejects.empty());
}

TEST(CanonicalJsonlTest, RoundTripIsIdentity) {
  LoadResult r = MustLoad(kTestData / "mawps_fixture.json",
                          CorpusFormat::kMawpsJson);
  std::vector<Problem> problems = r.problems;
  // One augmented record with a non-question final sentence.
  absl::StatusOr<Problem> child = ProblemFromText(
      "How many potatoes did they grow in all given that Nancy grew 8 "
      "potatoes and Sandy grew 5 potatoes .",
      problems[0], "1000~problem_reorder",
      AugmentationTag{"1000", Method::kProblemReorder,
                      {"primary", "problem_reorder"}});
  ASSERT_TRUE(child.ok()) << child.status();
  problems.push_back(*child);

  std::string serialized = SerializeCanonicalJsonl(problems);
  absl::StatusOr<LoadResult> back =
      ParseCorpus(serialized, CorpusFormat::kCanonicalJsonl);
  ASSERT_TRUE(back.ok());
  EXPECT_TRUE(back->rejects.empty());
  ASSERT_EQ(back->problems.size(), problems.size());
  for (size_t i = 0; i < problems.size(); ++i) {
    EXPECT_EQ(back->problems[i], problems[i]) << problems[i].id;
  }
  EXPECT_EQ(SerializeCanonicalJsonl(back->problems), serialized);
  EXPECT_EQ(
      ProblemToJsonLine(problems[0]),
      R"({"id":"1000","body":["Nancy grew 8 potatoes .","Sandy grew 5 potatoes ."],)"
      R"("question":"How many potatoes did they grow in total ?","equation":"X=8.0+5.0",)"
      R"("answer":"13","source":"mawps","augmentation":null})");
}

TEST(CorpusStatsTest, Basics) {
  CorpusStats empty = ComputeCorpusStats({});
  EXPECT_EQ(empty.problem_count, 0);
  EXPECT_EQ(empty.vocabulary_size, 0);
  Problem p = MakeSimple("a", "Tom has 3 apples .", "How many apples ?",
                         "X = 3");
  CorpusStats one = ComputeCorpusStats({p});
  // tom has 3 apples . how many ?
  EXPECT_EQ(one.vocabulary_size, 8);
  CorpusStats two = ComputeCorpusStats({p, p});
  EXPECT_EQ(two.problem_count, 2);
  EXPECT_EQ(two.vocabulary_size, one.vocabulary_size);
  EXPECT_LE(two.vocabulary_size, two.token_count);
}

std::vector<Problem> NumberedProblems(int n) {
  std::vector<Problem> out;
  for (int i = 0; i < n; ++i) {
    out.push_back(MakeSimple(absl::StrCat("p", i), "Tom has 3 apples .",
                             "How many apples ?", "X = 3"));
  }
  return out;
}

TEST(KFoldTest, PartitionAndSizes) {
  std::vector<Problem> problems = NumberedProblems(10);
  absl::StatusOr<std::vector<Fold>> folds = KFoldSplit(problems, 5, 1);
  ASSERT_TRUE(folds.ok());
  ASSERT_EQ(folds->size(), 5u);
  std::multiset<std::string> seen;
  for (const Fold& f : *folds) {
    EXPECT_EQ(f.test_ids.size(), 2u);
    EXPECT_EQ(f.train_ids.size(), 8u);
    seen.insert(f.test_ids.begin(), f.test_ids.end());
  }
  EXPECT_EQ(seen.size(), 10u);
  EXPECT_EQ(std::set<std::string>(seen.begin(), seen.end()).size(), 10u);

  absl::StatusOr<std::vector<Fold>> again = KFoldSplit(problems, 5, 1);
  for (size_t f = 0; f < 5; ++f) {
    EXPECT_EQ((*folds)[f].test_ids, (*again)[f].test_ids);
  }
  std::vector<Problem> seven = NumberedProblems(7);
  absl::StatusOr<std::vector<Fold>> uneven = KFoldSplit(seven, 3, 4);
  ASSERT_TRUE(uneven.ok());
  size_t lo = 100, hi = 0;
  for (const Fold& f : *uneven) {
    lo = std::min(lo, f.test_ids.size());
    hi = std::max(hi, f.test_ids.size());
  }
  EXPECT_LE(hi - lo, 1u);
}

TEST(KFoldTest, KOutOfRange) {
  std::vector<Problem> problems = NumberedProblems(4);
  EXPECT_EQ(ErrorKind(KFoldSplit(problems, 1, 0).status()), "invalid_k");
  EXPECT_EQ(ErrorKind(KFoldSplit(problems, 5, 0).status()), "invalid_k");
}

TEST(KFoldTest, ChildrenFollowParents) {
  std::vector<Problem> problems = NumberedProblems(4);
  std::vector<Problem> parents = problems;
  for (const Problem& parent : parents) {
    for (int c = 0; c < 2; ++c) {
      Problem child = parent;
      child.id = absl::StrCat(parent.id, "~", c);
      child.source = Source::kAugmented;
      child.provenance =
          AugmentationTag{parent.id, Method::kSynonym, {"synonym"}};
      problems.push_back(child);
    }
  }
  for (uint64_t seed = 0; seed < 20; ++seed) {
    absl::StatusOr<std::vector<Fold>> folds = KFoldSplit(problems, 2, seed);
    ASSERT_TRUE(folds.ok());
    for (const Fold& f : *folds) {
      std::set<std::string> test(f.test_ids.begin(), f.test_ids.end());
      for (const Problem& p : problems) {
        EXPECT_EQ(test.count(p.id), test.count(p.RootId()))
            << p.id << " separated from " << p.RootId() << " seed " << seed;
      }
    }
  }
}

}  // namespace
}  // namespace mwpa
