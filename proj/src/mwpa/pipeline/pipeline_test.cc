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

#include "mwpa/pipeline/pipeline.h"

#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "json.hpp"
#include "mwpa/augment/candidate.h"
#include "mwpa/common/status.h"
#include "mwpa/corpus/loaders.h"
#include "mwpa/pipeline/config.h"
#include "mwpa/pipeline/evaluation.h"
#include "mwpa/providers/stubs.h"
#include "mwpa/textlab/tokenizer.h"

namespace mwpa {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;

std::vector<Problem> Fixture() {
  absl::StatusOr<LoadResult> r =
      LoadCorpus(std::string(MWPA_TEST_DATA_DIR) + "/mawps_fixture.json",
                 CorpusFormat::kMawpsJson);
  EXPECT_TRUE(r.ok()) << r.status();
  return r->problems;
}

Problem Make(const std::string& id, const std::string& text,
             const std::string& equation) {
  std::vector<std::string> sentences = SplitSentences(text);
  ProblemSpec spec;
  spec.id = id;
  spec.question = sentences.back();
  sentences.pop_back();
  spec.body = sentences;
  spec.equation = equation;
  absl::StatusOr<Problem> p = BuildProblem(spec);
  EXPECT_TRUE(p.ok()) << p.status();
  return *p;
}

struct Stubs {
  LexiconParaphraser paraphrase;
  PhraseTableTranslator translate;
  ContextTableFiller fill;
  SynonymTableEmbeddings nearest;
  TokenCosineSimilarity similarity;
  HashedLoss loss;
  RuleBasedAnnotator annotator;

  ProviderSet Set() const {
    ProviderSet s;
    s.paraphrase = &paraphrase;
    s.translate = &translate;
    s.fill = &fill;
    s.nearest = &nearest;
    s.similarity = &similarity;
    s.loss = &loss;
    s.annotator = &annotator;
    return s;
  }
};

// ---- config ----

TEST(ConfigTest, DefaultsAndOverrides) {
  absl::StatusOr<PipelineConfig> cfg = ParseConfig("");
  ASSERT_TRUE(cfg.ok()) << cfg.status();
  EXPECT_EQ(cfg->base_candidates, 7);
  EXPECT_EQ(cfg->methods.size(), 5u);
  EXPECT_EQ(cfg->combine_mode, CombineMode::kPerFamily);
  EXPECT_EQ(cfg->ProviderChoice("loss"), "stub");

  cfg = ParseConfig(
      "# comment\n"
      "base_candidates = 3\n"
      "methods = entity, round_trip   # trailing comment\n"
      "routes = en_de_en\n"
      "combine_mode = union\n"
      "seed = 42\n"
      "replacement_rate = 0.5\n"
      "provider.loss = http://127.0.0.1:9\n");
  ASSERT_TRUE(cfg.ok()) << cfg.status();
  EXPECT_EQ(cfg->base_candidates, 3);
  EXPECT_EQ(cfg->methods,
            (std::set<Method>{Method::kEntity, Method::kRoundTrip}));
  ASSERT_EQ(cfg->routes.size(), 1u);
  EXPECT_THAT(cfg->routes[0].languages, ElementsAre("en", "de", "en"));
  EXPECT_EQ(cfg->combine_mode, CombineMode::kUnion);
  EXPECT_EQ(cfg->substitution.seed, 42u);
  EXPECT_DOUBLE_EQ(cfg->substitution.replacement_rate, 0.5);
  EXPECT_EQ(cfg->ProviderChoice("loss"), "http://127.0.0.1:9");

  cfg = ParseConfig("methods = none\n");
  ASSERT_TRUE(cfg.ok());
  EXPECT_TRUE(cfg->methods.empty());
}

TEST(ConfigTest, Rejections) {
  for (const char* text :
       {"bogus = 1\n", "combine_mode = both\n", "base_candidates = 0\n",
        "methods = fill_mask, dance\n", "routes = en_xx\n", "no equals\n",
        "replacement_rate = 2\n", "provider.tts = stub\n",
        "provider.loss = ftp://x\n", "methods = round_trip\nroutes =\n"}) {
    absl::StatusOr<PipelineConfig> cfg = ParseConfig(text);
    EXPECT_FALSE(cfg.ok()) << text;
  }
  absl::StatusOr<PipelineConfig> cfg = ParseConfig("\n\nbogus = 1\n");
  EXPECT_EQ(ErrorKind(cfg.status()), "bad_config");
  EXPECT_THAT(cfg.status().message(), HasSubstr("line 3"));
}

// ---- gates ----

TEST(ValidateTest, EachGate) {
  const Problem p = Make("v1", "Tom has 3 apples . He buys 4 more . How many "
                               "apples does Tom have ?", "X = 3 + 4");
  auto cand = [&](const std::string& text, Method m = Method::kSynonym) {
    return MakeCandidate(text, p, m, {});
  };

  ValidationReport ok = ValidateCandidate(
      p, cand("Tom owns 3 apples . He buys 4 more . How many apples does Tom "
              "own ?"));
  EXPECT_TRUE(ok.pass()) << ok.FirstFailure();

  ValidationReport r = ValidateCandidate(p, cand(p.Text()));
  EXPECT_FALSE(r.pass());
  EXPECT_EQ(r.FirstFailure(), "differs_from_parent");

  r = ValidateCandidate(
      p, cand("Tom has 3 apples . He buys 5 more . How many apples ?"));
  EXPECT_FALSE(r.numbers_preserved);
  EXPECT_FALSE(r.alignment_ok);

  r = ValidateCandidate(p, cand("Tom has 3 apples . He buys 4 more ."));
  EXPECT_EQ(r.FirstFailure(), "question_present");

  // Reordering that swaps the events.
  r = ValidateCandidate(
      p, cand("How many apples does Tom have given that he buys 4 more and "
              "Tom has 3 apples .",
              Method::kProblemReorder));
  EXPECT_FALSE(r.events_ordered);
  r = ValidateCandidate(
      p, cand("How many apples does Tom have given that Tom has 3 apples and "
              "he buys 4 more .",
              Method::kProblemReorder));
  EXPECT_TRUE(r.pass()) << r.FirstFailure();
}

// ---- pipeline ----

void CheckEmitted(const AugmentResult& result, const std::vector<Problem>& in) {
  std::map<std::string, const Problem*> originals;
  for (const Problem& p : in) originals[p.id] = &p;
  for (const Problem& q : result.problems) {
    if (!q.provenance) {
      ASSERT_TRUE(originals.count(q.id)) << q.id;
      continue;
    }
    ASSERT_TRUE(originals.count(q.provenance->parent_id)) << q.id;
    const Problem& parent = *originals[q.provenance->parent_id];
    EXPECT_EQ(QuantityValues(q.quantities), QuantityValues(parent.quantities))
        << q.id;
    EXPECT_EQ(q.equation.ToString(), parent.equation.ToString()) << q.id;
    EXPECT_EQ(q.answer, parent.answer) << q.id;
    EXPECT_NE(NormalizeText(q.Text()), NormalizeText(parent.Text())) << q.id;
    EXPECT_FALSE(q.question.empty()) << q.id;
  }
}

TEST(PipelineTest, FixtureRunHonoursGatesAndCounters) {
  const std::vector<Problem> in = Fixture();
  Stubs stubs;
  absl::StatusOr<PipelineConfig> cfg = ParseConfig("workers = 1\n");
  ASSERT_TRUE(cfg.ok());
  AugmentResult result = AugmentDataset(in, *cfg, stubs.Set());

  CheckEmitted(result, in);
  const AugmentStats& s = result.stats;
  EXPECT_EQ(s.input_problems, static_cast<int>(in.size()));
  EXPECT_GT(s.growth(), 1.0);
  EXPECT_LE(s.growth(), 3.0);  // two families
  EXPECT_EQ(s.provider_failures(), 0);

  int by_label = 0, by_method = 0;
  for (const auto& [label, c] : s.per_label) {
    by_label += c.selected;
    EXPECT_EQ(c.selected + c.no_candidate + c.failed,
              static_cast<int>(in.size())) << label;
  }
  for (const auto& [name, m] : s.per_method) by_method += m.selected;
  EXPECT_EQ(by_label, s.output_problems - s.input_problems);
  EXPECT_EQ(by_method, by_label);
  EXPECT_EQ(result.decisions.size(), 2 * in.size());

  // Originals keep their order, each followed by its augmentations.
  size_t next_original = 0;
  for (const Problem& q : result.problems) {
    if (!q.provenance) {
      ASSERT_LT(next_original, in.size());
      EXPECT_EQ(q.id, in[next_original++].id);
    }
  }
  EXPECT_EQ(next_original, in.size());
}

TEST(PipelineTest, OutputIndependentOfWorkerCount) {
  const std::vector<Problem> in = Fixture();
  Stubs stubs;
  PipelineConfig one = *ParseConfig("workers = 1\ncombine_mode = union\n");
  PipelineConfig many = *ParseConfig("workers = 8\ncombine_mode = union\n");
  AugmentResult a = AugmentDataset(in, one, stubs.Set());
  AugmentResult b = AugmentDataset(in, many, stubs.Set());
  EXPECT_EQ(SerializeCanonicalJsonl(a.problems),
            SerializeCanonicalJsonl(b.problems));
  EXPECT_EQ(a.ReportJsonl(), b.ReportJsonl());
  EXPECT_EQ(a.stats.ToJson(), b.stats.ToJson());
  EXPECT_LE(a.stats.growth(), 6.0);
  CheckEmitted(a, in);
}

TEST(PipelineTest, SecondaryOnlyWithoutOriginal) {
  const std::vector<Problem> in = Fixture();
  Stubs stubs;
  PipelineConfig cfg =
      *ParseConfig("apply_to_original = false\nmethods = synonym\n");
  AugmentResult r = AugmentDataset(in, cfg, stubs.Set());
  CheckEmitted(r, in);
  for (const Problem& q : r.problems) {
    if (q.provenance) {
      ASSERT_FALSE(q.provenance->stage_trace.empty());
      EXPECT_EQ(q.provenance->stage_trace.front(), "primary_stage") << q.id;
    }
  }
}

class FailingTranslator : public TranslationProvider {
 public:
  absl::StatusOr<std::string> Translate(absl::string_view, absl::string_view,
                                        absl::string_view) const override {
    return MakeError(absl::StatusCode::kUnavailable, "provider_unavailable",
                     "down");
  }
};

TEST(PipelineTest, ProviderFailureSkipsOnlyThatMethod) {
  const std::vector<Problem> in = Fixture();
  Stubs stubs;
  FailingTranslator down;
  ProviderSet set = stubs.Set();
  set.translate = &down;
  PipelineConfig cfg = *ParseConfig("combine_mode = union\n");
  AugmentResult r = AugmentDataset(in, cfg, set);
  EXPECT_EQ(r.stats.per_method.at("round_trip").provider_errors,
            static_cast<int>(in.size()));
  EXPECT_EQ(r.stats.per_method.at("round_trip").selected, 0);
  EXPECT_GT(r.stats.per_method.at("entity").selected, 0);
  EXPECT_GT(r.stats.provider_failures(), 0);
  EXPECT_FALSE(r.failures.empty());
  CheckEmitted(r, in);
}

// Records the highest number of overlapping calls.
class CountingLoss : public SolverLossProvider {
 public:
  CountingLoss(int limit, bool thread_safe)
      : limit_(limit), thread_safe_(thread_safe) {}
  int max_in_flight() const override { return limit_; }
  bool thread_safe() const override { return thread_safe_; }
  absl::StatusOr<double> Loss(absl::string_view text,
                              const Equation& eq) const override {
    int now = ++in_flight_;
    int seen = peak_.load();
    while (now > seen && !peak_.compare_exchange_weak(seen, now)) {
    }
    std::this_thread::sleep_for(std::chrono::microseconds(200));
    --in_flight_;
    return StubLoss(text, eq);
  }
  int peak() const { return peak_; }

 private:
  int limit_;
  bool thread_safe_;
  mutable std::atomic<int> in_flight_{0};
  mutable std::atomic<int> peak_{0};
};

TEST(PipelineTest, ConcurrencyLimitsHold) {
  const std::vector<Problem> in = Fixture();
  Stubs stubs;
  PipelineConfig cfg = *ParseConfig("workers = 8\n");
  for (auto [limit, safe, want] :
       {std::tuple{2, true, 2}, std::tuple{0, false, 1}}) {
    CountingLoss loss(limit, safe);
    ProviderSet set = stubs.Set();
    set.loss = &loss;
    AugmentResult r = AugmentDataset(in, cfg, set);
    EXPECT_GE(loss.peak(), 1);
    EXPECT_LE(loss.peak(), want);
    EXPECT_EQ(r.stats.provider_failures(), 0);
  }
}

TEST(PipelineTest, StubBundleFromConfig) {
  PipelineConfig cfg = *ParseConfig("");
  absl::StatusOr<std::unique_ptr<ProviderBundle>> bundle =
      ProviderBundle::FromConfig(cfg);
  ASSERT_TRUE(bundle.ok()) << bundle.status();
  EXPECT_NE((*bundle)->set().loss, nullptr);
  EXPECT_NE((*bundle)->set().annotator, nullptr);

  cfg = *ParseConfig("provider.similarity = remote\n");
  unsetenv("MWPA_PROVIDER_SIMILARITY_URL");
  bundle = ProviderBundle::FromConfig(cfg);
  EXPECT_EQ(ErrorKind(bundle.status()), "provider_not_configured");
}

// ---- evaluation ----

TEST(EvalTest, ExportIsBlindSizedAndDeterministic) {
  const std::vector<Problem> in = Fixture();
  Stubs stubs;
  AugmentResult r =
      AugmentDataset(in, *ParseConfig("combine_mode = union\n"), stubs.Set());
  const int n_aug = r.stats.output_problems - r.stats.input_problems;
  ASSERT_GT(n_aug, 10);

  absl::StatusOr<EvalBatch> batch = ExportEvalBatch(r.problems, 0.1, 7);
  ASSERT_TRUE(batch.ok()) << batch.status();
  EXPECT_EQ(batch->items.size(), static_cast<size_t>(std::llround(0.1 * n_aug)));
  std::set<std::string> ids;
  for (const EvalItem& item : batch->items) {
    EXPECT_TRUE(ids.insert(item.blind_id).second);
    EXPECT_THAT(item.blind_id, ::testing::Not(HasSubstr(item.parent_id)));
  }
  // The batch file carries exactly three fields and no method.
  size_t pos = 0;
  const std::string text = batch->BatchJsonl();
  while (pos < text.size()) {
    size_t end = text.find('\n', pos);
    nlohmann::json j = nlohmann::json::parse(text.substr(pos, end - pos));
    EXPECT_EQ(j.size(), 3u);
    EXPECT_TRUE(j.contains("blind_id") && j.contains("original") &&
                j.contains("augmented"));
    pos = end + 1;
  }
  absl::StatusOr<EvalBatch> again = ExportEvalBatch(r.problems, 0.1, 7);
  EXPECT_EQ(again->BatchJsonl(), batch->BatchJsonl());
  EXPECT_EQ(again->KeyJsonl(), batch->KeyJsonl());
  absl::StatusOr<EvalBatch> other = ExportEvalBatch(r.problems, 0.1, 8);
  EXPECT_NE(other->KeyJsonl(), batch->KeyJsonl());

  EXPECT_EQ(ErrorKind(ExportEvalBatch(r.problems, 0, 1).status()),
            "bad_fraction");
  EXPECT_EQ(ErrorKind(ExportEvalBatch(r.problems, 1.5, 1).status()),
            "bad_fraction");
  std::vector<Problem> orphans(r.problems.begin() + 1, r.problems.end());
  EXPECT_EQ(ErrorKind(ExportEvalBatch(orphans, 1, 1).status()),
            "missing_parent");
}

TEST(EvalTest, RatingValidation) {
  absl::StatusOr<Rating> r = ParseRating(
      R"({"candidate_id":"s1","evaluator_id":"e","equation_preserved":true,)"
      R"("numbers_preserved":false,"semantic_similarity":0.5,"grammaticality":4})");
  ASSERT_TRUE(r.ok()) << r.status();
  EXPECT_EQ(r->grammaticality, 4);
  EXPECT_EQ(*ParseRating(RatingToJson(*r)), *r);
  for (const char* bad : {
           R"({"candidate_id":"s1","evaluator_id":"e","equation_preserved":true,"numbers_preserved":true,"semantic_similarity":1.5,"grammaticality":4})",
           R"({"candidate_id":"s1","evaluator_id":"e","equation_preserved":true,"numbers_preserved":true,"semantic_similarity":0.5,"grammaticality":6})",
           R"({"candidate_id":"s1","evaluator_id":"e","equation_preserved":true,"numbers_preserved":true,"semantic_similarity":0.5,"grammaticality":0})",
           R"({"candidate_id":"","evaluator_id":"e","equation_preserved":true,"numbers_preserved":true,"semantic_similarity":0.5,"grammaticality":3})",
           R"({"candidate_id":"s1","evaluator_id":"e","equation_preserved":1,"numbers_preserved":true,"semantic_similarity":0.5,"grammaticality":3})",
           R"({"candidate_id":"s1","evaluator_id":"e","equation_preserved":true,"numbers_preserved":true,"semantic_similarity":0.5,"grammaticality":2.5})",
           "[1,2]", "not json"}) {
    absl::StatusOr<Rating> b = ParseRating(bad);
    EXPECT_FALSE(b.ok()) << bad;
    EXPECT_EQ(ErrorKind(b.status()), "bad_rating") << bad;
  }
}

Rating R(const std::string& sample, const std::string& who, bool eq, bool num,
         double sim, int gram) {
  return Rating{sample, who, eq, num, sim, gram, ""};
}

TEST(EvalTest, SummaryAveragesEvaluatorsThenSamples) {
  std::map<std::string, EvalItem> key;
  key["a"].family = "paraphrase";
  key["b"].family = "paraphrase";
  key["c"].family = "substitution";
  const std::vector<Rating> ratings = {
      // Sample a: three evaluators, per-sample means 2/3, 1, 0.5, 4.
      R("a", "e1", true, true, 0.2, 3), R("a", "e2", true, true, 0.5, 4),
      R("a", "e3", false, true, 0.8, 5),
      // Sample b: one evaluator, rated twice; the second replaces the first.
      R("b", "e1", true, true, 0.9, 1), R("b", "e1", false, false, 0.1, 2),
      R("c", "e2", true, false, 1.0, 5),
      R("zz", "e1", true, true, 0.3, 3),
  };
  std::vector<FamilySummary> s = SummarizeRatings(ratings, key);
  ASSERT_EQ(s.size(), 4u);
  EXPECT_EQ(s[0].family, "paraphrase");
  EXPECT_EQ(s[0].samples, 2);
  EXPECT_EQ(s[0].ratings, 4);
  EXPECT_NEAR(s[0].equation_preserved_pct, 100.0 * (2.0 / 3 + 0) / 2, 1e-9);
  EXPECT_NEAR(s[0].numbers_preserved_pct, 100.0 * (1 + 0) / 2, 1e-9);
  EXPECT_NEAR(s[0].mean_similarity, (0.5 + 0.1) / 2, 1e-9);
  EXPECT_NEAR(s[0].mean_grammaticality, (4.0 + 2.0) / 2, 1e-9);
  EXPECT_EQ(s[1].family, "substitution");
  EXPECT_NEAR(s[1].numbers_preserved_pct, 0.0, 1e-12);
  EXPECT_NEAR(s[1].mean_grammaticality, 5.0, 1e-12);
  EXPECT_EQ(s[2].family, "unknown");
  EXPECT_EQ(s[3].family, "all");
  EXPECT_EQ(s[3].samples, 4);
  EXPECT_NEAR(s[3].mean_similarity, (0.5 + 0.1 + 1.0 + 0.3) / 4, 1e-9);

  // No ratings: no rows, nothing divided by zero.
  EXPECT_TRUE(SummarizeRatings({}, key).empty());
  EXPECT_EQ(FormatSummaryJson({}), "{\n  \"families\": []\n}\n");

  // Degenerate: all perfect.
  std::vector<FamilySummary> perfect = SummarizeRatings(
      {R("a", "e1", true, true, 1.0, 5), R("c", "e1", true, true, 1.0, 5)},
      key);
  for (const FamilySummary& f : perfect) {
    EXPECT_EQ(f.equation_preserved_pct, 100.0);
    EXPECT_EQ(f.numbers_preserved_pct, 100.0);
    EXPECT_EQ(f.mean_similarity, 1.0);
    EXPECT_EQ(f.mean_grammaticality, 5.0);
  }
  // Two evaluators, grammaticality 3 and 5, on one sample.
  std::vector<FamilySummary> two = SummarizeRatings(
      {R("c", "e1", true, true, 1.0, 3), R("c", "e2", true, true, 1.0, 5)},
      key);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].family, "substitution");
  EXPECT_EQ(two[0].mean_grammaticality, 4.0);
  EXPECT_THAT(FormatSummaryTable(s), HasSubstr("substitution"));
}

}  // namespace
}  // namespace mwpa
