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

// Drives the mwpa binary end to end through a shell, the way a user would.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include "absl/strings/str_cat.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "httplib.h"
#include "json.hpp"
#include "mwpa/common/file.h"
#include "mwpa/corpus/loaders.h"
#include "mwpa/pipeline/evaluation.h"
#include "mwpa/review/review_service.h"

namespace mwpa {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;
using ::testing::HasSubstr;

const fs::path kData = MWPA_TEST_DATA_DIR;

struct CliRun {
  int code;
  std::string out;
};

// Runs the CLI with `args`; stderr is discarded unless `keep_stderr`.
CliRun Cli(const std::string& args, bool keep_stderr = false) {
  const std::string cmd = absl::StrCat(MWPA_CLI_PATH, " ", args,
                                       keep_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string Slurp(const fs::path& p) {
  absl::StatusOr<std::string> s = ReadFile(p);
  return s.ok() ? *s : "<missing " + p.string() + ">";
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           absl::StrCat("mwpa_cli_", ::getpid(), "_",
                        ::testing::UnitTest::GetInstance()
                            ->current_test_info()
                            ->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string P(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, AugmentIsDeterministicAcrossWorkerCounts) {
  const std::string in = (kData / "mawps_fixture.json").string();
  for (auto [tag, workers] : {std::pair{"a", 1}, std::pair{"b", 6}}) {
    CliRun r = Cli(absl::StrCat("augment --in ", in, " --out ", P(tag + std::string(".jsonl")),
                             " --report ", P(tag + std::string(".report.jsonl")),
                             " --stats ", P(tag + std::string(".stats.json")),
                             " --seed 5 --workers ", workers));
    ASSERT_EQ(r.code, 0);
  }
  EXPECT_EQ(Slurp(P("a.jsonl")), Slurp(P("b.jsonl")));
  EXPECT_EQ(Slurp(P("a.report.jsonl")), Slurp(P("b.report.jsonl")));
  EXPECT_EQ(Slurp(P("a.stats.json")), Slurp(P("b.stats.json")));

  Json stats = Json::parse(Slurp(P("a.stats.json")));
  EXPECT_EQ(stats["input_problems"], 100);
  EXPECT_GT(stats["output_problems"].get<int>(), 100);

  // The output reloads as a canonical corpus with every record intact.
  absl::StatusOr<LoadResult> back =
      LoadCorpus(P("a.jsonl"), CorpusFormat::kCanonicalJsonl);
  ASSERT_TRUE(back.ok()) << back.status();
  EXPECT_EQ(back->problems.size(), stats["output_problems"].get<size_t>());
  EXPECT_TRUE(back->rejects.empty());
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(Cli("").code, 1);
  EXPECT_EQ(Cli("augment --bogus").code, 1);
  EXPECT_EQ(Cli("--help").code, 0);
  EXPECT_EQ(Cli(absl::StrCat("augment --in ", P("nope.json"), " --out ",
                             P("o.jsonl")))
                .code,
            2);
  EXPECT_EQ(Cli(absl::StrCat("eval-export --in ",
                             (kData / "mawps_fixture.json").string(),
                             " --fraction 1.5 --out ", P("b.jsonl")))
                .code,
            1);

  ASSERT_TRUE(WriteFile(P("bad.cfg"), "colour = blue\n").ok());
  CliRun bad = Cli(absl::StrCat("augment --in ",
                             (kData / "mawps_fixture.json").string(),
                             " --config ", P("bad.cfg"), " --out ", P("o.jsonl")),
                /*keep_stderr=*/true);
  EXPECT_EQ(bad.code, 1);
  EXPECT_THAT(bad.out, HasSubstr("config line 1"));
}

TEST_F(CliTest, UnreachableProviderExitsThreeButStillWrites) {
  // Three problems keep the retry back-off short.
  absl::StatusOr<LoadResult> all =
      LoadCorpus(kData / "mawps_fixture.json", CorpusFormat::kMawpsJson);
  ASSERT_TRUE(all.ok());
  all->problems.resize(3);
  ASSERT_TRUE(
      WriteFile(P("three.jsonl"), SerializeCanonicalJsonl(all->problems))
          .ok());
  ASSERT_TRUE(WriteFile(P("remote.cfg"),
                                "provider.translate = http://127.0.0.1:9\n")
                  .ok());
  CliRun r = Cli(absl::StrCat("augment --in ", P("three.jsonl"), " --config ",
                           P("remote.cfg"), " --out ", P("o.jsonl"),
                           " --stats ", P("o.stats.json")));
  EXPECT_EQ(r.code, 3);
  Json stats = Json::parse(Slurp(P("o.stats.json")));
  EXPECT_EQ(stats["input_problems"], 3);
  // Other methods still produced augmentations.
  EXPECT_GT(stats["output_problems"].get<int>(), 3);
  EXPECT_GT(stats["methods"]["round_trip"]["provider_errors"].get<int>(), 0);
}

TEST_F(CliTest, SplitAndPerturbWriteTheirFiles) {
  const std::string in = (kData / "asdiv_fixture.xml").string();
  ASSERT_EQ(Cli(absl::StrCat("split --in ", in, " --k 5 --seed 1 --out-dir ",
                             dir_.string()))
                .code,
            0);
  size_t test_total = 0;
  for (int i = 0; i < 5; ++i) {
    absl::StatusOr<LoadResult> t =
        LoadCorpus(dir_ / absl::StrCat("fold", i, "_test.jsonl"),
                   CorpusFormat::kCanonicalJsonl);
    ASSERT_TRUE(t.ok());
    test_total += t->problems.size();
  }
  EXPECT_EQ(test_total, 100u);

  ASSERT_EQ(Cli(absl::StrCat("perturb --kind question_drop --seed 3 --in ", in,
                             " --out ", P("qd.jsonl")))
                .code,
            0);
  Json manifest = Json::parse(Slurp(P("qd.jsonl") + ".manifest.json"));
  EXPECT_TRUE(manifest.is_object());
  EXPECT_EQ(Slurp(P("qd.jsonl")).find('?'), std::string::npos);
}

// The offline summary and the live service must agree byte for byte.
TEST_F(CliTest, EvalSummarizeMatchesServiceSummary) {
  const std::string in = (kData / "mawps_fixture.json").string();
  ASSERT_EQ(Cli(absl::StrCat("augment --in ", in, " --out ", P("aug.jsonl"),
                             " --seed 2"))
                .code,
            0);
  ASSERT_EQ(Cli(absl::StrCat("eval-export --in ", P("aug.jsonl"),
                             " --fraction 0.105 --seed 2 --out ",
                             P("batch.jsonl")))
                .code,
            0);
  absl::StatusOr<EvalBatch> batch = LoadEvalBatch(P("batch.jsonl"));
  ASSERT_TRUE(batch.ok()) << batch.status();
  ASSERT_EQ(batch->items.size(), 20u);
  absl::StatusOr<std::map<std::string, EvalItem>> key =
      LoadEvalKey(P("batch.jsonl") + ".key.jsonl");
  ASSERT_TRUE(key.ok()) << key.status();

  ReviewOptions options;
  options.ratings_path = P("ratings.jsonl");
  options.key = *key;
  auto service = ReviewService::Create(*batch, options);
  ASSERT_TRUE(service.ok()) << service.status();
  ASSERT_TRUE((*service)->Start("127.0.0.1", 0).ok());
  httplib::Client client("127.0.0.1", (*service)->port());

  int i = 0;
  for (const char* evaluator : {"ann", "ben"}) {
    for (const EvalItem& item : batch->items) {
      ++i;
      Json body = {{"evaluator_id", evaluator},
                   {"candidate_id", item.blind_id},
                   {"equation_preserved", i % 5 != 0},
                   {"numbers_preserved", i % 7 != 0},
                   {"semantic_similarity", (i % 11) / 10.0},
                   {"grammaticality", 1 + i % 5}};
      auto res = client.Post("/api/ratings", body.dump(), "application/json");
      ASSERT_TRUE(res);
      ASSERT_EQ(res->status, 201) << res->body;
    }
  }
  auto live = client.Get("/api/summary");
  ASSERT_TRUE(live);
  (*service)->Stop();

  CliRun offline = Cli(absl::StrCat("eval-summarize --ratings ", P("ratings.jsonl"),
                                 " --key ", P("batch.jsonl"), ".key.jsonl"));
  ASSERT_EQ(offline.code, 0);
  EXPECT_EQ(offline.out, live->body);
  EXPECT_THAT(offline.out, HasSubstr("\"all\""));
}

}  // namespace
}  // namespace mwpa
