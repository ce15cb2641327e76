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

#include <chrono>
#include <cmath>
#include <set>
#include <string>
#include <thread>

#include "absl/strings/str_cat.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "httplib.h"
#include "mwpa/common/status.h"
#include "mwpa/equation/parser.h"
#include "mwpa/providers/remote.h"
#include "mwpa/providers/server.h"
#include "mwpa/providers/stubs.h"
#include "mwpa/textlab/tokenizer.h"

namespace mwpa {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;

Equation Eq(absl::string_view text) { return *ParseEquation(text); }

TEST(StubSimilarityTest, WorkedValues) {
  EXPECT_DOUBLE_EQ(StubSimilarity("Tom has 3 apples", "Tom has 3 apples"), 1.0);
  EXPECT_DOUBLE_EQ(StubSimilarity("red fox", "blue whale"), 0.0);
  EXPECT_NEAR(StubSimilarity("a b b", "a b"), 3.0 / std::sqrt(10.0), 1e-12);
  // Case-folded.
  EXPECT_DOUBLE_EQ(StubSimilarity("A B", "a b"), 1.0);
  EXPECT_DOUBLE_EQ(StubSimilarity("x y z", "z y"),
                   StubSimilarity("z y", "x y z"));
}

TEST(StubSimilarityTest, PassesStartupProbe) {
  TokenCosineSimilarity sim;
  EXPECT_TRUE(ProbeSimilarity(sim).ok());
}

TEST(StubLossTest, DeterministicNonNegativeAndKeyedOnText) {
  const Equation eq = Eq("X = 8+5");
  EXPECT_EQ(StubLoss("Nancy grew 8 potatoes .", eq),
            StubLoss("Nancy grew 8 potatoes .", eq));
  EXPECT_NE(StubLoss("Nancy grew 8 potatoes .", eq),
            StubLoss("Nancy grew 8 potatoes .", Eq("X = 8-5")));

  std::set<double> seen;
  int collisions = 0;
  for (int i = 0; i < 1000; ++i) {
    double a = StubLoss(absl::StrCat("Sam has ", i, " pens ."), eq);
    double b = StubLoss(absl::StrCat("Sam has ", i, " pens now ."), eq);
    ASSERT_TRUE(std::isfinite(a));
    ASSERT_GE(a, 0.0);
    if (a == b) ++collisions;
    seen.insert(a);
  }
  EXPECT_LT(collisions, 10);
  EXPECT_GT(seen.size(), 990u);
}

TEST(LexiconParaphraserTest, RewritesTheQuestion) {
  LexiconParaphraser p;
  auto out = p.Generate("How many potatoes did they grow in total ?", 7);
  ASSERT_TRUE(out.ok());
  ASSERT_FALSE(out->empty());
  EXPECT_LE(out->size(), 7u);
  EXPECT_EQ((*out)[0], "How many potatoes did they grow in all ?");
  for (const std::string& s : *out) {
    EXPECT_NE(s, "How many potatoes did they grow in total ?");
  }
  EXPECT_EQ(p.Generate("How many potatoes did they grow in total ?", 2)
                ->size(),
            2u);
}

TEST(PhraseTableTranslatorTest, RussianRoundTripRewrites) {
  PhraseTableTranslator t;
  const std::string text =
      "The schools debate team had QTY0 boys and QTY1 girls on it .";
  auto ru = t.Translate(text, "en", "ru");
  ASSERT_TRUE(ru.ok());
  EXPECT_EQ(*ru, "[ru] " + text);
  auto back = t.Translate(*ru, "ru", "en");
  ASSERT_TRUE(back.ok());
  EXPECT_EQ(*back,
            "The schools discussion group consisted of QTY0 boys and QTY1 "
            "girls on it .");
}

TEST(PhraseTableTranslatorTest, MultiHopAndErrors) {
  PhraseTableTranslator t;
  auto de = t.Translate("Sam found a hat .", "en", "de");
  auto fr = t.Translate(*de, "de", "fr");
  EXPECT_EQ(*fr, "[de] [fr] Sam found a hat .");
  EXPECT_EQ(*t.Translate(*fr, "fr", "en"), "Sam came across a hat .");
  EXPECT_EQ(ErrorKind(t.Translate(*de, "fr", "en").status()),
            "language_mismatch");
  EXPECT_EQ(ErrorKind(t.Translate("x", "en", "zh").status()),
            "unsupported_language");
}

TEST(ShuffleTranslatorTest, RotatesAndDrops) {
  ShuffleTranslator keep;
  ShuffleTranslator drop(/*drop_placeholder=*/true);
  EXPECT_EQ(*keep.Translate("A has QTY0 . B has QTY1 .", "ru", "en"),
            "B has QTY1 . A has QTY0 .");
  EXPECT_EQ(*drop.Translate("A has QTY0 . B has QTY1 .", "ru", "en"),
            "B has . A has QTY0 .");
}

TEST(ContextTableFillerTest, FillsFromContext) {
  ContextTableFiller f;
  auto out = f.Fill("Park workers will plant 3 more walnut trees <mask> .", 10);
  ASSERT_TRUE(out.ok());
  ASSERT_EQ(out->size(), 1u);
  EXPECT_THAT((*out)[0], ElementsAre("soon", "tomorrow", "later"));
  auto capped = f.Fill("walnut trees <mask> . <mask> game", 1);
  ASSERT_EQ(capped->size(), 2u);
  EXPECT_THAT((*capped)[0], ElementsAre("soon"));
}

TEST(SynonymTableEmbeddingsTest, DescendingWithoutQuery) {
  SynonymTableEmbeddings e;
  auto out = e.Nearest("team", 10);
  ASSERT_TRUE(out.ok());
  ASSERT_FALSE(out->empty());
  EXPECT_EQ((*out)[0].word, "group");
  for (size_t i = 1; i < out->size(); ++i) {
    EXPECT_GE((*out)[i - 1].cosine, (*out)[i].cosine);
    EXPECT_NE((*out)[i].word, "team");
  }
  EXPECT_TRUE(e.Nearest("zzzz", 5)->empty());
}

// --- remote clients against live local servers ---

RemoteOptions Fast(const std::string& url) {
  RemoteOptions o;
  o.base_url = url;
  o.timeout_ms = 2000;
  o.initial_backoff_ms = 5;
  return o;
}

class ServedStubsTest : public ::testing::Test {
 protected:
  void SetUp() override {
    ServedProviders p;
    p.paraphrase = &paraphrase_;
    p.translate = &translate_;
    p.fill = &fill_;
    p.nearest = &nearest_;
    p.similarity = &similarity_;
    p.loss = &loss_;
    server_ = std::make_unique<ProviderServer>(p);
    ASSERT_TRUE(server_->Start("127.0.0.1", 0).ok());
  }

  LexiconParaphraser paraphrase_;
  PhraseTableTranslator translate_;
  ContextTableFiller fill_;
  SynonymTableEmbeddings nearest_;
  TokenCosineSimilarity similarity_;
  HashedLoss loss_;
  std::unique_ptr<ProviderServer> server_;
};

TEST_F(ServedStubsTest, EveryEndpointRoundTrips) {
  const RemoteOptions o = Fast(server_->base_url());
  const std::string q = "How many potatoes did they grow in total ?";
  EXPECT_EQ(*RemoteParaphraser(o).Generate(q, 3), *paraphrase_.Generate(q, 3));

  RemoteTranslator rt(o);
  auto ru = rt.Translate("The debate team had QTY0 boys .", "en", "ru");
  ASSERT_TRUE(ru.ok());
  EXPECT_EQ(*rt.Translate(*ru, "ru", "en"),
            "The discussion group consisted of QTY0 boys .");
  EXPECT_EQ(ErrorKind(rt.Translate("x", "en", "zh").status()),
            "provider_error");

  EXPECT_EQ(*RemoteMaskFiller(o).Fill("walnut trees <mask> .", 2),
            *fill_.Fill("walnut trees <mask> .", 2));
  auto near = RemoteEmbeddings(o).Nearest("team", 3);
  ASSERT_TRUE(near.ok());
  ASSERT_EQ(near->size(), nearest_.Nearest("team", 3)->size());
  EXPECT_EQ((*near)[0].word, "group");

  RemoteSimilarity rs(o);
  EXPECT_DOUBLE_EQ(*rs.Similarity("a b b", "a b"), StubSimilarity("a b b", "a b"));
  EXPECT_TRUE(ProbeSimilarity(rs).ok());

  const Equation eq = Eq("X = 8+5");
  EXPECT_DOUBLE_EQ(*RemoteLoss(o).Loss("Nancy grew 8 .", eq),
                   StubLoss("Nancy grew 8 .", eq));
}

TEST_F(ServedStubsTest, BadRequestIsHttpError) {
  httplib::Client c(server_->base_url());
  auto res = c.Post("/paraphrase", R"({"text": 3})", "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 400);

  RemoteClient client(Fast(server_->base_url()));
  auto r = client.Call("paraphrase", {{"text", "x"}});
  EXPECT_EQ(ErrorKind(r.status()), "http_error");
}

// Raw fixture server for failure modes the stubs never produce.
class FixtureServer {
 public:
  FixtureServer() {
    server_.Post("/broken", [this](const httplib::Request&,
                                   httplib::Response& res) {
      ++hits_;
      res.status = 500;
      res.set_content("boom", "text/plain");
    });
    server_.Post("/truncated", [](const httplib::Request&,
                                  httplib::Response& res) {
      res.set_content(R"({"ok":true})", "application/json");
    });
    server_.Post("/nearest", [](const httplib::Request&,
                                httplib::Response& res) {
      res.set_content(R"({"ok":true,"result":[{"word":"group"}]})",
                      "application/json");
    });
    server_.Post("/garbage", [](const httplib::Request&,
                                httplib::Response& res) {
      res.set_content("{not json", "application/json");
    });
    server_.Post("/slow", [](const httplib::Request&, httplib::Response& res) {
      std::this_thread::sleep_for(std::chrono::milliseconds(600));
      res.set_content(R"({"ok":true,"result":1})", "application/json");
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }
  ~FixtureServer() {
    server_.stop();
    thread_.join();
  }
  std::string url() const { return absl::StrCat("http://127.0.0.1:", port_); }
  int hits() const { return hits_; }

 private:
  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
  std::atomic<int> hits_{0};
};

TEST(RemoteClientTest, ExhaustedRetriesAreUnavailable) {
  FixtureServer fx;
  RemoteClient client(Fast(fx.url()));
  auto r = client.Call("broken", {{"x", 1}});
  EXPECT_EQ(r.status().code(), absl::StatusCode::kUnavailable);
  EXPECT_EQ(ErrorKind(r.status()), "provider_unavailable");
  EXPECT_EQ(fx.hits(), 3);
}

TEST(RemoteClientTest, MalformedResponsesNameTheField) {
  FixtureServer fx;
  RemoteClient client(Fast(fx.url()));
  auto r = client.Call("truncated", {{"x", 1}});
  EXPECT_EQ(ErrorKind(r.status()), "malformed_response");
  EXPECT_THAT(std::string(r.status().message()), HasSubstr("'result'"));

  auto n = RemoteEmbeddings(Fast(fx.url())).Nearest("team", 3);
  EXPECT_EQ(ErrorKind(n.status()), "malformed_response");
  EXPECT_THAT(std::string(n.status().message()), HasSubstr("cosine"));

  EXPECT_EQ(ErrorKind(client.Call("garbage", {}).status()),
            "malformed_response");
}

TEST(RemoteClientTest, SlowServerTimesOut) {
  FixtureServer fx;
  RemoteOptions o = Fast(fx.url());
  o.timeout_ms = 150;
  o.attempts = 2;
  auto r = RemoteClient(o).Call("slow", {});
  EXPECT_EQ(r.status().code(), absl::StatusCode::kDeadlineExceeded);
  EXPECT_EQ(ErrorKind(r.status()), "timeout");
}

TEST(RemoteClientTest, NothingListeningIsUnavailable) {
  RemoteOptions o = Fast("http://127.0.0.1:1");
  o.attempts = 2;
  EXPECT_EQ(ErrorKind(RemoteClient(o).Call("x", {}).status()),
            "provider_unavailable");
}

TEST(RemoteOptionsTest, ReadsEnvironment) {
  unsetenv("MWPA_PROVIDER_FILL_URL");
  EXPECT_EQ(ErrorKind(RemoteOptionsFromEnv("fill").status()),
            "provider_not_configured");
  setenv("MWPA_PROVIDER_FILL_URL", "http://127.0.0.1:9", 1);
  setenv("MWPA_PROVIDER_TIMEOUT_MS", "250", 1);
  auto o = RemoteOptionsFromEnv("fill");
  ASSERT_TRUE(o.ok());
  EXPECT_EQ(o->base_url, "http://127.0.0.1:9");
  EXPECT_EQ(o->timeout_ms, 250);
  unsetenv("MWPA_PROVIDER_FILL_URL");
  unsetenv("MWPA_PROVIDER_TIMEOUT_MS");
}

}  // namespace
}  // namespace mwpa
