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

#ifndef MWPA_PROVIDERS_STUBS_H_
#define MWPA_PROVIDERS_STUBS_H_

// Deterministic offline providers. They let the full pipeline run without
// any model, backed by the tables in data/lexicons/.

#include <filesystem>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "mwpa/providers/providers.h"

namespace mwpa {

// Token-level rewrite rule, lower-case on both sides.
struct PhraseRule {
  std::vector<std::string> source;
  std::vector<std::string> target;
};

struct SynonymEntry {
  std::string word;
  double cosine = 0;
  std::string pos;
};

struct FillRule {
  std::string left;   // "*" = any, "NUM" = any numeral
  std::string right;
  std::vector<std::string> fills;
};

struct StubTables {
  std::vector<PhraseRule> question_rules;
  // Pivot language code -> rules applied when translating back to English.
  std::map<std::string, std::vector<PhraseRule>> phrase_table;
  std::map<std::string, std::vector<SynonymEntry>> synonyms;
  std::vector<FillRule> fill_rules;

  static absl::StatusOr<StubTables> Load(const std::filesystem::path& dir);
  static const StubTables& Default();
};

// Rewrites `tokens` left to right, at each position applying the longest
// matching rule (case-insensitive). A rewritten sentence-initial word keeps
// its capital.
std::vector<std::string> ApplyPhraseRules(
    const std::vector<std::string>& tokens,
    const std::vector<PhraseRule>& rules);

// Question paraphraser: each variant applies one or two question_rules.
class LexiconParaphraser : public ParaphraseProvider {
 public:
  explicit LexiconParaphraser(const StubTables& tables = StubTables::Default())
      : tables_(tables) {}
  absl::StatusOr<std::vector<std::string>> Generate(absl::string_view text,
                                                    int n) const override;

 private:
  const StubTables& tables_;
};

// Returns the input unchanged. Useful for no-change rejection tests.
class EchoParaphraser : public ParaphraseProvider {
 public:
  absl::StatusOr<std::vector<std::string>> Generate(absl::string_view text,
                                                    int n) const override;
};

class IdentityTranslator : public TranslationProvider {
 public:
  absl::StatusOr<std::string> Translate(absl::string_view text,
                                        absl::string_view source,
                                        absl::string_view target)
      const override;
};

// Fake pivot languages: going out, the text is tagged with the pivot code;
// coming back to English, each visited pivot's phrase rules are applied.
class PhraseTableTranslator : public TranslationProvider {
 public:
  explicit PhraseTableTranslator(
      const StubTables& tables = StubTables::Default())
      : tables_(tables) {}
  absl::StatusOr<std::string> Translate(absl::string_view text,
                                        absl::string_view source,
                                        absl::string_view target)
      const override;

 private:
  const StubTables& tables_;
};

// On the way back to English, rotates sentences by one and optionally
// deletes the first placeholder token, to exercise divergence handling.
class ShuffleTranslator : public TranslationProvider {
 public:
  explicit ShuffleTranslator(bool drop_placeholder = false)
      : drop_placeholder_(drop_placeholder) {}
  absl::StatusOr<std::string> Translate(absl::string_view text,
                                        absl::string_view source,
                                        absl::string_view target)
      const override;

 private:
  bool drop_placeholder_;
};

// Looks up (left neighbour, right neighbour) of each mask in fill_rules.
class ContextTableFiller : public MaskFillProvider {
 public:
  explicit ContextTableFiller(const StubTables& tables = StubTables::Default())
      : tables_(tables) {}
  absl::StatusOr<std::vector<std::vector<std::string>>> Fill(
      absl::string_view masked_text, int top_k) const override;

 private:
  const StubTables& tables_;
};

class SynonymTableEmbeddings : public WordEmbeddingProvider {
 public:
  explicit SynonymTableEmbeddings(
      const StubTables& tables = StubTables::Default())
      : tables_(tables) {}
  absl::StatusOr<std::vector<Neighbor>> Nearest(absl::string_view word,
                                                int top_k) const override;

 private:
  const StubTables& tables_;
};

// Cosine of case-folded token count vectors.
double StubSimilarity(absl::string_view a, absl::string_view b);

// -log(u) with u in (0, 1) drawn from a stable hash of the text and the
// printed equation. Deterministic, finite, non-negative.
double StubLoss(absl::string_view problem_text, const Equation& equation);

class TokenCosineSimilarity : public SimilarityProvider {
 public:
  absl::StatusOr<double> Similarity(absl::string_view a,
                                    absl::string_view b) const override {
    return StubSimilarity(a, b);
  }
};

class HashedLoss : public SolverLossProvider {
 public:
  absl::StatusOr<double> Loss(absl::string_view problem_text,
                              const Equation& equation) const override {
    return StubLoss(problem_text, equation);
  }
};

}  // namespace mwpa

#endif  // MWPA_PROVIDERS_STUBS_H_
