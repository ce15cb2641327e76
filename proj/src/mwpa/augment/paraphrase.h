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

#ifndef MWPA_AUGMENT_PARAPHRASE_H_
#define MWPA_AUGMENT_PARAPHRASE_H_

// Paraphrasing family: question paraphrases for the primary stage, problem
// reordering and round-trip translation.

#include <string>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "mwpa/augment/candidate.h"
#include "mwpa/corpus/problem.h"
#include "mwpa/providers/providers.h"
#include "mwpa/textlab/annotator.h"

namespace mwpa {

inline constexpr int kDefaultBaseCandidates = 7;

struct PrimaryStageResult {
  std::vector<Problem> bases;  // ids "<parent>#b<i>"
  int dropped = 0;             // unchanged, lost a number, or unparseable
  absl::Status warning;        // provider failure; bases is then empty
};

// Up to n copies of `p` whose question is replaced by a provider
// paraphrase. A paraphrase must differ from the question and keep the
// question's numbers.
PrimaryStageResult PrimaryStage(const Problem& p, int n,
                                const ParaphraseProvider& provider);

enum class ReorderTemplate { kIfThen, kGivenThat };

// If-then for questions phrased as a consequence ("would", "will", "then"
// ...), given-that otherwise.
ReorderTemplate ChooseTemplate(absl::string_view question);

// Fronts or backs the question with filler phrases. Errors "no_body",
// "no_question".
absl::StatusOr<Candidate> ReorderProblem(const Problem& p,
                                         const AnnotatorBackend& annotator);

// True if the content words of `p`'s body appear in `text` in the same
// order. Stop words are skipped; comparison is case-folded.
bool PreservesEventOrder(const Problem& p, absl::string_view text,
                         const Lexicons& lexicons = Lexicons::Default());

// Placeholder token -> original surface, in text order.
struct ProtectionMap {
  std::vector<std::pair<std::string, std::string>> entries;
};

struct ProtectedText {
  std::string text;
  ProtectionMap map;
};

// Replaces each numeral token with "QTY<i>". Only the numeral bytes change.
// Error "placeholder_collision" if the text already holds such a token.
absl::StatusOr<ProtectedText> ProtectQuantities(absl::string_view text);

// Puts the surfaces back. Every placeholder must occur exactly once and no
// unknown one may appear, else "placeholder_corruption".
absl::StatusOr<std::string> RestoreQuantities(absl::string_view text,
                                              const ProtectionMap& map);

struct TranslationRoute {
  std::string name;
  std::vector<std::string> languages;  // first and last are "en"
};

const TranslationRoute& RouteEnRuEn();
const TranslationRoute& RouteEnDeFrEn();
absl::StatusOr<TranslationRoute> ParseRoute(absl::string_view name);

// protect -> translate hop by hop -> restore -> gate.
absl::StatusOr<Candidate> RoundTrip(const Problem& p,
                                    const TranslationRoute& route,
                                    const TranslationProvider& provider);

}  // namespace mwpa

#endif  // MWPA_AUGMENT_PARAPHRASE_H_
