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

#ifndef MWPA_PERTURB_PERTURB_H_
#define MWPA_PERTURB_PERTURB_H_

// Label-preserving corruptions of test problems. A solver that still
// "answers" a problem with its question deleted is matching surface cues.

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "mwpa/corpus/problem.h"

namespace mwpa {

enum class PerturbKind {
  kWordDelete,
  kQuestionDrop,
  kQuestionReorder,  // question moved to the front, no filler words
  kSentenceShuffle,
  kWordReorder,
};

absl::string_view PerturbKindName(PerturbKind kind);
absl::StatusOr<PerturbKind> ParsePerturbKind(absl::string_view name);

inline constexpr double kDefaultDeleteRate = 0.10;

struct PerturbationSpec {
  PerturbKind kind = PerturbKind::kWordDelete;
  double rate = kDefaultDeleteRate;  // word_delete only
  uint64_t seed = 0;

  absl::Status Validate() const;
};

// Equation, answer, id and provenance are carried over untouched; the text
// changes and quantities are re-extracted. Numerals are never removed or
// edited. question_drop keeps a leading condition clause ("If ... ,") and
// skips problems whose interrogative clause holds a number. Error kind
// "precondition" when the problem cannot take this kind
// (e.g. shuffling a one-sentence body).
absl::StatusOr<Problem> PerturbProblem(const Problem& p,
                                       const PerturbationSpec& spec);

struct PerturbSkip {
  std::string id;
  std::string reason;
};

struct PerturbResult {
  std::vector<Problem> problems;  // input order
  std::vector<PerturbSkip> skipped;

  // {"kind","rate","seed","input","output","skipped":[{"id","reason"}]}
  std::string ManifestJson(const PerturbationSpec& spec) const;
};

PerturbResult PerturbCorpus(const std::vector<Problem>& problems,
                            const PerturbationSpec& spec);

}  // namespace mwpa

#endif  // MWPA_PERTURB_PERTURB_H_
