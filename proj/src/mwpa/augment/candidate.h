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

#ifndef MWPA_AUGMENT_CANDIDATE_H_
#define MWPA_AUGMENT_CANDIDATE_H_

#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "mwpa/corpus/problem.h"

namespace mwpa {

// Error kinds shared by the augmentation methods.
namespace augment_errors {
inline constexpr char kUnchanged[] = "unchanged";
inline constexpr char kNumbersChanged[] = "numbers_changed";
inline constexpr char kPlaceholderCorruption[] = "placeholder_corruption";
inline constexpr char kNoBody[] = "no_body";
inline constexpr char kNoQuestion[] = "no_question";
}  // namespace augment_errors

// One augmented rewrite of a problem, before it is accepted into a corpus.
// Kept separate from Problem because a candidate may break the problem
// invariants; the gates decide.
struct Candidate {
  std::string parent_id;  // the original problem
  std::string source_id;  // what the method was applied to (original or base)
  Method method = Method::kProblemReorder;
  std::vector<std::string> body;
  std::string question;  // empty if no sentence reads as a question
  std::vector<Quantity> quantities;
  std::vector<std::string> stage_trace;

  // Filled by selection.
  double similarity = 0;
  double normalized_loss = 0;
  double score = 0;

  std::string Text() const;
};

// Splits `text` into sentences, picks the question with FindQuestion and
// re-extracts quantities.
Candidate MakeCandidate(absl::string_view text, const Problem& source,
                        Method method, std::vector<std::string> stage_trace);

// Sorted quantity values, the multiset the hard gate compares.
std::vector<Rational> QuantityValues(const std::vector<Quantity>& quantities);
bool SameQuantities(const std::vector<Quantity>& a,
                    const std::vector<Quantity>& b);

// Fails with "unchanged" or "numbers_changed" when `c` may not leave the
// method that made it.
absl::Status CheckCandidate(const Problem& source, const Candidate& c);

// Accepted candidate as a corpus record. Equation and answer are copied
// from `parent`; the record is rebuilt and re-checked like a loaded one.
absl::StatusOr<Problem> CandidateToProblem(const Candidate& c,
                                           const Problem& parent,
                                           std::string id);

// Problem rebuilt with a new question, everything else from `p`. Used for
// primary-stage bases.
absl::StatusOr<Problem> WithQuestion(const Problem& p, std::string question,
                                     std::string id);

}  // namespace mwpa

#endif  // MWPA_AUGMENT_CANDIDATE_H_
