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

#ifndef MWPA_SELECTION_SELECTION_H_
#define MWPA_SELECTION_SELECTION_H_

// Candidate selection: score = similarity to the parent times the relative
// increase in solver loss, then argmax.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/types/span.h"
#include "mwpa/augment/candidate.h"
#include "mwpa/corpus/problem.h"
#include "mwpa/providers/providers.h"

namespace mwpa {

// Guards the division when the parent's loss is zero.
inline constexpr double kLossFloor = 1e-9;

// (loss_c - loss_p) / max(loss_p, kLossFloor).
double NormalizedLoss(double loss_candidate, double loss_parent);

// Index of the highest score. Ties go to the higher similarity, then to the
// lower index. `scores` must be non-empty and as long as `similarities`.
size_t ArgmaxScore(absl::Span<const double> similarities,
                   absl::Span<const double> scores);

// Fills similarity, normalized_loss and score on every candidate and returns
// the chosen index. Errors: "no_candidates", "non_finite_score", or the
// provider's own error.
absl::StatusOr<size_t> SelectBest(const Problem& parent,
                                  std::vector<Candidate>& candidates,
                                  const SimilarityProvider& similarity,
                                  const SolverLossProvider& loss);

// One pool of candidates competing for a single slot: a parent and either a
// method or a method family, depending on how the corpus is combined.
struct ScoredSet {
  const Problem* parent = nullptr;
  std::string label;  // method or family name
  std::vector<Candidate> candidates;
  std::optional<size_t> chosen_index;
};

struct SelectionDecision {
  std::string parent_id;
  std::string label;
  size_t n_candidates = 0;
  std::optional<size_t> chosen_index;
  double similarity = 0;
  double normalized_loss = 0;
  double score = 0;
  std::string error;  // why nothing was chosen, if so
};

// {"parent_id","method","n_candidates","chosen_index","S","L","score"}
// plus "error" when set. Fixed key order and number formatting.
std::string DecisionToJson(const SelectionDecision& d);

struct LabelCounters {
  int selected = 0;
  int no_candidate = 0;
  int failed = 0;  // provider errors while scoring
};

struct BatchSelection {
  std::vector<SelectionDecision> decisions;  // in input order
  std::map<std::string, LabelCounters> counters;

  std::string ReportJsonl() const;
};

// SelectBest over every set, in order. Never fails as a whole: sets that
// cannot be scored are recorded as decisions without a chosen index.
BatchSelection BatchSelect(std::vector<ScoredSet>& sets,
                           const SimilarityProvider& similarity,
                           const SolverLossProvider& loss);

}  // namespace mwpa

#endif  // MWPA_SELECTION_SELECTION_H_
