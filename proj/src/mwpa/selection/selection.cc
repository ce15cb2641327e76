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

#include "mwpa/selection/selection.h"

#include <algorithm>
#include <cmath>

#include "absl/strings/str_cat.h"
#include "json.hpp"
#include "mwpa/common/status.h"

namespace mwpa {

double NormalizedLoss(double loss_candidate, double loss_parent) {
  return (loss_candidate - loss_parent) / std::max(loss_parent, kLossFloor);
}

size_t ArgmaxScore(absl::Span<const double> similarities,
                   absl::Span<const double> scores) {
  size_t best = 0;
  for (size_t j = 1; j < scores.size(); ++j) {
    if (scores[j] > scores[best] ||
        (scores[j] == scores[best] && similarities[j] > similarities[best])) {
      best = j;
    }
  }
  return best;
}

absl::StatusOr<size_t> SelectBest(const Problem& parent,
                                  std::vector<Candidate>& candidates,
                                  const SimilarityProvider& similarity,
                                  const SolverLossProvider& loss) {
  if (candidates.empty()) {
    return MakeError(absl::StatusCode::kNotFound, "no_candidates",
                     absl::StrCat(parent.id, ": nothing to choose from"));
  }
  const std::string parent_text = parent.Text();
  absl::StatusOr<double> base = loss.Loss(parent_text, parent.equation);
  if (!base.ok()) return base.status();

  std::vector<double> sims, scores;
  for (Candidate& c : candidates) {
    const std::string text = c.Text();
    absl::StatusOr<double> s = similarity.Similarity(text, parent_text);
    if (!s.ok()) return s.status();
    absl::StatusOr<double> l = loss.Loss(text, parent.equation);
    if (!l.ok()) return l.status();
    c.similarity = *s;
    c.normalized_loss = NormalizedLoss(*l, *base);
    c.score = c.similarity * c.normalized_loss;
    if (!std::isfinite(c.score)) {
      return MakeError(absl::StatusCode::kOutOfRange, "non_finite_score",
                       absl::StrCat(parent.id, ": score ", c.score));
    }
    sims.push_back(c.similarity);
    scores.push_back(c.score);
  }
  return ArgmaxScore(sims, scores);
}

std::string DecisionToJson(const SelectionDecision& d) {
  nlohmann::ordered_json j;
  j["parent_id"] = d.parent_id;
  j["method"] = d.label;
  j["n_candidates"] = d.n_candidates;
  if (d.chosen_index) {
    j["chosen_index"] = *d.chosen_index;
    j["S"] = d.similarity;
    j["L"] = d.normalized_loss;
    j["score"] = d.score;
  } else {
    j["chosen_index"] = nullptr;
    j["S"] = nullptr;
    j["L"] = nullptr;
    j["score"] = nullptr;
  }
  if (!d.error.empty()) j["error"] = d.error;
  return j.dump();
}

std::string BatchSelection::ReportJsonl() const {
  std::string out;
  for (const SelectionDecision& d : decisions) {
    absl::StrAppend(&out, DecisionToJson(d), "\n");
  }
  return out;
}

BatchSelection BatchSelect(std::vector<ScoredSet>& sets,
                           const SimilarityProvider& similarity,
                           const SolverLossProvider& loss) {
  BatchSelection batch;
  for (ScoredSet& set : sets) {
    SelectionDecision d;
    d.parent_id = set.parent->id;
    d.label = set.label;
    d.n_candidates = set.candidates.size();
    LabelCounters& counters = batch.counters[set.label];
    absl::StatusOr<size_t> chosen =
        SelectBest(*set.parent, set.candidates, similarity, loss);
    if (chosen.ok()) {
      set.chosen_index = *chosen;
      const Candidate& c = set.candidates[*chosen];
      d.chosen_index = *chosen;
      d.similarity = c.similarity;
      d.normalized_loss = c.normalized_loss;
      d.score = c.score;
      ++counters.selected;
    } else {
      std::string kind = ErrorKind(chosen.status());
      d.error = kind.empty() ? std::string(chosen.status().message()) : kind;
      ++(kind == "no_candidates" ? counters.no_candidate : counters.failed);
    }
    batch.decisions.push_back(std::move(d));
  }
  return batch;
}

}  // namespace mwpa
