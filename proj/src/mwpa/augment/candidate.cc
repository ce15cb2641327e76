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

#include "mwpa/augment/candidate.h"

#include <algorithm>
#include <utility>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "mwpa/common/status.h"
#include "mwpa/textlab/annotator.h"
#include "mwpa/textlab/tokenizer.h"

namespace mwpa {

std::string Candidate::Text() const {
  std::vector<std::string> parts = body;
  if (!question.empty()) parts.push_back(question);
  return absl::StrJoin(parts, " ");
}

Candidate MakeCandidate(absl::string_view text, const Problem& source,
                        Method method, std::vector<std::string> stage_trace) {
  Candidate c;
  c.parent_id = source.RootId();
  c.source_id = source.id;
  c.method = method;
  c.stage_trace = std::move(stage_trace);
  std::vector<std::string> sentences = SplitSentences(text);
  absl::StatusOr<int> q = FindQuestion(sentences);
  for (int i = 0; i < static_cast<int>(sentences.size()); ++i) {
    if (q.ok() && i == *q) {
      c.question = sentences[i];
    } else {
      c.body.push_back(sentences[i]);
    }
  }
  c.quantities = ExtractQuantities(c.body, c.question);
  return c;
}

std::vector<Rational> QuantityValues(const std::vector<Quantity>& quantities) {
  std::vector<Rational> values;
  values.reserve(quantities.size());
  for (const Quantity& q : quantities) values.push_back(q.value);
  std::sort(values.begin(), values.end());
  return values;
}

bool SameQuantities(const std::vector<Quantity>& a,
                    const std::vector<Quantity>& b) {
  return QuantityValues(a) == QuantityValues(b);
}

absl::Status CheckCandidate(const Problem& source, const Candidate& c) {
  if (NormalizeText(c.Text()) == NormalizeText(source.Text())) {
    return MakeError(absl::StatusCode::kFailedPrecondition,
                     augment_errors::kUnchanged,
                     absl::StrCat(source.id, ": rewrite equals its source"));
  }
  if (!SameQuantities(source.quantities, c.quantities)) {
    return MakeError(absl::StatusCode::kFailedPrecondition,
                     augment_errors::kNumbersChanged,
                     absl::StrCat(source.id, ": rewrite changed quantities"));
  }
  return absl::OkStatus();
}

absl::StatusOr<Problem> CandidateToProblem(const Candidate& c,
                                           const Problem& parent,
                                           std::string id) {
  ProblemSpec spec;
  spec.id = std::move(id);
  spec.body = c.body;
  spec.question = c.question;
  spec.equation = parent.equation.source_text().empty()
                      ? parent.equation.ToString()
                      : parent.equation.source_text();
  spec.source = Source::kAugmented;
  spec.provenance = AugmentationTag{c.parent_id, c.method, c.stage_trace};
  spec.expected_answer = parent.answer;
  return BuildProblem(spec);
}

absl::StatusOr<Problem> WithQuestion(const Problem& p, std::string question,
                                     std::string id) {
  ProblemSpec spec;
  spec.id = std::move(id);
  spec.body = p.body;
  spec.question = std::move(question);
  spec.equation = p.equation.source_text().empty() ? p.equation.ToString()
                                                   : p.equation.source_text();
  spec.source = p.source;
  spec.provenance = p.provenance;
  spec.expected_answer = p.answer;
  return BuildProblem(spec);
}

}  // namespace mwpa
