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

#ifndef MWPA_CORPUS_PROBLEM_H_
#define MWPA_CORPUS_PROBLEM_H_

#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "mwpa/equation/alignment.h"
#include "mwpa/equation/expr.h"

namespace mwpa {

enum class Source { kMawps, kAsdiv, kAugmented, kOther };

absl::string_view SourceName(Source source);
absl::StatusOr<Source> ParseSource(absl::string_view name);

enum class Method { kProblemReorder, kRoundTrip, kFillMask, kSynonym, kEntity };
enum class Family { kParaphrase, kSubstitution };

inline constexpr Method kAllMethods[] = {
    Method::kProblemReorder, Method::kRoundTrip, Method::kFillMask,
    Method::kSynonym, Method::kEntity};

absl::string_view MethodName(Method method);
absl::StatusOr<Method> ParseMethod(absl::string_view name);
Family FamilyOf(Method method);
absl::string_view FamilyName(Family family);

// Segment value for quantities found in the question sentence.
inline constexpr int kQuestionSegment = -1;

struct Quantity {
  std::string surface;
  Rational value;
  // Sentence index in the body, or kQuestionSegment.
  int segment = 0;
  // Token index within that sentence.
  int token_index = 0;
  // 0..m-1 in text order.
  int placeholder_id = 0;

  friend bool operator==(const Quantity&, const Quantity&) = default;
};

struct AugmentationTag {
  std::string parent_id;
  Method method = Method::kProblemReorder;
  std::vector<std::string> stage_trace;

  friend bool operator==(const AugmentationTag&,
                         const AugmentationTag&) = default;
};

struct Problem {
  std::string id;
  std::vector<std::string> body;  // normalized sentences
  std::string question;           // normalized; may be empty
  std::vector<Quantity> quantities;
  Equation equation;
  Rational answer;
  Source source = Source::kOther;
  std::optional<AugmentationTag> provenance;

  // Body sentences followed by the question.
  std::vector<std::string> Sentences() const;
  std::string Text() const;
  // Original problem this one descends from (itself for originals).
  const std::string& RootId() const;

  friend bool operator==(const Problem&, const Problem&) = default;
};

// Numeral tokens in order. `text` is tokenized first, so positions are
// token indices of the normalized form; segment is the sentence index.
std::vector<Quantity> ExtractQuantities(absl::string_view text);

// Same, over body sentences and a question (segment kQuestionSegment).
std::vector<Quantity> ExtractQuantities(const std::vector<std::string>& body,
                                        absl::string_view question);

// Surface token a quantity position points at, or nullopt if out of range.
std::optional<std::string> TokenAt(const Problem& problem,
                                   const Quantity& quantity);

absl::StatusOr<QuantityAlignment> AlignQuantities(const Problem& problem);

struct ProblemSpec {
  std::string id;
  std::vector<std::string> body;
  std::string question;
  std::string equation;
  Source source = Source::kOther;
  std::optional<AugmentationTag> provenance;
  // Dataset-provided answer; checked against the solved equation.
  std::optional<Rational> expected_answer;
  // Absolute; datasets round answers ("0.33" for 1/3). Zero means exact.
  double answer_tolerance = 0;
};

// Normalizes text, extracts quantities, parses, aligns and solves. Fails
// with the first violated invariant's kind ("empty_problem",
// "question_mark", alignment/parse/solve kinds, "answer_mismatch").
absl::StatusOr<Problem> BuildProblem(const ProblemSpec& spec);

// Rebuilds a problem from free text, splitting off the question sentence
// with FindQuestion. Equation, answer and source come from `parent`.
absl::StatusOr<Problem> ProblemFromText(absl::string_view text,
                                        const Problem& parent,
                                        std::string id,
                                        std::optional<AugmentationTag> tag);

}  // namespace mwpa

#endif  // MWPA_CORPUS_PROBLEM_H_
