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

#include "mwpa/corpus/problem.h"

#include <cmath>
#include <utility>

#include "absl/strings/match.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "mwpa/common/status.h"
#include "mwpa/equation/parser.h"
#include "mwpa/equation/solver.h"
#include "mwpa/textlab/annotator.h"
#include "mwpa/textlab/tokenizer.h"

namespace mwpa {
namespace {

constexpr std::pair<Source, absl::string_view> kSourceNames[] = {
    {Source::kMawps, "mawps"},
    {Source::kAsdiv, "asdiv"},
    {Source::kAugmented, "augmented"},
    {Source::kOther, "other"},
};

constexpr std::pair<Method, absl::string_view> kMethodNames[] = {
    {Method::kProblemReorder, "problem_reorder"},
    {Method::kRoundTrip, "round_trip"},
    {Method::kFillMask, "fill_mask"},
    {Method::kSynonym, "synonym"},
    {Method::kEntity, "entity"},
};

void AppendQuantities(absl::string_view sentence, int segment,
                      std::vector<Quantity>& out) {
  std::vector<std::string> tokens = Tokenize(sentence);
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (!IsNumeral(tokens[i])) continue;
    Quantity q;
    q.surface = tokens[i];
    q.value = *ParseDecimal(tokens[i]);
    q.segment = segment;
    q.token_index = static_cast<int>(i);
    q.placeholder_id = static_cast<int>(out.size());
    out.push_back(std::move(q));
  }
}

bool AnswersAgree(const Rational& solved, const Rational& expected,
                  double tolerance) {
  if (solved == expected) return true;
  if (tolerance <= 0) return false;
  return std::fabs(ToDouble(solved) - ToDouble(expected)) <= tolerance;
}

}  // namespace

absl::string_view SourceName(Source source) {
  for (const auto& [s, name] : kSourceNames) {
    if (s == source) return name;
  }
  return "other";
}

absl::StatusOr<Source> ParseSource(absl::string_view name) {
  for (const auto& [s, n] : kSourceNames) {
    if (n == name) return s;
  }
  return MakeError(absl::StatusCode::kInvalidArgument, "unknown_source",
                   absl::StrCat("unknown source '", name, "'"));
}

absl::string_view MethodName(Method method) {
  for (const auto& [m, name] : kMethodNames) {
    if (m == method) return name;
  }
  return "";
}

absl::StatusOr<Method> ParseMethod(absl::string_view name) {
  for (const auto& [m, n] : kMethodNames) {
    if (n == name) return m;
  }
  return MakeError(absl::StatusCode::kInvalidArgument, "unknown_method",
                   absl::StrCat("unknown method '", name, "'"));
}

Family FamilyOf(Method method) {
  return (method == Method::kProblemReorder || method == Method::kRoundTrip)
             ? Family::kParaphrase
             : Family::kSubstitution;
}

absl::string_view FamilyName(Family family) {
  return family == Family::kParaphrase ? "paraphrase" : "substitution";
}

std::vector<std::string> Problem::Sentences() const {
  std::vector<std::string> out = body;
  if (!question.empty()) out.push_back(question);
  return out;
}

std::string Problem::Text() const { return absl::StrJoin(Sentences(), " "); }

const std::string& Problem::RootId() const {
  return provenance ? provenance->parent_id : id;
}

std::vector<Quantity> ExtractQuantities(absl::string_view text) {
  std::vector<Quantity> out;
  std::vector<std::string> sentences = SplitSentences(text);
  for (size_t s = 0; s < sentences.size(); ++s) {
    AppendQuantities(sentences[s], static_cast<int>(s), out);
  }
  return out;
}

std::vector<Quantity> ExtractQuantities(const std::vector<std::string>& body,
                                        absl::string_view question) {
  std::vector<Quantity> out;
  for (size_t s = 0; s < body.size(); ++s) {
    AppendQuantities(body[s], static_cast<int>(s), out);
  }
  AppendQuantities(question, kQuestionSegment, out);
  return out;
}

std::optional<std::string> TokenAt(const Problem& problem,
                                   const Quantity& quantity) {
  const std::string* sentence = nullptr;
  if (quantity.segment == kQuestionSegment) {
    sentence = &problem.question;
  } else if (quantity.segment >= 0 &&
             quantity.segment < static_cast<int>(problem.body.size())) {
    sentence = &problem.body[quantity.segment];
  }
  if (sentence == nullptr) return std::nullopt;
  std::vector<std::string> tokens = Tokenize(*sentence);
  if (quantity.token_index < 0 ||
      quantity.token_index >= static_cast<int>(tokens.size())) {
    return std::nullopt;
  }
  return tokens[quantity.token_index];
}

absl::StatusOr<QuantityAlignment> AlignQuantities(const Problem& problem) {
  std::vector<Rational> values;
  values.reserve(problem.quantities.size());
  for (const Quantity& q : problem.quantities) values.push_back(q.value);
  return AlignQuantities(problem.equation, values);
}

absl::StatusOr<Problem> BuildProblem(const ProblemSpec& spec) {
  Problem p;
  p.id = spec.id;
  for (const std::string& sentence : spec.body) {
    std::string normalized = NormalizeText(sentence);
    if (!normalized.empty()) p.body.push_back(std::move(normalized));
  }
  p.question = NormalizeText(spec.question);
  p.source = spec.source;
  p.provenance = spec.provenance;
  if (p.body.empty() && p.question.empty()) {
    return MakeError(absl::StatusCode::kInvalidArgument, "empty_problem",
                     "problem has neither body nor question");
  }
  if (p.source != Source::kAugmented && !p.question.empty() &&
      !absl::EndsWith(p.question, "?")) {
    return MakeError(absl::StatusCode::kInvalidArgument, "question_mark",
                     absl::StrCat("question does not end with '?': ",
                                  p.question));
  }
  p.quantities = ExtractQuantities(p.body, p.question);

  absl::StatusOr<Equation> eq = ParseEquation(spec.equation);
  if (!eq.ok()) return eq.status();
  p.equation = *std::move(eq);
  absl::StatusOr<QuantityAlignment> alignment = AlignQuantities(p);
  if (!alignment.ok()) return alignment.status();
  absl::StatusOr<Rational> answer = Solve(p.equation);
  if (!answer.ok()) return answer.status();
  p.answer = *std::move(answer);
  if (spec.expected_answer &&
      !AnswersAgree(p.answer, *spec.expected_answer, spec.answer_tolerance)) {
    return MakeError(absl::StatusCode::kInvalidArgument, "answer_mismatch",
                     absl::StrCat("equation solves to ",
                                  FormatRational(p.answer), ", record says ",
                                  FormatRational(*spec.expected_answer)));
  }
  return p;
}

absl::StatusOr<Problem> ProblemFromText(absl::string_view text,
                                        const Problem& parent, std::string id,
                                        std::optional<AugmentationTag> tag) {
  std::vector<std::string> sentences = SplitSentences(text);
  ProblemSpec spec;
  spec.id = std::move(id);
  absl::StatusOr<int> q = FindQuestion(sentences);
  for (int i = 0; i < static_cast<int>(sentences.size()); ++i) {
    if (q.ok() && i == *q) {
      spec.question = sentences[i];
    } else {
      spec.body.push_back(sentences[i]);
    }
  }
  spec.equation = parent.equation.source_text().empty()
                      ? parent.equation.ToString()
                      : parent.equation.source_text();
  spec.source = tag ? Source::kAugmented : parent.source;
  spec.provenance = std::move(tag);
  spec.expected_answer = parent.answer;
  return BuildProblem(spec);
}

}  // namespace mwpa
