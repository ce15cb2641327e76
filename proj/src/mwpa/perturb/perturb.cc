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

#include "mwpa/perturb/perturb.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "json.hpp"
#include "mwpa/common/random.h"
#include "mwpa/common/status.h"
#include "mwpa/textlab/tokenizer.h"

namespace mwpa {
namespace {

constexpr std::pair<PerturbKind, absl::string_view> kKindNames[] = {
    {PerturbKind::kWordDelete, "word_delete"},
    {PerturbKind::kQuestionDrop, "question_drop"},
    {PerturbKind::kQuestionReorder, "question_reorder"},
    {PerturbKind::kSentenceShuffle, "sentence_shuffle"},
    {PerturbKind::kWordReorder, "word_reorder"},
};

bool IsInterrogative(absl::string_view token) {
  const std::string lower = absl::AsciiStrToLower(token);
  return lower == "how" || lower == "what" || lower == "which" ||
         lower == "who" || lower == "find";
}

absl::Status Precondition(const Problem& p, absl::string_view why) {
  return MakeError(absl::StatusCode::kFailedPrecondition, "precondition",
                   absl::StrCat(p.id, ": ", why));
}

// Body sentences then the question, as token lists; the question (if any)
// is the last entry.
std::vector<std::vector<std::string>> SentenceTokens(const Problem& p) {
  std::vector<std::vector<std::string>> out;
  for (const std::string& s : p.body) out.push_back(Tokenize(s));
  if (!p.question.empty()) out.push_back(Tokenize(p.question));
  return out;
}

Problem Rebuilt(const Problem& p,
                const std::vector<std::vector<std::string>>& sentences) {
  Problem out = p;
  out.body.clear();
  out.question.clear();
  const size_t n_body = p.question.empty() ? sentences.size()
                                           : sentences.size() - 1;
  for (size_t i = 0; i < sentences.size(); ++i) {
    std::string s = JoinTokens(sentences[i]);
    if (i < n_body) {
      if (!s.empty()) out.body.push_back(std::move(s));
    } else {
      out.question = std::move(s);
    }
  }
  out.quantities = ExtractQuantities(out.body, out.question);
  return out;
}

// Shuffles `items` until the order changes; needs two distinct values.
template <typename T>
void ShuffleUntilMoved(std::vector<T>& items, Rng& rng) {
  const std::vector<T> before = items;
  bool can_move = false;
  for (const T& x : items) can_move |= !(x == items.front());
  if (!can_move) return;
  do {
    rng.Shuffle(items);
  } while (items == before);
}

}  // namespace

absl::string_view PerturbKindName(PerturbKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "";
}

absl::StatusOr<PerturbKind> ParsePerturbKind(absl::string_view name) {
  for (const auto& [k, n] : kKindNames) {
    if (n == name) return k;
  }
  return MakeError(absl::StatusCode::kInvalidArgument, "unknown_kind",
                   absl::StrCat("unknown perturbation '", name, "'"));
}

absl::Status PerturbationSpec::Validate() const {
  if (kind == PerturbKind::kWordDelete && !(rate > 0 && rate < 1)) {
    return MakeError(absl::StatusCode::kInvalidArgument, "bad_rate",
                     absl::StrCat("word_delete rate must be in (0, 1), got ",
                                  rate));
  }
  return absl::OkStatus();
}

absl::StatusOr<Problem> PerturbProblem(const Problem& p,
                                       const PerturbationSpec& spec) {
  if (absl::Status s = spec.Validate(); !s.ok()) return s;
  Rng rng(DeriveSeed(spec.seed,
                     absl::StrCat(p.id, "/", PerturbKindName(spec.kind))));

  switch (spec.kind) {
    case PerturbKind::kWordDelete: {
      std::vector<std::vector<std::string>> sentences = SentenceTokens(p);
      std::vector<std::pair<size_t, size_t>> deletable;
      size_t total = 0;
      for (size_t s = 0; s < sentences.size(); ++s) {
        for (size_t t = 0; t < sentences[s].size(); ++t, ++total) {
          if (!IsNumeral(sentences[s][t])) deletable.emplace_back(s, t);
        }
      }
      // The epsilon keeps 0.29 * 100 from flooring to 28.
      size_t k = static_cast<size_t>(
          std::floor(spec.rate * static_cast<double>(total) + 1e-9));
      k = std::min(k, deletable.size());
      std::vector<size_t> picks = rng.SampleIndices(deletable.size(), k);
      // Back to front so earlier indices stay valid.
      for (auto it = picks.rbegin(); it != picks.rend(); ++it) {
        auto [s, t] = deletable[*it];
        sentences[s].erase(sentences[s].begin() + t);
      }
      return Rebuilt(p, sentences);
    }
    case PerturbKind::kQuestionDrop: {
      if (p.question.empty()) return Precondition(p, "no question to drop");
      // "If they were split into groups of 2 , how many ... ?" carries a
      // condition the equation needs; only the interrogative clause goes.
      std::vector<std::string> q = Tokenize(p.question);
      size_t cut = 0;
      for (size_t i = 1; i < q.size(); ++i) {
        if (q[i - 1] == "," && IsInterrogative(q[i])) cut = i;
      }
      for (size_t i = cut; i < q.size(); ++i) {
        if (IsNumeral(q[i])) {
          return Precondition(p, "the question clause itself holds a number");
        }
      }
      Problem out = p;
      out.question.clear();
      if (cut > 0) {
        std::vector<std::string> condition(q.begin(), q.begin() + cut - 1);
        condition.push_back(".");
        out.body.push_back(JoinTokens(condition));
      }
      out.quantities = ExtractQuantities(out.body, out.question);
      return out;
    }
    case PerturbKind::kQuestionReorder: {
      if (p.question.empty()) return Precondition(p, "no question to move");
      if (p.body.empty()) return Precondition(p, "nothing to move it before");
      // Stored as the first body sentence so Text() reads question-first.
      Problem out = p;
      out.body.insert(out.body.begin(), p.question);
      out.question.clear();
      out.quantities = ExtractQuantities(out.body, out.question);
      return out;
    }
    case PerturbKind::kSentenceShuffle: {
      if (p.body.size() < 2) {
        return Precondition(p, "sentence_shuffle needs two body sentences");
      }
      Problem out = p;
      ShuffleUntilMoved(out.body, rng);
      out.quantities = ExtractQuantities(out.body, out.question);
      return out;
    }
    case PerturbKind::kWordReorder: {
      std::vector<std::vector<std::string>> sentences = SentenceTokens(p);
      for (std::vector<std::string>& tokens : sentences) {
        // The terminator stays put so sentence boundaries survive.
        std::string end;
        if (!tokens.empty() && IsSentenceTerminator(tokens.back())) {
          end = tokens.back();
          tokens.pop_back();
        }
        ShuffleUntilMoved(tokens, rng);
        if (!end.empty()) tokens.push_back(end);
      }
      return Rebuilt(p, sentences);
    }
  }
  return Precondition(p, "unknown perturbation");
}

PerturbResult PerturbCorpus(const std::vector<Problem>& problems,
                            const PerturbationSpec& spec) {
  PerturbResult result;
  for (const Problem& p : problems) {
    absl::StatusOr<Problem> out = PerturbProblem(p, spec);
    if (out.ok()) {
      result.problems.push_back(*std::move(out));
    } else {
      result.skipped.push_back({p.id, std::string(out.status().message())});
    }
  }
  return result;
}

std::string PerturbResult::ManifestJson(const PerturbationSpec& spec) const {
  nlohmann::ordered_json j;
  j["kind"] = std::string(PerturbKindName(spec.kind));
  if (spec.kind == PerturbKind::kWordDelete) {
    j["rate"] = spec.rate;
  } else {
    j["rate"] = nullptr;
  }
  j["seed"] = spec.seed;
  j["input"] = problems.size() + skipped.size();
  j["output"] = problems.size();
  j["skipped"] = nlohmann::ordered_json::array();
  for (const PerturbSkip& s : skipped) {
    j["skipped"].push_back({{"id", s.id}, {"reason", s.reason}});
  }
  return j.dump(2) + "\n";
}

}  // namespace mwpa
