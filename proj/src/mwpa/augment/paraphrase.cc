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

#include "mwpa/augment/paraphrase.h"

#include <algorithm>
#include <map>
#include <set>

#include "absl/strings/ascii.h"
#include "absl/strings/match.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "mwpa/common/status.h"
#include "mwpa/textlab/tokenizer.h"

namespace mwpa {
namespace {

// Question words that read as "what follows from the body".
constexpr absl::string_view kConsequenceCues[] = {"would", "will", "could",
                                                  "should", "then"};

std::vector<std::string> Lowered(std::vector<std::string> tokens) {
  for (std::string& t : tokens) t = absl::AsciiStrToLower(t);
  return tokens;
}

// Lower-cased tokens of a body sentence without its terminator.
std::vector<std::string> Clause(absl::string_view sentence) {
  std::vector<std::string> tokens = Lowered(Tokenize(sentence));
  while (!tokens.empty() && IsSentenceTerminator(tokens.back())) {
    tokens.pop_back();
  }
  return tokens;
}

void Append(std::vector<std::string>& out,
            const std::vector<std::string>& more) {
  out.insert(out.end(), more.begin(), more.end());
}

// "QTY12" -> 12. Case-insensitive: translators sometimes lower-case it.
std::optional<size_t> PlaceholderIndex(absl::string_view token) {
  if (token.size() < 4 || !absl::StartsWithIgnoreCase(token, "qty")) {
    return std::nullopt;
  }
  size_t index;
  absl::string_view digits = token.substr(3);
  if (!std::all_of(digits.begin(), digits.end(), absl::ascii_isdigit) ||
      !absl::SimpleAtoi(digits, &index)) {
    return std::nullopt;
  }
  return index;
}

absl::Status Corrupt(absl::string_view what) {
  return MakeError(absl::StatusCode::kDataLoss,
                   augment_errors::kPlaceholderCorruption, what);
}

}  // namespace

PrimaryStageResult PrimaryStage(const Problem& p, int n,
                                const ParaphraseProvider& provider) {
  PrimaryStageResult result;
  if (p.question.empty() || n < 1) return result;
  absl::StatusOr<std::vector<std::string>> paraphrases =
      provider.Generate(p.question, n);
  if (!paraphrases.ok()) {
    result.warning = paraphrases.status();
    return result;
  }
  const std::vector<Rational> want =
      QuantityValues(ExtractQuantities({}, p.question));
  const std::string original = NormalizeText(p.question);
  std::set<std::string> seen;
  for (const std::string& raw : *paraphrases) {
    if (static_cast<int>(result.bases.size()) >= n) break;
    std::string q = NormalizeText(raw);
    if (q.empty() || q == original || !seen.insert(q).second ||
        QuantityValues(ExtractQuantities({}, q)) != want) {
      ++result.dropped;
      continue;
    }
    absl::StatusOr<Problem> base = WithQuestion(
        p, q, absl::StrCat(p.id, "#b", result.bases.size()));
    if (!base.ok()) {
      ++result.dropped;
      continue;
    }
    result.bases.push_back(*std::move(base));
  }
  return result;
}

ReorderTemplate ChooseTemplate(absl::string_view question) {
  for (const std::string& t : Lowered(Tokenize(question))) {
    for (absl::string_view cue : kConsequenceCues) {
      if (t == cue) return ReorderTemplate::kIfThen;
    }
  }
  return ReorderTemplate::kGivenThat;
}

absl::StatusOr<Candidate> ReorderProblem(const Problem& p,
                                         const AnnotatorBackend& annotator) {
  if (p.question.empty()) {
    return MakeError(absl::StatusCode::kFailedPrecondition,
                     augment_errors::kNoQuestion,
                     absl::StrCat(p.id, ": nothing to front"));
  }
  if (p.body.empty()) {
    return MakeError(absl::StatusCode::kFailedPrecondition,
                     augment_errors::kNoBody,
                     absl::StrCat(p.id, ": no body sentences to reorder"));
  }
  const ReorderTemplate form = ChooseTemplate(p.question);
  std::vector<std::string> out;

  if (form == ReorderTemplate::kIfThen) {
    out.push_back("If");
    for (size_t i = 0; i < p.body.size(); ++i) {
      if (i) out.push_back("and");
      Append(out, Clause(p.body[i]));
    }
    out.push_back("then");
    std::vector<std::string> q = Lowered(Tokenize(p.question));
    if (q.empty() || q.back() != "?") q.push_back("?");
    // "... have then ?" already has its "then" up front.
    if (q.size() >= 2 && q[q.size() - 2] == "then") q.erase(q.end() - 2);
    Append(out, q);
  } else {
    // The question now comes before the people it talks about, so its
    // pronouns are swapped for their antecedents.
    std::string question = p.question;
    absl::StatusOr<AnnotatedText> a = Annotate(p.Text(), annotator);
    if (a.ok() && a->sentence_count > 0) {
      const int qs = a->sentence_count - 1;
      std::string resolved = ResolvePronounsIf(
          *a, [&](int i) { return a->tokens[i].sentence == qs; });
      std::vector<std::string> sentences = SplitSentences(resolved);
      if (!sentences.empty()) question = sentences.back();
    }
    Append(out, Clause(question));
    out.push_back("given");
    out.push_back("that");
    for (size_t i = 0; i < p.body.size(); ++i) {
      if (i) out.push_back("and");
      Append(out, Clause(p.body[i]));
    }
    out.push_back(".");
    out[0][0] = absl::ascii_toupper(out[0][0]);
  }

  Candidate c = MakeCandidate(JoinTokens(out), p, Method::kProblemReorder,
                              {std::string(MethodName(Method::kProblemReorder))});
  if (absl::Status s = CheckCandidate(p, c); !s.ok()) return s;
  return c;
}

bool PreservesEventOrder(const Problem& p, absl::string_view text,
                         const Lexicons& lexicons) {
  std::vector<std::string> want;
  for (const std::string& sentence : p.body) {
    for (const std::string& t : Lowered(Tokenize(sentence))) {
      if (!IsPunctuation(t) && !lexicons.IsStopWord(t)) want.push_back(t);
    }
  }
  const std::vector<std::string> have = Lowered(Tokenize(text));
  size_t k = 0;
  for (const std::string& t : have) {
    if (k < want.size() && t == want[k]) ++k;
  }
  return k == want.size();
}

absl::StatusOr<ProtectedText> ProtectQuantities(absl::string_view text) {
  ProtectedText out;
  size_t last = 0;
  for (const TokenSpan& span : TokenizeSpans(text)) {
    absl::string_view token = text.substr(span.begin, span.end - span.begin);
    if (PlaceholderIndex(token)) {
      return MakeError(absl::StatusCode::kInvalidArgument,
                       "placeholder_collision",
                       absl::StrCat("text already contains '", token, "'"));
    }
    if (!IsNumeral(token)) continue;
    std::string placeholder = absl::StrCat("QTY", out.map.entries.size());
    absl::StrAppend(&out.text, text.substr(last, span.begin - last),
                    placeholder);
    out.map.entries.emplace_back(std::move(placeholder), std::string(token));
    last = span.end;
  }
  absl::StrAppend(&out.text, text.substr(last));
  return out;
}

absl::StatusOr<std::string> RestoreQuantities(absl::string_view text,
                                              const ProtectionMap& map) {
  std::vector<int> seen(map.entries.size(), 0);
  std::string out;
  size_t last = 0;
  for (const TokenSpan& span : TokenizeSpans(text)) {
    absl::string_view token = text.substr(span.begin, span.end - span.begin);
    std::optional<size_t> index = PlaceholderIndex(token);
    if (!index) continue;
    if (*index >= map.entries.size()) {
      return Corrupt(absl::StrCat("unknown placeholder '", token, "'"));
    }
    ++seen[*index];
    absl::StrAppend(&out, text.substr(last, span.begin - last),
                    map.entries[*index].second);
    last = span.end;
  }
  absl::StrAppend(&out, text.substr(last));
  for (size_t i = 0; i < seen.size(); ++i) {
    if (seen[i] != 1) {
      return Corrupt(absl::StrCat(map.entries[i].first, " appears ", seen[i],
                                  " times after translation"));
    }
  }
  return out;
}

const TranslationRoute& RouteEnRuEn() {
  static const TranslationRoute* const r =
      new TranslationRoute{"en_ru_en", {"en", "ru", "en"}};
  return *r;
}

const TranslationRoute& RouteEnDeFrEn() {
  static const TranslationRoute* const r =
      new TranslationRoute{"en_de_fr_en", {"en", "de", "fr", "en"}};
  return *r;
}

absl::StatusOr<TranslationRoute> ParseRoute(absl::string_view name) {
  std::vector<std::string> langs = absl::StrSplit(name, '_');
  // Longer chains drift too far from the source to keep the problem intact.
  if (langs.size() < 3 || langs.size() > 4 || langs.front() != "en" ||
      langs.back() != "en" ||
      std::any_of(langs.begin(), langs.end(),
                  [](const std::string& l) { return l.size() != 2; })) {
    return MakeError(absl::StatusCode::kInvalidArgument, "bad_route",
                     absl::StrCat("route '", name,
                                  "' must look like en_xx_en or en_xx_yy_en"));
  }
  return TranslationRoute{std::string(name), std::move(langs)};
}

absl::StatusOr<Candidate> RoundTrip(const Problem& p,
                                    const TranslationRoute& route,
                                    const TranslationProvider& provider) {
  absl::StatusOr<ProtectedText> prot = ProtectQuantities(p.Text());
  if (!prot.ok()) return prot.status();
  std::string current = prot->text;
  for (size_t i = 0; i + 1 < route.languages.size(); ++i) {
    absl::StatusOr<std::string> next = provider.Translate(
        current, route.languages[i], route.languages[i + 1]);
    if (!next.ok()) return next.status();
    current = *std::move(next);
  }
  absl::StatusOr<std::string> restored =
      RestoreQuantities(current, prot->map);
  if (!restored.ok()) {
    return WithKind(
        absl::Status(restored.status().code(),
                     absl::StrCat(p.id, " via ", route.name, ": ",
                                  restored.status().message())),
        augment_errors::kPlaceholderCorruption);
  }
  Candidate c = MakeCandidate(NormalizeText(*restored), p, Method::kRoundTrip,
                              {absl::StrCat("round_trip:", route.name)});
  if (absl::Status s = CheckCandidate(p, c); !s.ok()) return s;
  return c;
}

}  // namespace mwpa
