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

#include "mwpa/textlab/annotator.h"

#include <map>
#include <set>

#include "absl/strings/ascii.h"
#include "absl/strings/match.h"
#include "absl/strings/str_join.h"
#include "mwpa/common/status.h"
#include "mwpa/textlab/tokenizer.h"

namespace mwpa {
namespace {

bool EndsWithAny(absl::string_view word,
                 std::initializer_list<absl::string_view> suffixes,
                 size_t min_stem) {
  for (absl::string_view s : suffixes) {
    if (word.size() >= s.size() + min_stem && absl::EndsWith(word, s)) {
      return true;
    }
  }
  return false;
}

std::optional<Gender> HonorificGender(absl::string_view token) {
  if (token == "Mr.") return Gender::kMale;
  if (token == "Mrs." || token == "Ms.") return Gender::kFemale;
  if (token == "Dr.") return Gender::kUnknown;
  return std::nullopt;
}

// Pronoun forms we substitute. "her" is ambiguous between object and
// possessive; a following nominal means possessive ("her 5 apples").
bool IsReplaceablePronoun(const AnnotatedText& a, size_t i) {
  std::string lower = absl::AsciiStrToLower(a.tokens[i].text);
  if (lower == "he" || lower == "she" || lower == "him") return true;
  if (lower != "her") return false;
  if (i + 1 >= a.tokens.size()) return true;
  PosTag next = a.pos[i + 1];
  if (next == PosTag::kNum) {
    // "her 5 apples" is possessive, "gave her 3 ." is not.
    return i + 2 >= a.tokens.size() || (a.pos[i + 2] != PosTag::kNoun &&
                                        a.pos[i + 2] != PosTag::kAdj);
  }
  return !(next == PosTag::kNoun || next == PosTag::kAdj ||
           next == PosTag::kPropn);
}

}  // namespace

absl::string_view EntityKindName(EntityKind kind) {
  switch (kind) {
    case EntityKind::kPerson:
      return "PERSON";
    case EntityKind::kPlace:
      return "PLACE";
    case EntityKind::kOrg:
      return "ORG";
  }
  return "PERSON";
}

std::optional<size_t> AnnotatedText::EntityAt(int token) const {
  for (size_t i = 0; i < entities.size(); ++i) {
    if (entities[i].begin <= token && token < entities[i].end) return i;
  }
  return std::nullopt;
}

std::vector<std::string> AnnotatedText::SentenceTokens(int sentence) const {
  std::vector<std::string> out;
  for (const Token& t : tokens) {
    if (t.sentence == sentence) out.push_back(t.text);
  }
  return out;
}

std::optional<Gender> PronounGender(absl::string_view token) {
  std::string lower = absl::AsciiStrToLower(token);
  if (lower == "he" || lower == "him" || lower == "his" ||
      lower == "himself") {
    return Gender::kMale;
  }
  if (lower == "she" || lower == "her" || lower == "hers" ||
      lower == "herself") {
    return Gender::kFemale;
  }
  return std::nullopt;
}

PosTag RuleBasedAnnotator::TagWord(absl::string_view token,
                                   bool sentence_initial) const {
  if (IsNumeral(token)) return PosTag::kNum;
  if (token == "$" || token == "%") return PosTag::kOther;
  if (IsPunctuation(token)) return PosTag::kPunct;
  if (IsCapitalized(token) && lexicons_.NameGender(token).has_value()) {
    return PosTag::kPropn;
  }
  const std::string lower = absl::AsciiStrToLower(token);
  if (std::optional<PosTag> tag = lexicons_.LookupPos(lower)) {
    // A capitalised common word in mid-sentence is usually part of a name,
    // but pronouns like "I" stay what they are.
    if (IsCapitalized(token) && !sentence_initial &&
        (*tag == PosTag::kNoun || *tag == PosTag::kAdj)) {
      return PosTag::kPropn;
    }
    return *tag;
  }
  if (IsCapitalized(token) && !sentence_initial) return PosTag::kPropn;
  if (EndsWithAny(lower, {"ly"}, 3)) return PosTag::kAdv;
  if (EndsWithAny(lower, {"ing", "ed"}, 3)) return PosTag::kVerb;
  if (EndsWithAny(lower, {"ous", "ful", "ive", "able", "ible", "less", "ic",
                          "al"},
                  3)) {
    return PosTag::kAdj;
  }
  return PosTag::kNoun;
}

void RuleBasedAnnotator::TagEntities(AnnotatedText& a) const {
  const int n = static_cast<int>(a.tokens.size());
  auto match_len = [&](const std::vector<std::vector<std::string>>& phrases,
                       int at) {
    for (const auto& phrase : phrases) {  // longest first
      if (at + static_cast<int>(phrase.size()) > n) continue;
      bool ok = true;
      for (size_t k = 0; k < phrase.size() && ok; ++k) {
        ok = a.tokens[at + k].text == phrase[k] &&
             a.tokens[at + k].sentence == a.tokens[at].sentence;
      }
      if (ok) return static_cast<int>(phrase.size());
    }
    return 0;
  };

  int i = 0;
  while (i < n) {
    const std::string& text = a.tokens[i].text;
    if (!IsCapitalized(text)) {
      ++i;
      continue;
    }
    int place = match_len(lexicons_.places(), i);
    int org = match_len(lexicons_.orgs(), i);
    if (place > 0 || org > 0) {
      EntityKind kind = place >= org ? EntityKind::kPlace : EntityKind::kOrg;
      int len = std::max(place, org);
      a.entities.push_back({i, i + len, kind, Gender::kUnknown});
      i += len;
      continue;
    }
    if (std::optional<Gender> g = HonorificGender(text);
        g && i + 1 < n && IsCapitalized(a.tokens[i + 1].text) &&
        !IsPunctuation(a.tokens[i + 1].text)) {
      a.entities.push_back({i, i + 2, EntityKind::kPerson, *g});
      i += 2;
      continue;
    }
    if (std::optional<Gender> g = lexicons_.NameGender(text)) {
      a.entities.push_back({i, i + 1, EntityKind::kPerson, *g});
    }
    ++i;
  }
  for (const EntitySpan& e : a.entities) {
    for (int k = e.begin; k < e.end; ++k) a.pos[k] = PosTag::kPropn;
  }
}

void RuleBasedAnnotator::LinkPronouns(AnnotatedText& a) const {
  auto surface = [&](const EntitySpan& e) {
    std::vector<std::string> words;
    for (int k = e.begin; k < e.end; ++k) words.push_back(a.tokens[k].text);
    return absl::StrJoin(words, " ");
  };
  // Chain per distinct antecedent surface, keyed by its first mention.
  std::map<std::string, size_t> chain_of_surface;
  for (int i = 0; i < static_cast<int>(a.tokens.size()); ++i) {
    std::optional<Gender> g = PronounGender(a.tokens[i].text);
    if (!g) continue;
    std::map<std::string, int> candidates;  // surface -> first mention
    for (const EntitySpan& e : a.entities) {
      if (e.kind != EntityKind::kPerson || e.end > i) continue;
      if (e.gender != Gender::kUnknown && e.gender != *g) continue;
      candidates.emplace(surface(e), e.begin);
    }
    if (candidates.size() != 1) continue;  // none, or ambiguous
    const auto& [name, first] = *candidates.begin();
    auto [it, inserted] =
        chain_of_surface.emplace(name, a.coref_chains.size());
    if (inserted) a.coref_chains.push_back({first});
    a.coref_chains[it->second].push_back(i);
  }
}

absl::Status RuleBasedAnnotator::Annotate(absl::string_view text,
                                          AnnotatedText* out) const {
  AnnotatedText& a = *out;
  a = AnnotatedText();
  std::vector<std::string> words = Tokenize(text);
  std::vector<std::vector<std::string>> sentences =
      SplitSentenceTokens(words);
  a.sentence_count = static_cast<int>(sentences.size());
  for (int s = 0; s < a.sentence_count; ++s) {
    for (size_t k = 0; k < sentences[s].size(); ++k) {
      a.tokens.push_back({sentences[s][k], s});
      a.pos.push_back(TagWord(sentences[s][k], k == 0));
    }
  }
  TagEntities(a);
  LinkPronouns(a);
  for (int s = a.sentence_count - 1; s >= 0; --s) {
    if (!sentences[s].empty() && sentences[s].back() == "?") {
      a.question_index = s;
      break;
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<AnnotatedText> Annotate(absl::string_view text,
                                       const AnnotatorBackend& backend,
                                       AnnotatedText* partial) {
  if (absl::StripAsciiWhitespace(text).empty()) {
    return MakeError(absl::StatusCode::kInvalidArgument, "empty_text",
                     "cannot annotate empty text");
  }
  AnnotatedText result;
  absl::Status status = backend.Annotate(text, &result);
  if (!status.ok()) {
    if (partial != nullptr) *partial = std::move(result);
    return WithKind(status, "annotation_failed");
  }
  if (!backend.capabilities().coref) result.coref_chains.clear();
  return result;
}

std::string Detokenize(const AnnotatedText& annotated) {
  std::vector<std::string> words;
  words.reserve(annotated.tokens.size());
  for (const Token& t : annotated.tokens) words.push_back(t.text);
  return JoinTokens(words);
}

std::string ResolvePronouns(const AnnotatedText& annotated) {
  return ResolvePronounsIf(annotated, [](int) { return true; });
}

namespace internal {

std::vector<std::string> ResolvedTokens(const AnnotatedText& a,
                                        const std::vector<bool>& allowed) {
  std::vector<std::vector<std::string>> replacement(a.tokens.size());
  for (const std::vector<int>& chain : a.coref_chains) {
    if (chain.empty()) continue;
    std::optional<size_t> lead = a.EntityAt(chain.front());
    if (!lead) continue;
    const EntitySpan& e = a.entities[*lead];
    std::vector<std::string> mention;
    for (int k = e.begin; k < e.end; ++k) mention.push_back(a.tokens[k].text);
    for (size_t c = 1; c < chain.size(); ++c) {
      const size_t i = chain[c];
      if (allowed[i] && IsReplaceablePronoun(a, i)) replacement[i] = mention;
    }
  }
  std::vector<std::string> out;
  for (size_t i = 0; i < a.tokens.size(); ++i) {
    if (replacement[i].empty()) {
      out.push_back(a.tokens[i].text);
    } else {
      out.insert(out.end(), replacement[i].begin(), replacement[i].end());
    }
  }
  return out;
}

}  // namespace internal

absl::StatusOr<int> FindQuestion(const std::vector<std::string>& sentences) {
  for (int i = static_cast<int>(sentences.size()) - 1; i >= 0; --i) {
    if (absl::EndsWith(absl::StripTrailingAsciiWhitespace(sentences[i]), "?")) {
      return i;
    }
  }
  for (int i = static_cast<int>(sentences.size()) - 1; i >= 0; --i) {
    for (const std::string& w : Tokenize(sentences[i])) {
      std::string lower = absl::AsciiStrToLower(w);
      if (lower == "how" || lower == "what" || lower == "find") return i;
    }
  }
  return MakeError(absl::StatusCode::kInvalidArgument, "no_question",
                   "no sentence reads as a question");
}

}  // namespace mwpa
