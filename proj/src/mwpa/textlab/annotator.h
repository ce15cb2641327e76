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

#ifndef MWPA_TEXTLAB_ANNOTATOR_H_
#define MWPA_TEXTLAB_ANNOTATOR_H_

#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "mwpa/textlab/lexicons.h"

namespace mwpa {

enum class EntityKind { kPerson, kPlace, kOrg };

absl::string_view EntityKindName(EntityKind kind);

struct Token {
  std::string text;
  int sentence = 0;
};

// Half-open token range [begin, end).
struct EntitySpan {
  int begin = 0;
  int end = 0;
  EntityKind kind = EntityKind::kPerson;
  Gender gender = Gender::kUnknown;
};

struct AnnotatedText {
  std::vector<Token> tokens;
  std::vector<PosTag> pos;
  std::vector<EntitySpan> entities;  // sorted, non-overlapping
  // Each chain starts with the token index of its leading PERSON mention,
  // followed by the pronoun tokens resolved to it.
  std::vector<std::vector<int>> coref_chains;
  std::optional<int> question_index;
  int sentence_count = 0;

  // Index into `entities` of the span covering token i, if any.
  std::optional<size_t> EntityAt(int token) const;
  std::vector<std::string> SentenceTokens(int sentence) const;
};

struct AnnotatorCapabilities {
  bool pos = false;
  bool ner = false;
  bool coref = false;
};

class AnnotatorBackend {
 public:
  virtual ~AnnotatorBackend() = default;
  virtual AnnotatorCapabilities capabilities() const = 0;
  // False means callers must serialise Annotate() calls.
  virtual bool thread_safe() const { return true; }
  // Fills as much of *out as it can. On failure *out keeps the partial work.
  virtual absl::Status Annotate(absl::string_view text,
                                AnnotatedText* out) const = 0;
};

// Lexicon NER, closed-class and suffix POS rules, and a conservative pronoun
// linker. Always available; needs no model files.
class RuleBasedAnnotator : public AnnotatorBackend {
 public:
  explicit RuleBasedAnnotator(const Lexicons& lexicons = Lexicons::Default())
      : lexicons_(lexicons) {}

  AnnotatorCapabilities capabilities() const override {
    return {true, true, true};
  }
  absl::Status Annotate(absl::string_view text,
                        AnnotatedText* out) const override;

  PosTag TagWord(absl::string_view token, bool sentence_initial) const;
  const Lexicons& lexicons() const { return lexicons_; }

 private:
  void TagEntities(AnnotatedText& a) const;
  void LinkPronouns(AnnotatedText& a) const;

  const Lexicons& lexicons_;
};

// Rejects empty text, then delegates. `partial`, when given, receives
// whatever the backend produced even if it failed.
absl::StatusOr<AnnotatedText> Annotate(absl::string_view text,
                                       const AnnotatorBackend& backend,
                                       AnnotatedText* partial = nullptr);

std::string Detokenize(const AnnotatedText& annotated);

// Gender of a personal pronoun token, nullopt for anything else.
std::optional<Gender> PronounGender(absl::string_view token);

// Substitutes subject and object pronouns with the leading mention of their
// chain. Possessive and reflexive forms are kept: swapping "his" for a bare
// name breaks the grammar.
std::string ResolvePronouns(const AnnotatedText& annotated);

// Same, restricted to pronoun tokens for which `select(token_index)` holds.
template <typename Pred>
std::string ResolvePronounsIf(const AnnotatedText& annotated, Pred select);

// Index of the question sentence: the last one ending in '?', else the last
// containing "how", "what" or "find". Error kind "no_question".
absl::StatusOr<int> FindQuestion(const std::vector<std::string>& sentences);

namespace internal {
std::vector<std::string> ResolvedTokens(
    const AnnotatedText& annotated, const std::vector<bool>& allowed);
}  // namespace internal

template <typename Pred>
std::string ResolvePronounsIf(const AnnotatedText& annotated, Pred select) {
  std::vector<bool> allowed(annotated.tokens.size());
  for (size_t i = 0; i < allowed.size(); ++i) {
    allowed[i] = select(static_cast<int>(i));
  }
  std::vector<std::string> tokens =
      internal::ResolvedTokens(annotated, allowed);
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += ' ';
    out += tokens[i];
  }
  return out;
}

}  // namespace mwpa

#endif  // MWPA_TEXTLAB_ANNOTATOR_H_
