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

#ifndef MWPA_TEXTLAB_TOKENIZER_H_
#define MWPA_TEXTLAB_TOKENIZER_H_

#include <cstddef>
#include <string>
#include <vector>

#include "absl/strings/string_view.h"
#include "absl/types/span.h"

namespace mwpa {

// Byte offsets of a token in the text it was cut from.
struct TokenSpan {
  size_t begin;
  size_t end;
};

// Word-level tokenizer used for every problem text in the library.
//  - punctuation is split off words, except inside numbers ("2.5",
//    "1,000") and a few honorific abbreviations ("Mrs.");
//  - "$" and "%" become their own tokens;
//  - possessive "'s" is split from its noun.
// Spans never overlap and appear in text order.
std::vector<TokenSpan> TokenizeSpans(absl::string_view text);
std::vector<std::string> Tokenize(absl::string_view text);

// Tokens joined by single spaces. Idempotent.
std::string NormalizeText(absl::string_view text);

std::string JoinTokens(absl::Span<const std::string> tokens);

bool IsNumeral(absl::string_view token);
bool IsPunctuation(absl::string_view token);
bool IsSentenceTerminator(absl::string_view token);
bool IsCapitalized(absl::string_view token);

// Splits after '.', '?' and '!' tokens. A trailing unterminated run is its
// own sentence.
std::vector<std::vector<std::string>> SplitSentenceTokens(
    absl::Span<const std::string> tokens);

// Normalized sentence strings.
std::vector<std::string> SplitSentences(absl::string_view text);

}  // namespace mwpa

#endif  // MWPA_TEXTLAB_TOKENIZER_H_
