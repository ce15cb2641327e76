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

#include "mwpa/textlab/tokenizer.h"

#include <algorithm>
#include <array>

#include "absl/strings/ascii.h"
#include "absl/strings/match.h"
#include "absl/strings/str_join.h"
#include "mwpa/equation/rational.h"

namespace mwpa {
namespace {

constexpr absl::string_view kLeadingPunct = "\"'([{$";
constexpr absl::string_view kTrailingPunct = ".,?!;:\"')]}%";

constexpr std::array<absl::string_view, 9> kAbbreviations = {
    "Mr.", "Mrs.", "Ms.", "Dr.", "St.", "Jr.", "Sr.", "a.m.", "p.m."};

bool IsAbbreviation(absl::string_view word) {
  return std::find(kAbbreviations.begin(), kAbbreviations.end(), word) !=
         kAbbreviations.end();
}

bool Contains(absl::string_view set, char c) {
  return set.find(c) != absl::string_view::npos;
}

void TokenizeChunk(absl::string_view text, size_t b, size_t e,
                   std::vector<TokenSpan>& out) {
  absl::string_view chunk = text.substr(b, e - b);
  if (chunk == "'s" || chunk == "'S") {
    out.push_back({b, e});
    return;
  }
  while (b < e && Contains(kLeadingPunct, text[b]) && e - b > 0) {
    // A bare "'s" is a possessive token, not a quote plus "s".
    if (text.substr(b, e - b) == "'s") break;
    out.push_back({b, b + 1});
    ++b;
  }
  std::vector<TokenSpan> trailing;
  while (e > b && Contains(kTrailingPunct, text[e - 1])) {
    if (text[e - 1] == '.' && IsAbbreviation(text.substr(b, e - b))) break;
    trailing.push_back({e - 1, e});
    --e;
  }
  if (e > b) {
    absl::string_view core = text.substr(b, e - b);
    if (core.size() > 2 && (absl::EndsWith(core, "'s") ||
                            absl::EndsWith(core, "'S"))) {
      out.push_back({b, e - 2});
      out.push_back({e - 2, e});
    } else {
      out.push_back({b, e});
    }
  }
  out.insert(out.end(), trailing.rbegin(), trailing.rend());
}

}  // namespace

std::vector<TokenSpan> TokenizeSpans(absl::string_view text) {
  std::vector<TokenSpan> spans;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() &&
           absl::ascii_isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    size_t start = i;
    while (i < text.size() &&
           !absl::ascii_isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
    }
    if (i > start) TokenizeChunk(text, start, i, spans);
  }
  return spans;
}

std::vector<std::string> Tokenize(absl::string_view text) {
  std::vector<std::string> tokens;
  for (const TokenSpan& s : TokenizeSpans(text)) {
    tokens.emplace_back(text.substr(s.begin, s.end - s.begin));
  }
  return tokens;
}

std::string NormalizeText(absl::string_view text) {
  return JoinTokens(Tokenize(text));
}

std::string JoinTokens(absl::Span<const std::string> tokens) {
  return absl::StrJoin(tokens, " ");
}

bool IsNumeral(absl::string_view token) {
  if (token.empty()) return false;
  const unsigned char first = token.front();
  if (!absl::ascii_isdigit(first) &&
      !(first == '.' && token.size() > 1 &&
        absl::ascii_isdigit(static_cast<unsigned char>(token[1])))) {
    return false;
  }
  return ParseDecimal(token).ok();
}

bool IsPunctuation(absl::string_view token) {
  if (token.empty()) return false;
  return std::all_of(token.begin(), token.end(), [](char c) {
    return absl::ascii_ispunct(static_cast<unsigned char>(c));
  });
}

bool IsSentenceTerminator(absl::string_view token) {
  return token == "." || token == "?" || token == "!";
}

bool IsCapitalized(absl::string_view token) {
  return !token.empty() &&
         absl::ascii_isupper(static_cast<unsigned char>(token.front()));
}

std::vector<std::vector<std::string>> SplitSentenceTokens(
    absl::Span<const std::string> tokens) {
  std::vector<std::vector<std::string>> sentences;
  std::vector<std::string> current;
  for (const std::string& t : tokens) {
    current.push_back(t);
    if (IsSentenceTerminator(t)) {
      sentences.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) sentences.push_back(std::move(current));
  return sentences;
}

std::vector<std::string> SplitSentences(absl::string_view text) {
  std::vector<std::string> out;
  for (const auto& sentence : SplitSentenceTokens(Tokenize(text))) {
    out.push_back(JoinTokens(sentence));
  }
  return out;
}

}  // namespace mwpa
