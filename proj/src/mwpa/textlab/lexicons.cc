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

#include "mwpa/textlab/lexicons.h"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <iostream>
#include <utility>

#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "mwpa/common/file.h"
#include "mwpa/common/status.h"
#include "mwpa/textlab/tokenizer.h"

namespace mwpa {
namespace {

constexpr std::array<std::pair<PosTag, absl::string_view>, 11> kPosNames = {{
    {PosTag::kNoun, "NOUN"},
    {PosTag::kPropn, "PROPN"},
    {PosTag::kVerb, "VERB"},
    {PosTag::kAdj, "ADJ"},
    {PosTag::kAdv, "ADV"},
    {PosTag::kPron, "PRON"},
    {PosTag::kNum, "NUM"},
    {PosTag::kDet, "DET"},
    {PosTag::kAdp, "ADP"},
    {PosTag::kPunct, "PUNCT"},
    {PosTag::kOther, "OTHER"},
}};

absl::StatusOr<std::vector<std::vector<std::string>>> LoadPhrases(
    const std::filesystem::path& path) {
  absl::StatusOr<std::vector<std::string>> lines = ReadDataLines(path);
  if (!lines.ok()) return lines.status();
  std::vector<std::vector<std::string>> phrases;
  for (const std::string& line : *lines) phrases.push_back(Tokenize(line));
  std::stable_sort(phrases.begin(), phrases.end(),
                   [](const auto& a, const auto& b) {
                     return a.size() > b.size();
                   });
  return phrases;
}

}  // namespace

absl::string_view PosTagName(PosTag tag) {
  for (const auto& [t, name] : kPosNames) {
    if (t == tag) return name;
  }
  return "OTHER";
}

std::optional<PosTag> ParsePosTag(absl::string_view name) {
  for (const auto& [t, n] : kPosNames) {
    if (n == name) return t;
  }
  return std::nullopt;
}

absl::string_view GenderName(Gender gender) {
  switch (gender) {
    case Gender::kFemale:
      return "female";
    case Gender::kMale:
      return "male";
    case Gender::kUnknown:
      break;
  }
  return "unknown";
}

absl::StatusOr<Lexicons> Lexicons::Load(const std::filesystem::path& dir) {
  Lexicons lex;
  for (auto [file, list, gender] :
       {std::make_tuple("names_female.txt", &lex.female_, Gender::kFemale),
        std::make_tuple("names_male.txt", &lex.male_, Gender::kMale)}) {
    absl::StatusOr<std::vector<std::string>> lines = ReadDataLines(dir / file);
    if (!lines.ok()) return lines.status();
    for (std::string& name : *lines) {
      name = std::string(absl::StripAsciiWhitespace(name));
      auto [it, inserted] = lex.gender_.emplace(name, gender);
      if (!inserted && it->second != gender) it->second = Gender::kUnknown;
      list->push_back(std::move(name));
    }
  }

  absl::StatusOr<std::vector<std::vector<std::string>>> places =
      LoadPhrases(dir / "places.txt");
  if (!places.ok()) return places.status();
  lex.places_ = *std::move(places);
  absl::StatusOr<std::vector<std::vector<std::string>>> orgs =
      LoadPhrases(dir / "orgs.txt");
  if (!orgs.ok()) return orgs.status();
  lex.orgs_ = *std::move(orgs);

  absl::StatusOr<std::vector<std::string>> stop =
      ReadDataLines(dir / "stopwords.txt");
  if (!stop.ok()) return stop.status();
  for (const std::string& w : *stop) {
    lex.stopwords_.insert(absl::AsciiStrToLower(absl::StripAsciiWhitespace(w)));
  }

  absl::StatusOr<std::vector<std::string>> pos = ReadDataLines(dir / "pos.tsv");
  if (!pos.ok()) return pos.status();
  for (const std::string& line : *pos) {
    std::vector<std::string> cols = absl::StrSplit(line, '\t');
    std::optional<PosTag> tag =
        cols.size() == 2 ? ParsePosTag(cols[1]) : std::nullopt;
    if (!tag) {
      return MakeError(absl::StatusCode::kDataLoss, "bad_lexicon",
                       absl::StrCat("pos.tsv: bad line '", line, "'"));
    }
    lex.pos_.emplace(absl::AsciiStrToLower(cols[0]), *tag);
  }

  // The synonym table carries a POS for every neighbour; words missing from
  // pos.tsv inherit it so substitution re-tagging sees consistent tags.
  absl::StatusOr<std::vector<std::string>> syn =
      ReadDataLines(dir / "synonyms.tsv");
  if (!syn.ok()) return syn.status();
  for (const std::string& line : *syn) {
    std::vector<std::string> cols = absl::StrSplit(line, '\t');
    if (cols.size() != 4) continue;
    std::optional<PosTag> tag = ParsePosTag(cols[3]);
    if (!tag) continue;
    lex.pos_.emplace(absl::AsciiStrToLower(cols[1]), *tag);
    lex.pos_.emplace(absl::AsciiStrToLower(cols[0]), *tag);
  }
  return lex;
}

const Lexicons& Lexicons::Default() {
  static const Lexicons* const instance = [] {
    std::filesystem::path dir = DefaultDataDir() / "lexicons";
    absl::StatusOr<Lexicons> lex = Load(dir);
    if (!lex.ok()) {
      std::cerr << "mwpa: cannot load lexicons from " << dir << ": "
                << lex.status() << "\n";
      std::abort();
    }
    return new Lexicons(*std::move(lex));
  }();
  return *instance;
}

std::optional<Gender> Lexicons::NameGender(absl::string_view name) const {
  auto it = gender_.find(name);
  if (it == gender_.end()) return std::nullopt;
  return it->second;
}

bool Lexicons::IsStopWord(absl::string_view lower_word) const {
  return stopwords_.find(lower_word) != stopwords_.end();
}

std::optional<PosTag> Lexicons::LookupPos(absl::string_view lower_word) const {
  auto it = pos_.find(lower_word);
  if (it == pos_.end()) return std::nullopt;
  return it->second;
}

}  // namespace mwpa
