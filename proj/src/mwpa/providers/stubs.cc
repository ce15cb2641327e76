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

#include "mwpa/providers/stubs.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iostream>
#include <map>
#include <set>

#include "absl/strings/ascii.h"
#include "absl/strings/match.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "mwpa/common/file.h"
#include "mwpa/common/random.h"
#include "mwpa/common/status.h"
#include "mwpa/textlab/tokenizer.h"

namespace mwpa {
namespace {

constexpr absl::string_view kLanguages[] = {"en", "ru", "de", "fr"};

absl::Status BadTable(const std::filesystem::path& file,
                      absl::string_view line) {
  return MakeError(absl::StatusCode::kDataLoss, "bad_lexicon",
                   absl::StrCat(file.filename().string(), ": bad line '", line,
                                "'"));
}

std::vector<std::string> LowerTokens(absl::string_view text) {
  std::vector<std::string> tokens = Tokenize(text);
  for (std::string& t : tokens) t = absl::AsciiStrToLower(t);
  return tokens;
}

bool MatchesAt(const std::vector<std::string>& tokens, size_t at,
               const std::vector<std::string>& phrase) {
  if (phrase.empty() || at + phrase.size() > tokens.size()) return false;
  for (size_t k = 0; k < phrase.size(); ++k) {
    if (absl::AsciiStrToLower(tokens[at + k]) != phrase[k]) return false;
  }
  return true;
}

std::vector<std::string> Replace(const std::vector<std::string>& tokens,
                                 size_t at, size_t len,
                                 const std::vector<std::string>& with) {
  std::vector<std::string> out(tokens.begin(), tokens.begin() + at);
  size_t first = out.size();
  out.insert(out.end(), with.begin(), with.end());
  if (IsCapitalized(tokens[at]) && first < out.size()) {
    out[first][0] = absl::ascii_toupper(out[first][0]);
  }
  out.insert(out.end(), tokens.begin() + at + len, tokens.end());
  return out;
}

bool SupportedLanguage(absl::string_view code) {
  return std::find(std::begin(kLanguages), std::end(kLanguages), code) !=
         std::end(kLanguages);
}

// Pivot tags prepended by PhraseTableTranslator, e.g. "[de] [fr] text".
std::vector<std::string> PopPivotTags(absl::string_view& text) {
  std::vector<std::string> pivots;
  while (text.size() >= 5 && text[0] == '[' && text[3] == ']' &&
         text[4] == ' ') {
    pivots.emplace_back(text.substr(1, 2));
    text.remove_prefix(5);
  }
  return pivots;
}

int SideScore(absl::string_view pattern, absl::string_view token) {
  if (pattern == token) return 2;
  if (pattern == "NUM" && IsNumeral(token)) return 1;
  if (pattern == "*") return 0;
  return -100;
}

}  // namespace

absl::StatusOr<StubTables> StubTables::Load(const std::filesystem::path& dir) {
  StubTables t;

  const std::filesystem::path qfile = dir / "question_paraphrases.tsv";
  absl::StatusOr<std::vector<std::string>> lines = ReadDataLines(qfile);
  if (!lines.ok()) return lines.status();
  for (const std::string& line : *lines) {
    std::vector<std::string> cols = absl::StrSplit(line, '\t');
    if (cols.size() != 2) return BadTable(qfile, line);
    t.question_rules.push_back({LowerTokens(cols[0]), LowerTokens(cols[1])});
  }

  const std::filesystem::path pfile = dir / "phrase_table.tsv";
  lines = ReadDataLines(pfile);
  if (!lines.ok()) return lines.status();
  for (const std::string& line : *lines) {
    std::vector<std::string> cols = absl::StrSplit(line, '\t');
    if (cols.size() != 3) return BadTable(pfile, line);
    t.phrase_table[cols[0]].push_back(
        {LowerTokens(cols[1]), LowerTokens(cols[2])});
  }

  const std::filesystem::path sfile = dir / "synonyms.tsv";
  lines = ReadDataLines(sfile);
  if (!lines.ok()) return lines.status();
  for (const std::string& line : *lines) {
    std::vector<std::string> cols = absl::StrSplit(line, '\t');
    double cosine;
    if (cols.size() != 4 || !absl::SimpleAtod(cols[2], &cosine)) {
      return BadTable(sfile, line);
    }
    t.synonyms[absl::AsciiStrToLower(cols[0])].push_back(
        {cols[1], cosine, cols[3]});
  }
  for (auto& [word, entries] : t.synonyms) {
    std::stable_sort(entries.begin(), entries.end(),
                     [](const SynonymEntry& a, const SynonymEntry& b) {
                       return a.cosine > b.cosine;
                     });
  }

  const std::filesystem::path ffile = dir / "fill.tsv";
  lines = ReadDataLines(ffile);
  if (!lines.ok()) return lines.status();
  for (const std::string& line : *lines) {
    std::vector<std::string> cols = absl::StrSplit(line, '\t');
    if (cols.size() != 3) return BadTable(ffile, line);
    t.fill_rules.push_back(
        {cols[0], cols[1], absl::StrSplit(cols[2], ' ', absl::SkipEmpty())});
  }
  return t;
}

const StubTables& StubTables::Default() {
  static const StubTables* const instance = [] {
    std::filesystem::path dir = DefaultDataDir() / "lexicons";
    absl::StatusOr<StubTables> t = Load(dir);
    if (!t.ok()) {
      std::cerr << "mwpa: cannot load stub tables from " << dir << ": "
                << t.status() << "\n";
      std::abort();
    }
    return new StubTables(*std::move(t));
  }();
  return *instance;
}

std::vector<std::string> ApplyPhraseRules(
    const std::vector<std::string>& tokens,
    const std::vector<PhraseRule>& rules) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < tokens.size()) {
    const PhraseRule* best = nullptr;
    for (const PhraseRule& rule : rules) {
      if (MatchesAt(tokens, i, rule.source) &&
          (best == nullptr || rule.source.size() > best->source.size())) {
        best = &rule;
      }
    }
    if (best == nullptr) {
      out.push_back(tokens[i++]);
      continue;
    }
    std::vector<std::string> piece = best->target;
    if (IsCapitalized(tokens[i]) && !piece.empty()) {
      piece[0][0] = absl::ascii_toupper(piece[0][0]);
    }
    out.insert(out.end(), piece.begin(), piece.end());
    i += best->source.size();
  }
  return out;
}

absl::StatusOr<std::vector<std::string>> LexiconParaphraser::Generate(
    absl::string_view text, int n) const {
  const std::vector<std::string> tokens = Tokenize(text);
  const std::string original = JoinTokens(tokens);
  struct Site {
    size_t at;
    const PhraseRule* rule;
  };
  std::vector<Site> sites;
  for (const PhraseRule& rule : tables_.question_rules) {
    for (size_t at = 0; at < tokens.size(); ++at) {
      if (MatchesAt(tokens, at, rule.source)) {
        sites.push_back({at, &rule});
        break;  // first occurrence only
      }
    }
  }
  std::vector<std::string> out;
  std::set<std::string> seen = {original};
  auto emit = [&](const std::vector<std::string>& variant) {
    std::string s = JoinTokens(variant);
    if (static_cast<int>(out.size()) < n && seen.insert(s).second) {
      out.push_back(std::move(s));
    }
  };
  for (const Site& s : sites) {
    emit(Replace(tokens, s.at, s.rule->source.size(), s.rule->target));
  }
  // Pairs of non-overlapping rewrites; the later site is applied first so
  // the earlier offset stays valid.
  for (size_t a = 0; a < sites.size(); ++a) {
    for (size_t b = a + 1; b < sites.size(); ++b) {
      const Site* first = &sites[a];
      const Site* second = &sites[b];
      if (first->at > second->at) std::swap(first, second);
      if (first->at + first->rule->source.size() > second->at) continue;
      std::vector<std::string> v = Replace(
          tokens, second->at, second->rule->source.size(),
          second->rule->target);
      emit(Replace(v, first->at, first->rule->source.size(),
                   first->rule->target));
    }
  }
  return out;
}

absl::StatusOr<std::vector<std::string>> EchoParaphraser::Generate(
    absl::string_view text, int n) const {
  return std::vector<std::string>(std::max(n, 0) > 0 ? 1 : 0,
                                  std::string(text));
}

absl::StatusOr<std::string> IdentityTranslator::Translate(
    absl::string_view text, absl::string_view, absl::string_view) const {
  return std::string(text);
}

absl::StatusOr<std::string> PhraseTableTranslator::Translate(
    absl::string_view text, absl::string_view source,
    absl::string_view target) const {
  if (!SupportedLanguage(source) || !SupportedLanguage(target)) {
    return MakeError(absl::StatusCode::kInvalidArgument,
                     "unsupported_language",
                     absl::StrCat("no stub route ", source, "->", target));
  }
  absl::string_view rest = text;
  std::vector<std::string> pivots = PopPivotTags(rest);
  const std::string current = pivots.empty() ? "en" : pivots.back();
  if (current != source) {
    return MakeError(absl::StatusCode::kInvalidArgument, "language_mismatch",
                     absl::StrCat("text is in ", current, ", not ", source));
  }
  if (target != "en") {
    std::string tagged;
    for (const std::string& p : pivots) absl::StrAppend(&tagged, "[", p, "] ");
    absl::StrAppend(&tagged, "[", target, "] ", rest);
    return tagged;
  }
  std::vector<std::string> tokens = Tokenize(rest);
  for (const std::string& pivot : pivots) {
    auto it = tables_.phrase_table.find(pivot);
    if (it != tables_.phrase_table.end()) {
      tokens = ApplyPhraseRules(tokens, it->second);
    }
  }
  return JoinTokens(tokens);
}

absl::StatusOr<std::string> ShuffleTranslator::Translate(
    absl::string_view text, absl::string_view, absl::string_view target)
    const {
  if (target != "en") return std::string(text);
  std::vector<std::string> sentences = SplitSentences(text);
  if (sentences.size() > 1) {
    std::rotate(sentences.begin(), sentences.begin() + 1, sentences.end());
  }
  std::vector<std::string> tokens = Tokenize(JoinTokens(sentences));
  if (drop_placeholder_) {
    auto it = std::find_if(tokens.begin(), tokens.end(), [](const auto& t) {
      return absl::StartsWithIgnoreCase(t, "QTY");
    });
    if (it != tokens.end()) tokens.erase(it);
  }
  return JoinTokens(tokens);
}

absl::StatusOr<std::vector<std::vector<std::string>>> ContextTableFiller::Fill(
    absl::string_view masked_text, int top_k) const {
  const std::vector<std::string> tokens = LowerTokens(masked_text);
  std::vector<std::vector<std::string>> out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i] != kMaskToken) continue;
    const std::string left = i > 0 ? tokens[i - 1] : "";
    const std::string right = i + 1 < tokens.size() ? tokens[i + 1] : "";
    const FillRule* best = nullptr;
    int best_score = -1;
    for (const FillRule& rule : tables_.fill_rules) {
      int score = SideScore(rule.left, left) + SideScore(rule.right, right);
      if (score > best_score) {
        best = &rule;
        best_score = score;
      }
    }
    std::vector<std::string> fills;
    if (best != nullptr) {
      for (const std::string& f : best->fills) {
        if (static_cast<int>(fills.size()) >= top_k) break;
        fills.push_back(f);
      }
    }
    out.push_back(std::move(fills));
  }
  return out;
}

absl::StatusOr<std::vector<Neighbor>> SynonymTableEmbeddings::Nearest(
    absl::string_view word, int top_k) const {
  const std::string key = absl::AsciiStrToLower(word);
  std::vector<Neighbor> out;
  auto it = tables_.synonyms.find(key);
  if (it == tables_.synonyms.end()) return out;
  for (const SynonymEntry& e : it->second) {
    if (static_cast<int>(out.size()) >= top_k) break;
    if (absl::AsciiStrToLower(e.word) == key) continue;
    out.push_back({e.word, e.cosine});
  }
  return out;
}

double StubSimilarity(absl::string_view a, absl::string_view b) {
  std::map<std::string, int> ca, cb;
  for (const std::string& t : LowerTokens(a)) ++ca[t];
  for (const std::string& t : LowerTokens(b)) ++cb[t];
  if (ca == cb) return 1.0;
  if (ca.empty() || cb.empty()) return 0.0;
  double dot = 0, na = 0, nb = 0;
  for (const auto& [t, c] : ca) {
    na += static_cast<double>(c) * c;
    auto it = cb.find(t);
    if (it != cb.end()) dot += static_cast<double>(c) * it->second;
  }
  for (const auto& [t, c] : cb) nb += static_cast<double>(c) * c;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

double StubLoss(absl::string_view problem_text, const Equation& equation) {
  uint64_t h = StableHash(
      absl::StrCat(NormalizeText(problem_text), "\x1f", equation.ToString()));
  // Top 53 bits, shifted off zero so the log stays finite.
  double u = (static_cast<double>(h >> 11) + 0.5) * 0x1.0p-53;
  return -std::log(u);
}

absl::Status ProbeSimilarity(const SimilarityProvider& provider) {
  constexpr absl::string_view kA = "Tom has 3 apples . How many apples ?";
  constexpr absl::string_view kB = "Tom owns 3 pears . How many pears ?";
  absl::StatusOr<double> self = provider.Similarity(kA, kA);
  absl::StatusOr<double> ab = provider.Similarity(kA, kB);
  absl::StatusOr<double> ba = provider.Similarity(kB, kA);
  for (const absl::StatusOr<double>* r : {&self, &ab, &ba}) {
    if (!r->ok()) return r->status();
  }
  if (std::fabs(*self - 1.0) > 1e-6 || std::fabs(*ab - *ba) > 1e-6 ||
      *ab < -1.0 - 1e-6 || *ab > 1.0 + 1e-6) {
    return MakeError(absl::StatusCode::kFailedPrecondition,
                     "similarity_contract",
                     absl::StrCat("similarity probe failed: self=", *self,
                                  " ab=", *ab, " ba=", *ba));
  }
  return absl::OkStatus();
}

}  // namespace mwpa
