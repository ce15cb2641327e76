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

#include "mwpa/augment/substitution.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "absl/strings/ascii.h"
#include "absl/strings/match.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "mwpa/common/random.h"
#include "mwpa/common/status.h"
#include "mwpa/textlab/tokenizer.h"

namespace mwpa {
namespace {

constexpr absl::string_view kInterrogatives[] = {
    "how", "what", "which", "who", "whom", "whose", "when", "where", "why",
    "find"};

bool IsInterrogative(absl::string_view lower) {
  return std::find(std::begin(kInterrogatives), std::end(kInterrogatives),
                   lower) != std::end(kInterrogatives);
}

bool IsWord(absl::string_view token) {
  return !token.empty() &&
         std::all_of(token.begin(), token.end(), [](char c) {
           return absl::ascii_isalpha(c) || c == '-';
         });
}

// Substitute words must be one plain token and never smuggle in a number.
bool UsableReplacement(absl::string_view word, absl::string_view original) {
  return IsWord(word) && word != kMaskToken &&
         !absl::EqualsIgnoreCase(word, original);
}

std::string MatchCase(std::string word, absl::string_view like) {
  if (IsCapitalized(like) && !word.empty()) {
    word[0] = absl::ascii_toupper(word[0]);
  }
  return word;
}

std::vector<std::string> TokenTexts(const AnnotatedText& a) {
  std::vector<std::string> out;
  out.reserve(a.tokens.size());
  for (const Token& t : a.tokens) out.push_back(t.text);
  return out;
}

// Collects gated, de-duplicated candidates for one method.
class Emitter {
 public:
  Emitter(const Problem& p, Method method, size_t cap)
      : p_(p), method_(method), cap_(cap) {}

  void Emit(const std::vector<std::string>& tokens) {
    if (full()) return;
    std::string text = JoinTokens(tokens);
    if (!seen_.insert(text).second) return;
    Candidate c = MakeCandidate(text, p_, method_,
                                {std::string(MethodName(method_))});
    if (CheckCandidate(p_, c).ok()) out_.push_back(std::move(c));
  }
  bool full() const { return out_.size() >= cap_; }
  std::vector<Candidate> Take() { return std::move(out_); }

 private:
  const Problem& p_;
  Method method_;
  size_t cap_;
  std::set<std::string> seen_;
  std::vector<Candidate> out_;
};

// All rank vectors (r_0..r_{m-1}), 0 <= r_i < sizes[i], with the given sum,
// in lexicographic order.
void RankVectors(const std::vector<size_t>& sizes, size_t sum,
                 const std::function<bool(const std::vector<size_t>&)>& visit) {
  std::vector<size_t> ranks(sizes.size(), 0);
  std::function<bool(size_t, size_t)> rec = [&](size_t i, size_t left) {
    if (i == sizes.size()) return left == 0 ? visit(ranks) : true;
    for (size_t r = 0; r < sizes[i] && r <= left; ++r) {
      ranks[i] = r;
      if (!rec(i + 1, left - r)) return false;
    }
    return true;
  };
  rec(0, sum);
}

}  // namespace

absl::Status SubstitutionConfig::Validate() const {
  if (top_k < 1 || max_masks < 1 || mask_window < 1 ||
      !(replacement_rate > 0 && replacement_rate <= 1) ||
      max_fill_candidates < 1 || entity_candidates < 1) {
    return MakeError(absl::StatusCode::kInvalidArgument, "bad_config",
                     "substitution settings out of range");
  }
  return absl::OkStatus();
}

absl::StatusOr<std::vector<Candidate>> FillMaskAugment(
    const Problem& p, const SubstitutionConfig& cfg,
    const AnnotatorBackend& annotator, const MaskFillProvider& provider) {
  absl::StatusOr<AnnotatedText> a = Annotate(p.Text(), annotator);
  if (!a.ok()) return a.status();
  const Lexicons& lex = Lexicons::Default();
  const int n = static_cast<int>(a->tokens.size());

  std::vector<int> near, far;
  for (int i = 0; i < n; ++i) {
    const std::string& tok = a->tokens[i].text;
    const std::string lower = absl::AsciiStrToLower(tok);
    if ((a->pos[i] != PosTag::kNoun && a->pos[i] != PosTag::kAdj) ||
        a->EntityAt(i) || !IsWord(tok) || lex.IsStopWord(lower) ||
        IsInterrogative(lower)) {
      continue;
    }
    bool close = false;
    for (int j = std::max(0, i - cfg.mask_window);
         j <= std::min(n - 1, i + cfg.mask_window) && !close; ++j) {
      close = a->tokens[j].sentence == a->tokens[i].sentence &&
              a->pos[j] == PosTag::kNum;
    }
    (close ? near : far).push_back(i);
  }
  Rng rng(DeriveSeed(cfg.seed, absl::StrCat(p.id, "/fill_mask")));
  rng.Shuffle(near);
  rng.Shuffle(far);
  std::vector<int> picked = near;
  picked.insert(picked.end(), far.begin(), far.end());
  if (static_cast<int>(picked.size()) > cfg.max_masks) {
    picked.resize(cfg.max_masks);
  }
  std::sort(picked.begin(), picked.end());
  if (picked.empty()) return std::vector<Candidate>{};

  // One query per position, so every mask is filled from intact context.
  const std::vector<std::string> tokens = TokenTexts(*a);
  std::vector<std::vector<std::string>> options;  // option 0 keeps the word
  for (int i : picked) {
    std::vector<std::string> masked = tokens;
    masked[i] = kMaskToken;
    absl::StatusOr<std::vector<std::vector<std::string>>> fills =
        provider.Fill(JoinTokens(masked), cfg.top_k);
    if (!fills.ok()) return fills.status();
    if (fills->size() != 1) {
      return MakeError(absl::StatusCode::kDataLoss, "provider_contract",
                       absl::StrCat("filler answered ", fills->size(),
                                    " masks, expected 1"));
    }
    const std::string& original = tokens[i];
    std::vector<std::string> opts = {original};
    for (const std::string& f : fills->front()) {
      std::string w = MatchCase(f, original);
      if (UsableReplacement(w, original) &&
          std::find(opts.begin(), opts.end(), w) == opts.end()) {
        opts.push_back(std::move(w));
      }
    }
    options.push_back(std::move(opts));
  }
  std::vector<size_t> sizes;
  size_t max_sum = 0;
  for (const auto& o : options) {
    sizes.push_back(o.size());
    max_sum += o.size() - 1;
  }

  Emitter emitter(p, Method::kFillMask, cfg.max_fill_candidates);
  for (size_t sum = 1; sum <= max_sum && !emitter.full(); ++sum) {
    RankVectors(sizes, sum, [&](const std::vector<size_t>& ranks) {
      std::vector<std::string> out = tokens;
      for (size_t m = 0; m < ranks.size(); ++m) {
        out[picked[m]] = options[m][ranks[m]];
      }
      emitter.Emit(out);
      return !emitter.full();
    });
  }
  return emitter.Take();
}

absl::StatusOr<std::vector<Candidate>> SynonymAugment(
    const Problem& p, const SubstitutionConfig& cfg,
    const AnnotatorBackend& annotator, const WordEmbeddingProvider& provider) {
  absl::StatusOr<AnnotatedText> a = Annotate(p.Text(), annotator);
  if (!a.ok()) return a.status();
  const Lexicons& lex = Lexicons::Default();
  const std::vector<std::string> tokens = TokenTexts(*a);

  // Distinct keywords in order of first appearance.
  std::vector<std::string> keywords;
  std::map<std::string, std::vector<int>> where;
  for (int i = 0; i < static_cast<int>(tokens.size()); ++i) {
    const std::string lower = absl::AsciiStrToLower(tokens[i]);
    const PosTag tag = a->pos[i];
    if ((tag != PosTag::kNoun && tag != PosTag::kAdj &&
         tag != PosTag::kVerb && tag != PosTag::kAdv) ||
        a->EntityAt(i) || !IsWord(tokens[i]) || lex.IsStopWord(lower) ||
        IsInterrogative(lower)) {
      continue;
    }
    if (where[lower].empty()) keywords.push_back(lower);
    where[lower].push_back(i);
  }
  if (keywords.empty()) return std::vector<Candidate>{};

  const size_t k = static_cast<size_t>(
      std::ceil(cfg.replacement_rate * static_cast<double>(keywords.size())));
  Rng rng(DeriveSeed(cfg.seed, absl::StrCat(p.id, "/synonym")));
  std::vector<size_t> picks =
      rng.SampleIndices(keywords.size(), std::min(k, keywords.size()));

  auto substitute = [&](std::vector<std::string>& out,
                        const std::string& keyword, const std::string& word) {
    for (int i : where[keyword]) out[i] = MatchCase(word, tokens[i]);
  };

  std::vector<std::pair<std::string, std::vector<std::string>>> survivors;
  for (size_t pick : picks) {
    const std::string& keyword = keywords[pick];
    absl::StatusOr<std::vector<Neighbor>> neighbors =
        provider.Nearest(keyword, cfg.top_k);
    if (!neighbors.ok()) return neighbors.status();
    const int first = where[keyword].front();
    std::vector<std::string> kept;
    for (const Neighbor& nb : *neighbors) {
      if (!UsableReplacement(nb.word, keyword)) continue;
      std::vector<std::string> trial = tokens;
      substitute(trial, keyword, nb.word);
      // Same part of speech in the rewritten context, or the neighbour
      // does not fit the slot.
      absl::StatusOr<AnnotatedText> re = Annotate(JoinTokens(trial), annotator);
      if (!re.ok() || re->tokens.size() != tokens.size() ||
          re->pos[first] != a->pos[first]) {
        continue;
      }
      kept.push_back(nb.word);
    }
    if (!kept.empty()) survivors.emplace_back(keyword, std::move(kept));
  }

  Emitter emitter(p, Method::kSynonym, static_cast<size_t>(-1));
  for (const auto& [keyword, words] : survivors) {
    for (const std::string& w : words) {
      std::vector<std::string> out = tokens;
      substitute(out, keyword, w);
      emitter.Emit(out);
    }
  }
  if (survivors.size() > 1) {
    std::vector<std::string> out = tokens;
    for (const auto& [keyword, words] : survivors) {
      substitute(out, keyword, words.front());
    }
    emitter.Emit(out);
  }
  return emitter.Take();
}

absl::StatusOr<std::vector<Candidate>> EntityAugment(
    const Problem& p, const SubstitutionConfig& cfg,
    const AnnotatorBackend& annotator, const Lexicons& lexicons) {
  absl::StatusOr<AnnotatedText> a = Annotate(p.Text(), annotator);
  if (!a.ok()) return a.status();
  if (a->entities.empty()) return std::vector<Candidate>{};
  const std::vector<std::string> tokens = TokenTexts(*a);

  struct Entity {
    EntityKind kind;
    bool titled = false;  // "Mrs. Smith": only the surname changes
    std::optional<Gender> keep_gender;
  };
  auto key_of = [&](const EntitySpan& s) {
    std::vector<std::string> words(tokens.begin() + s.begin,
                                   tokens.begin() + s.end);
    return absl::StrCat(EntityKindName(s.kind), "|",
                        absl::AsciiStrToLower(absl::StrJoin(words, " ")));
  };

  std::vector<std::string> order;
  std::map<std::string, Entity> entities;
  std::set<std::string> taken;  // never map onto a word already in the text
  for (const std::string& t : tokens) taken.insert(absl::AsciiStrToLower(t));
  for (const EntitySpan& s : a->entities) {
    const std::string key = key_of(s);
    if (entities.count(key)) continue;
    Entity e{s.kind, false, std::nullopt};
    e.titled = s.kind == EntityKind::kPerson && s.end - s.begin == 2 &&
               absl::EndsWith(tokens[s.begin], ".");
    if (e.titled) e.keep_gender = s.gender;
    entities.emplace(key, e);
    order.push_back(key);
  }
  // A name a pronoun points back to must keep that pronoun's gender.
  for (const std::vector<int>& chain : a->coref_chains) {
    if (chain.size() < 2) continue;
    std::optional<size_t> span = a->EntityAt(chain.front());
    if (!span) continue;
    const EntitySpan& s = a->entities[*span];
    Gender g = s.gender != Gender::kUnknown
                   ? s.gender
                   : PronounGender(tokens[chain[1]]).value_or(Gender::kUnknown);
    Entity& e = entities[key_of(s)];
    if (g != Gender::kUnknown) e.keep_gender = g;
  }

  std::vector<std::string> all_names = lexicons.female_names();
  all_names.insert(all_names.end(), lexicons.male_names().begin(),
                   lexicons.male_names().end());
  auto join = [](const std::vector<std::string>& v) {
    return absl::StrJoin(v, " ");
  };

  Emitter emitter(p, Method::kEntity, cfg.entity_candidates);
  for (int draw = 0; draw < cfg.entity_candidates; ++draw) {
    Rng rng(DeriveSeed(cfg.seed, absl::StrCat(p.id, "/entity/", draw)));
    std::map<std::string, std::vector<std::string>> mapping;
    std::set<std::string> used = taken;
    for (const std::string& key : order) {
      const Entity& e = entities[key];
      std::vector<std::vector<std::string>> pool;
      if (e.kind == EntityKind::kPerson) {
        const std::vector<std::string>& names =
            e.keep_gender == Gender::kFemale ? lexicons.female_names()
            : e.keep_gender == Gender::kMale ? lexicons.male_names()
                                             : all_names;
        for (const std::string& n : names) {
          // Unisex names would break the agreement we are protecting.
          if (e.keep_gender && *e.keep_gender != Gender::kUnknown &&
              lexicons.NameGender(n) != e.keep_gender) {
            continue;
          }
          pool.push_back({n});
        }
      } else {
        pool = e.kind == EntityKind::kPlace ? lexicons.places()
                                            : lexicons.orgs();
      }
      if (pool.empty()) continue;  // left as is
      for (size_t attempt = 0; attempt < 64; ++attempt) {
        const std::vector<std::string>& choice = pool[rng.Uniform(pool.size())];
        const std::string lower = absl::AsciiStrToLower(join(choice));
        if (used.count(lower)) continue;
        bool clash = false;
        for (const std::string& w : choice) {
          clash |= used.count(absl::AsciiStrToLower(w)) > 0;
        }
        if (clash) continue;
        used.insert(lower);
        for (const std::string& w : choice) {
          used.insert(absl::AsciiStrToLower(w));
        }
        mapping[key] = choice;
        break;
      }
    }
    if (mapping.empty()) continue;

    std::vector<std::string> out;
    size_t next_span = 0;
    for (int i = 0; i < static_cast<int>(tokens.size());) {
      while (next_span < a->entities.size() &&
             a->entities[next_span].end <= i) {
        ++next_span;
      }
      if (next_span < a->entities.size() &&
          a->entities[next_span].begin == i) {
        const EntitySpan& s = a->entities[next_span];
        const std::string key = key_of(s);
        auto it = mapping.find(key);
        if (it != mapping.end()) {
          if (entities[key].titled) out.push_back(tokens[s.begin]);
          out.insert(out.end(), it->second.begin(), it->second.end());
          i = s.end;
          continue;
        }
      }
      out.push_back(tokens[i++]);
    }
    emitter.Emit(out);
  }
  return emitter.Take();
}

}  // namespace mwpa
