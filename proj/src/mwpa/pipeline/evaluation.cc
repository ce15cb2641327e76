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

#include "mwpa/pipeline/evaluation.h"

#include <cmath>
#include <set>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "json.hpp"
#include "mwpa/common/file.h"
#include "mwpa/common/random.h"
#include "mwpa/common/status.h"

namespace mwpa {
namespace {

using Json = nlohmann::json;
using OJson = nlohmann::ordered_json;

absl::Status BadRating(absl::string_view what) {
  return MakeError(absl::StatusCode::kInvalidArgument, "bad_rating", what);
}

absl::Status BadFile(const std::filesystem::path& path, int line,
                     absl::string_view what) {
  return MakeError(absl::StatusCode::kDataLoss, "bad_eval_file",
                   absl::StrCat(path.string(), ":", line, ": ", what));
}

std::string BlindId(Rng& rng) {
  return absl::StrFormat("s%012x", rng.Next() & 0xffffffffffffULL);
}

// Calls f(json, line_no) for each non-blank line.
template <typename F>
absl::Status ForEachJsonLine(const std::filesystem::path& path, F f) {
  absl::StatusOr<std::string> text = ReadFile(path);
  if (!text.ok()) return text.status();
  int line_no = 0;
  size_t pos = 0;
  while (pos < text->size()) {
    size_t end = text->find('\n', pos);
    if (end == std::string::npos) end = text->size();
    std::string line = text->substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (absl::Status s = f(line, line_no); !s.ok()) return s;
  }
  return absl::OkStatus();
}

bool GetString(const Json& j, const char* key, std::string* out) {
  if (!j.contains(key) || !j[key].is_string()) return false;
  *out = j[key].get<std::string>();
  return true;
}

}  // namespace

std::string EvalBatch::BatchJsonl() const {
  std::string out;
  for (const EvalItem& item : items) {
    OJson j;
    j["blind_id"] = item.blind_id;
    j["original"] = item.original;
    j["augmented"] = item.augmented;
    absl::StrAppend(&out, j.dump(), "\n");
  }
  return out;
}

std::string EvalBatch::KeyJsonl() const {
  std::string out;
  for (const EvalItem& item : items) {
    OJson j;
    j["blind_id"] = item.blind_id;
    j["candidate_id"] = item.candidate_id;
    j["parent_id"] = item.parent_id;
    j["method"] = item.method;
    j["family"] = item.family;
    absl::StrAppend(&out, j.dump(), "\n");
  }
  return out;
}

absl::StatusOr<EvalBatch> ExportEvalBatch(const std::vector<Problem>& corpus,
                                          double fraction, uint64_t seed) {
  if (!(fraction > 0 && fraction <= 1)) {
    return MakeError(absl::StatusCode::kInvalidArgument, "bad_fraction",
                     absl::StrCat("fraction ", fraction, " is not in (0, 1]"));
  }
  std::map<std::string, const Problem*> by_id;
  for (const Problem& p : corpus) by_id[p.id] = &p;

  std::vector<const Problem*> augmented;
  for (const Problem& p : corpus) {
    if (!p.provenance) continue;
    if (!by_id.count(p.provenance->parent_id)) {
      return MakeError(absl::StatusCode::kDataLoss, "missing_parent",
                       absl::StrCat(p.id, ": parent '",
                                    p.provenance->parent_id,
                                    "' is not in the corpus"));
    }
    augmented.push_back(&p);
  }
  const size_t k = std::min<size_t>(
      augmented.size(),
      static_cast<size_t>(std::llround(fraction * augmented.size())));

  Rng rng(DeriveSeed(seed, "eval_export"));
  std::vector<size_t> picked = rng.SampleIndices(augmented.size(), k);
  rng.Shuffle(picked);

  EvalBatch batch;
  std::set<std::string> used;
  for (size_t i : picked) {
    const Problem& p = *augmented[i];
    EvalItem item;
    do {
      item.blind_id = BlindId(rng);
    } while (!used.insert(item.blind_id).second);
    item.original = by_id[p.provenance->parent_id]->Text();
    item.augmented = p.Text();
    item.candidate_id = p.id;
    item.parent_id = p.provenance->parent_id;
    item.method = std::string(MethodName(p.provenance->method));
    item.family = std::string(FamilyName(FamilyOf(p.provenance->method)));
    batch.items.push_back(std::move(item));
  }
  return batch;
}

absl::StatusOr<EvalBatch> LoadEvalBatch(const std::filesystem::path& path) {
  EvalBatch batch;
  absl::Status s = ForEachJsonLine(
      path, [&](const std::string& line, int n) -> absl::Status {
        Json j = Json::parse(line, nullptr, false);
        EvalItem item;
        if (j.is_discarded() || !GetString(j, "blind_id", &item.blind_id) ||
            !GetString(j, "original", &item.original) ||
            !GetString(j, "augmented", &item.augmented)) {
          return BadFile(path, n, "want blind_id, original, augmented");
        }
        batch.items.push_back(std::move(item));
        return absl::OkStatus();
      });
  if (!s.ok()) return s;
  return batch;
}

absl::StatusOr<std::map<std::string, EvalItem>> LoadEvalKey(
    const std::filesystem::path& path) {
  std::map<std::string, EvalItem> key;
  absl::Status s = ForEachJsonLine(
      path, [&](const std::string& line, int n) -> absl::Status {
        Json j = Json::parse(line, nullptr, false);
        EvalItem item;
        if (j.is_discarded() || !GetString(j, "blind_id", &item.blind_id) ||
            !GetString(j, "candidate_id", &item.candidate_id) ||
            !GetString(j, "parent_id", &item.parent_id) ||
            !GetString(j, "method", &item.method) ||
            !GetString(j, "family", &item.family)) {
          return BadFile(path, n,
                         "want blind_id, candidate_id, parent_id, method, "
                         "family");
        }
        key[item.blind_id] = std::move(item);
        return absl::OkStatus();
      });
  if (!s.ok()) return s;
  return key;
}

absl::StatusOr<Rating> ParseRating(const std::string& json_line) {
  Json j = Json::parse(json_line, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return BadRating("not a JSON object");
  Rating r;
  if (!GetString(j, "candidate_id", &r.candidate_id) || r.candidate_id.empty()) {
    return BadRating("candidate_id must be a non-empty string");
  }
  if (!GetString(j, "evaluator_id", &r.evaluator_id) ||
      r.evaluator_id.empty()) {
    return BadRating("evaluator_id must be a non-empty string");
  }
  for (auto [key, out] : {std::pair{"equation_preserved", &r.equation_preserved},
                          std::pair{"numbers_preserved", &r.numbers_preserved}}) {
    if (!j.contains(key) || !j[key].is_boolean()) {
      return BadRating(absl::StrCat(key, " must be true or false"));
    }
    *out = j[key].get<bool>();
  }
  if (!j.contains("semantic_similarity") || !j["semantic_similarity"].is_number()) {
    return BadRating("semantic_similarity must be a number");
  }
  r.semantic_similarity = j["semantic_similarity"].get<double>();
  if (!std::isfinite(r.semantic_similarity) || r.semantic_similarity < 0 || r.semantic_similarity > 1) {
    return BadRating("semantic_similarity must be in [0, 1]");
  }
  if (!j.contains("grammaticality") || !j["grammaticality"].is_number_integer()) {
    return BadRating("grammaticality must be an integer");
  }
  r.grammaticality = j["grammaticality"].get<int>();
  if (r.grammaticality < 1 || r.grammaticality > 5) {
    return BadRating("grammaticality must be in 1..5");
  }
  GetString(j, "timestamp", &r.timestamp);
  return r;
}

std::string RatingToJson(const Rating& r) {
  OJson j;
  j["candidate_id"] = r.candidate_id;
  j["evaluator_id"] = r.evaluator_id;
  j["equation_preserved"] = r.equation_preserved;
  j["numbers_preserved"] = r.numbers_preserved;
  j["semantic_similarity"] = r.semantic_similarity;
  j["grammaticality"] = r.grammaticality;
  if (!r.timestamp.empty()) j["timestamp"] = r.timestamp;
  return j.dump();
}

absl::StatusOr<std::vector<Rating>> LoadRatings(
    const std::filesystem::path& path) {
  std::vector<Rating> ratings;
  if (!std::filesystem::exists(path)) return ratings;
  absl::Status s = ForEachJsonLine(
      path, [&](const std::string& line, int n) -> absl::Status {
        absl::StatusOr<Rating> r = ParseRating(line);
        if (!r.ok()) return BadFile(path, n, r.status().message());
        ratings.push_back(*std::move(r));
        return absl::OkStatus();
      });
  if (!s.ok()) return s;
  return ratings;
}

std::vector<FamilySummary> SummarizeRatings(
    const std::vector<Rating>& ratings,
    const std::map<std::string, EvalItem>& key) {
  // sample -> evaluator -> latest rating
  std::map<std::string, std::map<std::string, const Rating*>> latest;
  for (const Rating& r : ratings) latest[r.candidate_id][r.evaluator_id] = &r;

  struct Acc {
    int samples = 0, ratings = 0;
    double eq = 0, num = 0, sim = 0, gram = 0;
  };
  std::map<std::string, Acc> by_family;
  Acc all;
  for (const auto& [sample, evaluators] : latest) {
    double eq = 0, num = 0, sim = 0, gram = 0;
    for (const auto& [who, r] : evaluators) {
      eq += r->equation_preserved;
      num += r->numbers_preserved;
      sim += r->semantic_similarity;
      gram += r->grammaticality;
    }
    const double n = static_cast<double>(evaluators.size());
    auto it = key.find(sample);
    const std::string family = it == key.end() ? "unknown" : it->second.family;
    for (Acc* acc : {&by_family[family], &all}) {
      ++acc->samples;
      acc->ratings += static_cast<int>(evaluators.size());
      acc->eq += eq / n;
      acc->num += num / n;
      acc->sim += sim / n;
      acc->gram += gram / n;
    }
  }

  auto finish = [](const std::string& name, const Acc& a) {
    FamilySummary s;
    s.family = name;
    s.samples = a.samples;
    s.ratings = a.ratings;
    if (a.samples > 0) {
      s.equation_preserved_pct = 100.0 * a.eq / a.samples;
      s.numbers_preserved_pct = 100.0 * a.num / a.samples;
      s.mean_similarity = a.sim / a.samples;
      s.mean_grammaticality = a.gram / a.samples;
    }
    return s;
  };
  std::vector<FamilySummary> out;
  if (all.samples == 0) return out;
  for (const char* f : {"paraphrase", "substitution"}) {
    if (by_family.count(f)) out.push_back(finish(f, by_family[f]));
  }
  for (const auto& [name, acc] : by_family) {
    if (name != "paraphrase" && name != "substitution") {
      out.push_back(finish(name, acc));
    }
  }
  out.push_back(finish("all", all));
  return out;
}

std::string FormatSummaryJson(const std::vector<FamilySummary>& summary) {
  OJson rows = OJson::array();
  for (const FamilySummary& s : summary) {
    OJson j;
    j["family"] = s.family;
    j["samples"] = s.samples;
    j["ratings"] = s.ratings;
    j["equation_preserved_pct"] = s.equation_preserved_pct;
    j["numbers_preserved_pct"] = s.numbers_preserved_pct;
    j["mean_similarity"] = s.mean_similarity;
    j["mean_grammaticality"] = s.mean_grammaticality;
    rows.push_back(std::move(j));
  }
  OJson root;
  root["families"] = std::move(rows);
  return root.dump(2) + "\n";
}

std::string FormatSummaryTable(const std::vector<FamilySummary>& summary) {
  std::string out = absl::StrFormat("%-14s %7s %7s %9s %9s %6s %6s\n",
                                    "family", "samples", "ratings", "eq_pres",
                                    "num_pres", "sim", "gram");
  for (const FamilySummary& s : summary) {
    absl::StrAppend(
        &out, absl::StrFormat("%-14s %7d %7d %8.1f%% %8.1f%% %6.2f %6.2f\n",
                              s.family, s.samples, s.ratings,
                              s.equation_preserved_pct,
                              s.numbers_preserved_pct, s.mean_similarity,
                              s.mean_grammaticality));
  }
  return out;
}

}  // namespace mwpa
