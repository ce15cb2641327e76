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

#ifndef MWPA_PIPELINE_EVALUATION_H_
#define MWPA_PIPELINE_EVALUATION_H_

// Blind human evaluation: export a sample of augmented problems, record
// ratings, summarize them per method family.

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "mwpa/corpus/problem.h"

namespace mwpa {

struct EvalItem {
  std::string blind_id;  // all an evaluator sees of the sample's identity
  std::string original;
  std::string augmented;
  // Key side; never shown to evaluators.
  std::string candidate_id;
  std::string parent_id;
  std::string method;
  std::string family;
};

struct EvalBatch {
  std::vector<EvalItem> items;  // presentation order

  // {"blind_id","original","augmented"} per line.
  std::string BatchJsonl() const;
  // {"blind_id","candidate_id","parent_id","method","family"} per line.
  std::string KeyJsonl() const;
};

// Samples llround(fraction * N) of the N augmented records in `corpus`,
// shuffled, with random blind ids. Same corpus and seed, same batch.
// Errors: "bad_fraction" unless 0 < fraction <= 1, "missing_parent".
absl::StatusOr<EvalBatch> ExportEvalBatch(const std::vector<Problem>& corpus,
                                          double fraction, uint64_t seed);

// Reads a batch file, and optionally its key, back into items.
absl::StatusOr<EvalBatch> LoadEvalBatch(const std::filesystem::path& batch);
absl::StatusOr<std::map<std::string, EvalItem>> LoadEvalKey(
    const std::filesystem::path& key);

struct Rating {
  std::string candidate_id;  // blind id
  std::string evaluator_id;
  bool equation_preserved = false;
  bool numbers_preserved = false;
  double semantic_similarity = 0;  // [0, 1]
  int grammaticality = 0;  // 1..5
  std::string timestamp;   // set by whoever records it

  friend bool operator==(const Rating&, const Rating&) = default;
};

// Error "bad_rating" naming the offending field.
absl::StatusOr<Rating> ParseRating(const std::string& json_line);
std::string RatingToJson(const Rating& r);
// Missing file reads as no ratings. Bad lines are errors.
absl::StatusOr<std::vector<Rating>> LoadRatings(
    const std::filesystem::path& path);

struct FamilySummary {
  std::string family;  // "paraphrase", "substitution", "unknown" or "all"
  int samples = 0;
  int ratings = 0;
  double equation_preserved_pct = 0;
  double numbers_preserved_pct = 0;
  double mean_similarity = 0;
  double mean_grammaticality = 0;
};

// Each sample's scores are averaged over its evaluators first, then over
// samples. A later rating of the same sample by the same evaluator
// replaces the earlier one. Samples missing from `key` count as "unknown".
// Families without ratings get no row; no ratings at all, no rows.
std::vector<FamilySummary> SummarizeRatings(
    const std::vector<Rating>& ratings,
    const std::map<std::string, EvalItem>& key);

// The one rendering shared by the CLI and the review service.
std::string FormatSummaryJson(const std::vector<FamilySummary>& summary);
std::string FormatSummaryTable(const std::vector<FamilySummary>& summary);

}  // namespace mwpa

#endif  // MWPA_PIPELINE_EVALUATION_H_
