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

#ifndef MWPA_PIPELINE_CONFIG_H_
#define MWPA_PIPELINE_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "mwpa/augment/paraphrase.h"
#include "mwpa/augment/substitution.h"
#include "mwpa/corpus/problem.h"

namespace mwpa {

enum class CombineMode {
  kPerFamily,  // at most one augmentation per family per problem
  kUnion,      // at most one per method
};

absl::string_view CombineModeName(CombineMode mode);

// Provider names, as used in config keys and MWPA_PROVIDER_<NAME>_URL.
inline constexpr const char* kProviderNames[] = {
    "paraphrase", "translate", "fill", "nearest", "similarity", "loss"};

struct PipelineConfig {
  int base_candidates = kDefaultBaseCandidates;
  std::set<Method> methods = {std::begin(kAllMethods), std::end(kAllMethods)};
  bool apply_to_original = true;  // secondary stage also on the original
  std::vector<TranslationRoute> routes = {RouteEnRuEn(), RouteEnDeFrEn()};
  CombineMode combine_mode = CombineMode::kPerFamily;
  SubstitutionConfig substitution;
  uint64_t seed = 0;
  int workers = 4;
  // Per provider: "stub", "remote" (URL from the environment) or a URL.
  std::map<std::string, std::string> providers;

  absl::Status Validate() const;
  // Stored provider choice, "stub" if unset.
  std::string ProviderChoice(const std::string& name) const;
};

// Text format, one "key = value" per line, '#' starts a comment:
//
//   base_candidates    = 7
//   methods            = problem_reorder, round_trip, fill_mask, synonym, entity
//                        ("none" disables the secondary stage)
//   apply_to_original  = true
//   routes             = en_ru_en, en_de_fr_en
//   combine_mode       = per_family | union
//   seed               = 0
//   workers            = 4
//   top_k, max_masks, mask_window, replacement_rate,
//   max_fill_candidates, entity_candidates
//   providers          = stub | remote      (all six at once)
//   provider.<name>    = stub | remote | http://host:port
//
// Unknown keys are errors, so typos do not pass silently.
absl::StatusOr<PipelineConfig> ParseConfig(absl::string_view text);
absl::StatusOr<PipelineConfig> LoadConfig(const std::filesystem::path& path);

}  // namespace mwpa

#endif  // MWPA_PIPELINE_CONFIG_H_
