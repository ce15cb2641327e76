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

#ifndef MWPA_CORPUS_STATS_H_
#define MWPA_CORPUS_STATS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/types/span.h"
#include "mwpa/corpus/problem.h"

namespace mwpa {

struct CorpusStats {
  int64_t problem_count = 0;
  // Distinct case-folded tokens over body and question.
  int64_t vocabulary_size = 0;
  int64_t token_count = 0;
};

CorpusStats ComputeCorpusStats(absl::Span<const Problem> problems);

struct Fold {
  std::vector<std::string> train_ids;
  std::vector<std::string> test_ids;
};

// Problems are grouped by RootId() so an augmented problem always sits on
// the same side as its parent. Groups are shuffled with `seed` and dealt
// round-robin, so per-fold group counts differ by at most one.
// Error kind "invalid_k" unless 2 <= k <= number of groups.
absl::StatusOr<std::vector<Fold>> KFoldSplit(
    absl::Span<const Problem> problems, int k, uint64_t seed);

}  // namespace mwpa

#endif  // MWPA_CORPUS_STATS_H_
