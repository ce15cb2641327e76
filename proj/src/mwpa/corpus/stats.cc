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

#include "mwpa/corpus/stats.h"

#include <map>
#include <set>

#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "mwpa/common/random.h"
#include "mwpa/common/status.h"
#include "mwpa/textlab/tokenizer.h"

namespace mwpa {

CorpusStats ComputeCorpusStats(absl::Span<const Problem> problems) {
  CorpusStats stats;
  std::set<std::string> vocabulary;
  for (const Problem& p : problems) {
    ++stats.problem_count;
    for (const std::string& sentence : p.Sentences()) {
      for (const std::string& token : Tokenize(sentence)) {
        ++stats.token_count;
        vocabulary.insert(absl::AsciiStrToLower(token));
      }
    }
  }
  stats.vocabulary_size = static_cast<int64_t>(vocabulary.size());
  return stats;
}

absl::StatusOr<std::vector<Fold>> KFoldSplit(
    absl::Span<const Problem> problems, int k, uint64_t seed) {
  // Groups in first-appearance order so the shuffle input is stable.
  std::vector<std::string> roots;
  std::map<std::string, std::vector<std::string>> members;
  for (const Problem& p : problems) {
    auto [it, inserted] = members.try_emplace(p.RootId());
    if (inserted) roots.push_back(p.RootId());
    it->second.push_back(p.id);
  }
  if (k < 2 || k > static_cast<int>(roots.size())) {
    return MakeError(absl::StatusCode::kInvalidArgument, "invalid_k",
                     absl::StrCat("k=", k, " needs 2 <= k <= ", roots.size(),
                                  " problem groups"));
  }
  Rng rng(seed);
  rng.Shuffle(roots);
  std::vector<std::vector<std::string>> test(k);
  for (size_t g = 0; g < roots.size(); ++g) {
    for (const std::string& id : members[roots[g]]) {
      test[g % k].push_back(id);
    }
  }
  std::vector<Fold> folds(k);
  for (int f = 0; f < k; ++f) {
    folds[f].test_ids = test[f];
    for (int other = 0; other < k; ++other) {
      if (other == f) continue;
      folds[f].train_ids.insert(folds[f].train_ids.end(), test[other].begin(),
                                test[other].end());
    }
  }
  return folds;
}

}  // namespace mwpa
