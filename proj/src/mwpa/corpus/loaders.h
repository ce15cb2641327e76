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

#ifndef MWPA_CORPUS_LOADERS_H_
#define MWPA_CORPUS_LOADERS_H_

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "absl/types/span.h"
#include "mwpa/corpus/problem.h"

namespace mwpa {

enum class CorpusFormat { kMawpsJson, kAsdivXmlish, kCanonicalJsonl };

absl::StatusOr<CorpusFormat> ParseCorpusFormat(absl::string_view name);
absl::string_view CorpusFormatName(CorpusFormat format);

struct Reject {
  size_t record_index = 0;
  std::string record_id;
  std::string kind;
  std::string reason;
};

struct LoadResult {
  std::vector<Problem> problems;
  std::vector<Reject> rejects;
};

// A whole-file failure (unreadable, not JSON at all) is an error; a bad
// record only lands in `rejects`.
absl::StatusOr<LoadResult> LoadCorpus(const std::filesystem::path& path,
                                      CorpusFormat format);
absl::StatusOr<LoadResult> ParseCorpus(absl::string_view contents,
                                       CorpusFormat format);

// One JSON object per problem, keys in a fixed order, no trailing spaces.
std::string ProblemToJsonLine(const Problem& problem);
std::string SerializeCanonicalJsonl(absl::Span<const Problem> problems);
absl::Status WriteCanonicalJsonl(const std::filesystem::path& path,
                                 absl::Span<const Problem> problems);

}  // namespace mwpa

#endif  // MWPA_CORPUS_LOADERS_H_
