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

#ifndef MWPA_PROVIDERS_PROVIDERS_H_
#define MWPA_PROVIDERS_PROVIDERS_H_

#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "mwpa/equation/expr.h"

namespace mwpa {

// Sentinel the fill-mask method writes in place of each masked token.
inline constexpr char kMaskToken[] = "<mask>";

// Shared knobs. The pipeline caps concurrent calls at max_in_flight() (0
// means no cap) and serialises providers that are not thread safe.
class Provider {
 public:
  virtual ~Provider() = default;
  virtual int max_in_flight() const { return 0; }
  virtual bool thread_safe() const { return true; }
};

class ParaphraseProvider : public Provider {
 public:
  // At most n non-empty paraphrases of `text`.
  virtual absl::StatusOr<std::vector<std::string>> Generate(
      absl::string_view text, int n) const = 0;
};

class TranslationProvider : public Provider {
 public:
  // Language codes are ISO 639-1 ("en", "ru", "de", "fr").
  virtual absl::StatusOr<std::string> Translate(absl::string_view text,
                                                absl::string_view source,
                                                absl::string_view target)
      const = 0;
};

class MaskFillProvider : public Provider {
 public:
  // One ranked list per kMaskToken in `masked_text`, in order, each with at
  // most top_k single-token fills.
  virtual absl::StatusOr<std::vector<std::vector<std::string>>> Fill(
      absl::string_view masked_text, int top_k) const = 0;
};

struct Neighbor {
  std::string word;
  double cosine = 0;
};

class WordEmbeddingProvider : public Provider {
 public:
  // Descending cosine, query word excluded.
  virtual absl::StatusOr<std::vector<Neighbor>> Nearest(absl::string_view word,
                                                        int top_k) const = 0;
};

class SimilarityProvider : public Provider {
 public:
  // Symmetric, in [-1, 1], 1 for identical texts.
  virtual absl::StatusOr<double> Similarity(absl::string_view a,
                                            absl::string_view b) const = 0;
};

class SolverLossProvider : public Provider {
 public:
  // Finite and non-negative: how hard the solver finds producing
  // `equation` from `problem_text`.
  virtual absl::StatusOr<double> Loss(absl::string_view problem_text,
                                      const Equation& equation) const = 0;
};

// Checks self-similarity and symmetry on a probe pair. Used before trusting
// a remote similarity service. Error kind "similarity_contract".
absl::Status ProbeSimilarity(const SimilarityProvider& provider);

}  // namespace mwpa

#endif  // MWPA_PROVIDERS_PROVIDERS_H_
