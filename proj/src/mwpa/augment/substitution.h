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

#ifndef MWPA_AUGMENT_SUBSTITUTION_H_
#define MWPA_AUGMENT_SUBSTITUTION_H_

// Substitution family: fill-masking, synonym replacement and named-entity
// replacement. None of them ever touches a numeral token.

#include <cstdint>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "mwpa/augment/candidate.h"
#include "mwpa/corpus/problem.h"
#include "mwpa/providers/providers.h"
#include "mwpa/textlab/annotator.h"

namespace mwpa {

struct SubstitutionConfig {
  int top_k = 10;          // embedding neighbours per keyword
  int max_masks = 3;       // masked tokens per problem
  int mask_window = 5;     // "near a number", in tokens within a sentence
  double replacement_rate = 0.15;
  uint64_t seed = 0;
  int max_fill_candidates = 8;  // fill combinations kept per problem
  int entity_candidates = 3;    // independent name draws per problem

  absl::Status Validate() const;
};

// Masks up to max_masks nouns and adjectives, numbers' neighbours first,
// and turns the filler's proposals into candidates, fewest edits first.
// No eligible token gives an empty list, not an error.
absl::StatusOr<std::vector<Candidate>> FillMaskAugment(
    const Problem& p, const SubstitutionConfig& cfg,
    const AnnotatorBackend& annotator, const MaskFillProvider& provider);

// Samples ceil(rate * eligible) keywords and swaps every occurrence of one
// (or, in the last candidate, all) for an embedding neighbour with the same
// part of speech in context.
absl::StatusOr<std::vector<Candidate>> SynonymAugment(
    const Problem& p, const SubstitutionConfig& cfg,
    const AnnotatorBackend& annotator, const WordEmbeddingProvider& provider);

// Renames people, places and organisations consistently and injectively.
// A person a pronoun refers to keeps their gender.
absl::StatusOr<std::vector<Candidate>> EntityAugment(
    const Problem& p, const SubstitutionConfig& cfg,
    const AnnotatorBackend& annotator,
    const Lexicons& lexicons = Lexicons::Default());

}  // namespace mwpa

#endif  // MWPA_AUGMENT_SUBSTITUTION_H_
