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

#ifndef MWPA_PIPELINE_PIPELINE_H_
#define MWPA_PIPELINE_PIPELINE_H_

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "mwpa/augment/candidate.h"
#include "mwpa/corpus/problem.h"
#include "mwpa/pipeline/config.h"
#include "mwpa/providers/providers.h"
#include "mwpa/selection/selection.h"
#include "mwpa/textlab/annotator.h"
#include "mwpa/textlab/lexicons.h"

namespace mwpa {

// Borrowed providers. A null member disables whatever needs it.
struct ProviderSet {
  const ParaphraseProvider* paraphrase = nullptr;
  const TranslationProvider* translate = nullptr;
  const MaskFillProvider* fill = nullptr;
  const WordEmbeddingProvider* nearest = nullptr;
  const SimilarityProvider* similarity = nullptr;
  const SolverLossProvider* loss = nullptr;
  const AnnotatorBackend* annotator = nullptr;
  const Lexicons* lexicons = &Lexicons::Default();
};

// Owns the providers a config asks for.
class ProviderBundle {
 public:
  // Remote similarity services must pass ProbeSimilarity first.
  static absl::StatusOr<std::unique_ptr<ProviderBundle>> FromConfig(
      const PipelineConfig& config);

  const ProviderSet& set() const { return set_; }

 private:
  std::vector<std::unique_ptr<Provider>> owned_;
  std::unique_ptr<AnnotatorBackend> annotator_;
  ProviderSet set_;
};

// Hard gates every emitted augmentation must pass.
struct ValidationReport {
  bool numbers_preserved = false;
  bool alignment_ok = false;
  bool differs_from_parent = false;
  bool nonempty = false;
  bool question_present = false;
  bool events_ordered = true;  // only checked for reordering

  bool pass() const {
    return numbers_preserved && alignment_ok && differs_from_parent &&
           nonempty && question_present && events_ordered;
  }
  // Name of the first failing gate, "" if all pass.
  std::string FirstFailure() const;
};

ValidationReport ValidateCandidate(
    const Problem& parent, const Candidate& candidate,
    const Lexicons& lexicons = Lexicons::Default());

struct MethodCounters {
  int generated = 0;        // candidates out of the method
  int provider_errors = 0;  // problems where the method was abandoned
  int duplicates = 0;
  int kept = 0;             // passed the gates, entered selection
  int selected = 0;
  std::map<std::string, int> rejected;     // by the method, by error kind
  std::map<std::string, int> gate_failed;  // by the first failing gate
};

struct AugmentStats {
  int input_problems = 0;
  int output_problems = 0;
  int bases = 0;
  int bases_dropped = 0;
  int primary_failures = 0;
  std::map<std::string, MethodCounters> per_method;
  std::map<std::string, LabelCounters> per_label;

  double growth() const {
    return input_problems == 0
               ? 0.0
               : static_cast<double>(output_problems) / input_problems;
  }
  int provider_failures() const;
  std::string ToJson() const;
};

struct AugmentResult {
  // Each original followed by its selected augmentations, in input order.
  std::vector<Problem> problems;
  std::vector<SelectionDecision> decisions;
  AugmentStats stats;
  // One line per provider failure, for the log.
  std::vector<std::string> failures;

  std::string ReportJsonl() const;
};

// Primary stage, secondary methods on the original and each base, gates,
// dedup, then one selection per method or family. Output does not depend
// on config.workers.
AugmentResult AugmentDataset(const std::vector<Problem>& input,
                             const PipelineConfig& config,
                             const ProviderSet& providers);

}  // namespace mwpa

#endif  // MWPA_PIPELINE_PIPELINE_H_
