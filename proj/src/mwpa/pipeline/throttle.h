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

#ifndef MWPA_PIPELINE_THROTTLE_H_
#define MWPA_PIPELINE_THROTTLE_H_

// Wrappers that enforce a provider's concurrency limits when the pipeline
// runs with several workers.

#include <condition_variable>
#include <mutex>
#include <string>
#include <vector>

#include "mwpa/providers/providers.h"
#include "mwpa/textlab/annotator.h"

namespace mwpa {

// Counting semaphore. A limit of 0 admits everyone.
class CallGate {
 public:
  explicit CallGate(int limit) : limit_(limit) {}

  template <typename F>
  auto Run(F&& f) const {
    if (limit_ <= 0) return f();
    {
      std::unique_lock<std::mutex> lock(mu_);
      cv_.wait(lock, [&] { return in_flight_ < limit_; });
      ++in_flight_;
    }
    struct Release {
      const CallGate* g;
      ~Release() {
        {
          std::lock_guard<std::mutex> lock(g->mu_);
          --g->in_flight_;
        }
        g->cv_.notify_one();
      }
    } release{this};
    return f();
  }

  int limit() const { return limit_; }

 private:
  int limit_;
  mutable std::mutex mu_;
  mutable std::condition_variable cv_;
  mutable int in_flight_ = 0;
};

inline int EffectiveLimit(const Provider& p) {
  return p.thread_safe() ? p.max_in_flight() : 1;
}

class ThrottledParaphraser : public ParaphraseProvider {
 public:
  explicit ThrottledParaphraser(const ParaphraseProvider& inner)
      : inner_(inner), gate_(EffectiveLimit(inner)) {}
  absl::StatusOr<std::vector<std::string>> Generate(absl::string_view text,
                                                    int n) const override {
    return gate_.Run([&] { return inner_.Generate(text, n); });
  }

 private:
  const ParaphraseProvider& inner_;
  CallGate gate_;
};

class ThrottledTranslator : public TranslationProvider {
 public:
  explicit ThrottledTranslator(const TranslationProvider& inner)
      : inner_(inner), gate_(EffectiveLimit(inner)) {}
  absl::StatusOr<std::string> Translate(absl::string_view text,
                                        absl::string_view source,
                                        absl::string_view target)
      const override {
    return gate_.Run([&] { return inner_.Translate(text, source, target); });
  }

 private:
  const TranslationProvider& inner_;
  CallGate gate_;
};

class ThrottledFiller : public MaskFillProvider {
 public:
  explicit ThrottledFiller(const MaskFillProvider& inner)
      : inner_(inner), gate_(EffectiveLimit(inner)) {}
  absl::StatusOr<std::vector<std::vector<std::string>>> Fill(
      absl::string_view masked_text, int top_k) const override {
    return gate_.Run([&] { return inner_.Fill(masked_text, top_k); });
  }

 private:
  const MaskFillProvider& inner_;
  CallGate gate_;
};

class ThrottledEmbeddings : public WordEmbeddingProvider {
 public:
  explicit ThrottledEmbeddings(const WordEmbeddingProvider& inner)
      : inner_(inner), gate_(EffectiveLimit(inner)) {}
  absl::StatusOr<std::vector<Neighbor>> Nearest(absl::string_view word,
                                                int top_k) const override {
    return gate_.Run([&] { return inner_.Nearest(word, top_k); });
  }

 private:
  const WordEmbeddingProvider& inner_;
  CallGate gate_;
};

class ThrottledSimilarity : public SimilarityProvider {
 public:
  explicit ThrottledSimilarity(const SimilarityProvider& inner)
      : inner_(inner), gate_(EffectiveLimit(inner)) {}
  absl::StatusOr<double> Similarity(absl::string_view a,
                                    absl::string_view b) const override {
    return gate_.Run([&] { return inner_.Similarity(a, b); });
  }

 private:
  const SimilarityProvider& inner_;
  CallGate gate_;
};

class ThrottledLoss : public SolverLossProvider {
 public:
  explicit ThrottledLoss(const SolverLossProvider& inner)
      : inner_(inner), gate_(EffectiveLimit(inner)) {}
  absl::StatusOr<double> Loss(absl::string_view problem_text,
                              const Equation& equation) const override {
    return gate_.Run([&] { return inner_.Loss(problem_text, equation); });
  }

 private:
  const SolverLossProvider& inner_;
  CallGate gate_;
};

class ThrottledAnnotator : public AnnotatorBackend {
 public:
  explicit ThrottledAnnotator(const AnnotatorBackend& inner)
      : inner_(inner), gate_(inner.thread_safe() ? 0 : 1) {}
  AnnotatorCapabilities capabilities() const override {
    return inner_.capabilities();
  }
  absl::Status Annotate(absl::string_view text,
                        AnnotatedText* out) const override {
    return gate_.Run([&] { return inner_.Annotate(text, out); });
  }

 private:
  const AnnotatorBackend& inner_;
  CallGate gate_;
};

}  // namespace mwpa

#endif  // MWPA_PIPELINE_THROTTLE_H_
