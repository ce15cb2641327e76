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

#ifndef MWPA_PROVIDERS_REMOTE_H_
#define MWPA_PROVIDERS_REMOTE_H_

// HTTP clients for providers running out of process. Wire format: POST a
// JSON object to <base_url>/<endpoint>; the reply is {"ok":true,"result":...}
// or {"ok":false,"error":"..."}.

#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "json.hpp"
#include "mwpa/providers/providers.h"

namespace mwpa {

namespace provider_errors {
inline constexpr char kNotConfigured[] = "provider_not_configured";
inline constexpr char kTimeout[] = "timeout";
inline constexpr char kUnavailable[] = "provider_unavailable";
inline constexpr char kHttpError[] = "http_error";
inline constexpr char kMalformedResponse[] = "malformed_response";
inline constexpr char kProviderError[] = "provider_error";
}  // namespace provider_errors

struct RemoteOptions {
  std::string base_url;  // e.g. "http://127.0.0.1:8471"
  int timeout_ms = 10000;
  int attempts = 3;
  int initial_backoff_ms = 100;  // doubled after each failed attempt
  int max_in_flight = 4;
};

// Reads MWPA_PROVIDER_<NAME>_URL and MWPA_PROVIDER_TIMEOUT_MS. `name` is
// upper-cased, e.g. "paraphrase".
absl::StatusOr<RemoteOptions> RemoteOptionsFromEnv(absl::string_view name);

class RemoteClient {
 public:
  explicit RemoteClient(RemoteOptions options) : options_(std::move(options)) {}

  // Returns the "result" member. Retries connection failures, timeouts and
  // 5xx replies; 4xx, {"ok":false} and malformed replies fail at once.
  absl::StatusOr<nlohmann::json> Call(absl::string_view endpoint,
                                      const nlohmann::json& payload) const;

  const RemoteOptions& options() const { return options_; }

 private:
  RemoteOptions options_;
};

class RemoteParaphraser : public ParaphraseProvider {
 public:
  explicit RemoteParaphraser(RemoteOptions options)
      : client_(std::move(options)) {}
  int max_in_flight() const override { return client_.options().max_in_flight; }
  absl::StatusOr<std::vector<std::string>> Generate(absl::string_view text,
                                                    int n) const override;

 private:
  RemoteClient client_;
};

class RemoteTranslator : public TranslationProvider {
 public:
  explicit RemoteTranslator(RemoteOptions options)
      : client_(std::move(options)) {}
  int max_in_flight() const override { return client_.options().max_in_flight; }
  absl::StatusOr<std::string> Translate(absl::string_view text,
                                        absl::string_view source,
                                        absl::string_view target)
      const override;

 private:
  RemoteClient client_;
};

class RemoteMaskFiller : public MaskFillProvider {
 public:
  explicit RemoteMaskFiller(RemoteOptions options)
      : client_(std::move(options)) {}
  int max_in_flight() const override { return client_.options().max_in_flight; }
  absl::StatusOr<std::vector<std::vector<std::string>>> Fill(
      absl::string_view masked_text, int top_k) const override;

 private:
  RemoteClient client_;
};

class RemoteEmbeddings : public WordEmbeddingProvider {
 public:
  explicit RemoteEmbeddings(RemoteOptions options)
      : client_(std::move(options)) {}
  int max_in_flight() const override { return client_.options().max_in_flight; }
  absl::StatusOr<std::vector<Neighbor>> Nearest(absl::string_view word,
                                                int top_k) const override;

 private:
  RemoteClient client_;
};

class RemoteSimilarity : public SimilarityProvider {
 public:
  explicit RemoteSimilarity(RemoteOptions options)
      : client_(std::move(options)) {}
  int max_in_flight() const override { return client_.options().max_in_flight; }
  absl::StatusOr<double> Similarity(absl::string_view a,
                                    absl::string_view b) const override;

 private:
  RemoteClient client_;
};

class RemoteLoss : public SolverLossProvider {
 public:
  explicit RemoteLoss(RemoteOptions options) : client_(std::move(options)) {}
  int max_in_flight() const override { return client_.options().max_in_flight; }
  absl::StatusOr<double> Loss(absl::string_view problem_text,
                              const Equation& equation) const override;

 private:
  RemoteClient client_;
};

}  // namespace mwpa

#endif  // MWPA_PROVIDERS_REMOTE_H_
