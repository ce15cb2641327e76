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

#ifndef MWPA_PROVIDERS_SERVER_H_
#define MWPA_PROVIDERS_SERVER_H_

// Serves in-process providers over the remote wire protocol. Lets the
// reference clients be exercised end to end, and lets several tool
// invocations share one provider process.

#include <memory>
#include <string>
#include <thread>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "mwpa/providers/providers.h"

namespace httplib {
class Server;
}  // namespace httplib

namespace mwpa {

// Null members leave their endpoint unrouted (404).
struct ServedProviders {
  const ParaphraseProvider* paraphrase = nullptr;
  const TranslationProvider* translate = nullptr;
  const MaskFillProvider* fill = nullptr;
  const WordEmbeddingProvider* nearest = nullptr;
  const SimilarityProvider* similarity = nullptr;
  const SolverLossProvider* loss = nullptr;
};

class ProviderServer {
 public:
  explicit ProviderServer(ServedProviders providers);
  ~ProviderServer();  // stops and joins

  ProviderServer(const ProviderServer&) = delete;
  ProviderServer& operator=(const ProviderServer&) = delete;

  // Binds host:port (port 0 picks a free one) and serves on a background
  // thread. Error kind "port_busy" if the bind fails.
  absl::Status Start(const std::string& host, int port);
  // Blocks serving on the calling thread until Stop() from elsewhere.
  absl::Status Run(const std::string& host, int port);
  void Stop();

  int port() const { return port_; }
  std::string base_url() const;

 private:
  void Route();

  ServedProviders providers_;
  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
  std::string host_;
  int port_ = 0;
};

}  // namespace mwpa

#endif  // MWPA_PROVIDERS_SERVER_H_
