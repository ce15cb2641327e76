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

#include "mwpa/providers/remote.h"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <thread>

#include "absl/strings/ascii.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "httplib.h"
#include "mwpa/common/status.h"

namespace mwpa {
namespace {

using Json = nlohmann::json;
using namespace provider_errors;  // NOLINT: local error-kind constants

absl::Status Malformed(absl::string_view endpoint, absl::string_view field,
                       absl::string_view what) {
  return MakeError(absl::StatusCode::kDataLoss, kMalformedResponse,
                   absl::StrCat(endpoint, ": field '", field, "' ", what));
}

void SetTimeouts(httplib::Client& client, int timeout_ms) {
  const time_t sec = timeout_ms / 1000;
  const time_t usec = (timeout_ms % 1000) * 1000;
  client.set_connection_timeout(sec, usec);
  client.set_read_timeout(sec, usec);
  client.set_write_timeout(sec, usec);
}

}  // namespace

absl::StatusOr<RemoteOptions> RemoteOptionsFromEnv(absl::string_view name) {
  const std::string var =
      absl::StrCat("MWPA_PROVIDER_", absl::AsciiStrToUpper(name), "_URL");
  const char* url = std::getenv(var.c_str());
  if (url == nullptr || *url == '\0') {
    return MakeError(absl::StatusCode::kFailedPrecondition, kNotConfigured,
                     absl::StrCat(var, " is not set"));
  }
  RemoteOptions options;
  options.base_url = url;
  if (const char* t = std::getenv("MWPA_PROVIDER_TIMEOUT_MS"); t && *t) {
    int ms;
    if (!absl::SimpleAtoi(t, &ms) || ms <= 0) {
      return MakeError(absl::StatusCode::kInvalidArgument, "bad_config",
                       absl::StrCat("MWPA_PROVIDER_TIMEOUT_MS='", t, "'"));
    }
    options.timeout_ms = ms;
  }
  return options;
}

absl::StatusOr<Json> RemoteClient::Call(absl::string_view endpoint,
                                        const Json& payload) const {
  const std::string path = absl::StrCat("/", endpoint);
  const std::string body = payload.dump();
  bool last_was_timeout = false;
  std::string last_failure = "no attempt made";
  int backoff_ms = options_.initial_backoff_ms;

  for (int attempt = 0; attempt < options_.attempts; ++attempt) {
    if (attempt > 0) {
      std::this_thread::sleep_for(std::chrono::milliseconds(backoff_ms));
      backoff_ms *= 2;
    }
    httplib::Client client(options_.base_url);
    SetTimeouts(client, options_.timeout_ms);
    const auto start = std::chrono::steady_clock::now();
    httplib::Result res = client.Post(path, body, "application/json");
    const auto elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start)
            .count();

    if (!res) {
      // httplib reports an expired read as a plain read error; the clock
      // tells the two apart.
      last_was_timeout = res.error() == httplib::Error::ConnectionTimeout ||
                         elapsed_ms >= options_.timeout_ms * 9 / 10;
      last_failure = httplib::to_string(res.error());
      continue;
    }
    if (res->status >= 500) {
      last_was_timeout = false;
      last_failure = absl::StrCat("HTTP ", res->status);
      continue;
    }
    if (res->status >= 400) {
      return MakeError(absl::StatusCode::kInvalidArgument, kHttpError,
                       absl::StrCat(endpoint, ": HTTP ", res->status, " ",
                                    res->body.substr(0, 200)));
    }
    Json reply = Json::parse(res->body, nullptr, /*allow_exceptions=*/false);
    if (reply.is_discarded() || !reply.is_object()) {
      return Malformed(endpoint, "<body>", "is not a JSON object");
    }
    if (!reply.contains("ok") || !reply["ok"].is_boolean()) {
      return Malformed(endpoint, "ok", "is missing or not a boolean");
    }
    if (!reply["ok"].get<bool>()) {
      std::string error = reply.contains("error") && reply["error"].is_string()
                              ? reply["error"].get<std::string>()
                              : reply.value("error", Json()).dump();
      return MakeError(absl::StatusCode::kUnavailable, kProviderError,
                       absl::StrCat(endpoint, ": ", error));
    }
    if (!reply.contains("result")) {
      return Malformed(endpoint, "result", "is missing");
    }
    return reply["result"];
  }
  if (last_was_timeout) {
    return MakeError(absl::StatusCode::kDeadlineExceeded, kTimeout,
                     absl::StrCat(endpoint, ": no reply within ",
                                  options_.timeout_ms, " ms after ",
                                  options_.attempts, " attempts"));
  }
  return MakeError(absl::StatusCode::kUnavailable, kUnavailable,
                   absl::StrCat(endpoint, ": ", options_.attempts,
                                " attempts failed, last: ", last_failure));
}

absl::StatusOr<std::vector<std::string>> RemoteParaphraser::Generate(
    absl::string_view text, int n) const {
  absl::StatusOr<Json> r =
      client_.Call("paraphrase", {{"text", std::string(text)}, {"n", n}});
  if (!r.ok()) return r.status();
  if (!r->is_array()) return Malformed("paraphrase", "result", "not a list");
  std::vector<std::string> out;
  for (const Json& item : *r) {
    if (!item.is_string()) {
      return Malformed("paraphrase", "result[]", "holds a non-string");
    }
    if (!item.get<std::string>().empty() && static_cast<int>(out.size()) < n) {
      out.push_back(item.get<std::string>());
    }
  }
  return out;
}

absl::StatusOr<std::string> RemoteTranslator::Translate(
    absl::string_view text, absl::string_view source,
    absl::string_view target) const {
  absl::StatusOr<Json> r = client_.Call(
      "translate", {{"text", std::string(text)},
                    {"src", std::string(source)},
                    {"tgt", std::string(target)}});
  if (!r.ok()) return r.status();
  if (!r->is_string()) return Malformed("translate", "result", "not a string");
  return r->get<std::string>();
}

absl::StatusOr<std::vector<std::vector<std::string>>> RemoteMaskFiller::Fill(
    absl::string_view masked_text, int top_k) const {
  absl::StatusOr<Json> r = client_.Call(
      "fill", {{"text", std::string(masked_text)}, {"top_k", top_k}});
  if (!r.ok()) return r.status();
  if (!r->is_array()) return Malformed("fill", "result", "not a list");
  std::vector<std::vector<std::string>> out;
  for (const Json& slot : *r) {
    if (!slot.is_array()) return Malformed("fill", "result[]", "not a list");
    std::vector<std::string> fills;
    for (const Json& f : slot) {
      if (!f.is_string()) {
        return Malformed("fill", "result[][]", "holds a non-string");
      }
      if (static_cast<int>(fills.size()) < top_k) {
        fills.push_back(f.get<std::string>());
      }
    }
    out.push_back(std::move(fills));
  }
  return out;
}

absl::StatusOr<std::vector<Neighbor>> RemoteEmbeddings::Nearest(
    absl::string_view word, int top_k) const {
  absl::StatusOr<Json> r = client_.Call(
      "nearest", {{"word", std::string(word)}, {"top_k", top_k}});
  if (!r.ok()) return r.status();
  if (!r->is_array()) return Malformed("nearest", "result", "not a list");
  std::vector<Neighbor> out;
  for (const Json& item : *r) {
    if (!item.is_object() || !item.contains("word") ||
        !item["word"].is_string()) {
      return Malformed("nearest", "result[].word", "is missing");
    }
    if (!item.contains("cosine") || !item["cosine"].is_number()) {
      return Malformed("nearest", "result[].cosine", "is missing");
    }
    out.push_back({item["word"].get<std::string>(),
                   item["cosine"].get<double>()});
  }
  return out;
}

absl::StatusOr<double> RemoteSimilarity::Similarity(absl::string_view a,
                                                    absl::string_view b) const {
  absl::StatusOr<Json> r = client_.Call(
      "similarity", {{"a", std::string(a)}, {"b", std::string(b)}});
  if (!r.ok()) return r.status();
  if (!r->is_number()) return Malformed("similarity", "result", "not a number");
  return r->get<double>();
}

absl::StatusOr<double> RemoteLoss::Loss(absl::string_view problem_text,
                                        const Equation& equation) const {
  absl::StatusOr<Json> r = client_.Call(
      "loss", {{"text", std::string(problem_text)},
               {"equation", equation.ToString()}});
  if (!r.ok()) return r.status();
  if (!r->is_number()) return Malformed("loss", "result", "not a number");
  double loss = r->get<double>();
  if (!std::isfinite(loss) || loss < 0) {
    return Malformed("loss", "result", "is negative or not finite");
  }
  return loss;
}

}  // namespace mwpa
