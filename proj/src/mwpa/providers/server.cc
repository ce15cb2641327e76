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

#include "mwpa/providers/server.h"

#include <functional>
#include <utility>

#include "absl/strings/str_cat.h"
#include "httplib.h"
#include "json.hpp"
#include "mwpa/common/status.h"
#include "mwpa/equation/parser.h"

namespace mwpa {
namespace {

using Json = nlohmann::json;

// Thrown by the field readers; turned into a 400 by Handle().
struct BadRequest {
  std::string message;
};

std::string StringField(const Json& body, const char* name) {
  if (!body.contains(name) || !body[name].is_string()) {
    throw BadRequest{absl::StrCat("field '", name, "' must be a string")};
  }
  return body[name].get<std::string>();
}

int IntField(const Json& body, const char* name) {
  if (!body.contains(name) || !body[name].is_number_integer()) {
    throw BadRequest{absl::StrCat("field '", name, "' must be an integer")};
  }
  return body[name].get<int>();
}

void Reply(httplib::Response& res, int status, const Json& payload) {
  res.status = status;
  res.set_content(payload.dump(), "application/json");
}

// Wraps a provider call: decodes the body, runs `fn`, encodes the envelope.
void Handle(const httplib::Request& req, httplib::Response& res,
            const std::function<absl::StatusOr<Json>(const Json&)>& fn) {
  Json body = Json::parse(req.body, nullptr, /*allow_exceptions=*/false);
  if (body.is_discarded() || !body.is_object()) {
    Reply(res, 400, {{"ok", false}, {"error", "body is not a JSON object"}});
    return;
  }
  absl::StatusOr<Json> result;
  try {
    result = fn(body);
  } catch (const BadRequest& e) {
    Reply(res, 400, {{"ok", false}, {"error", e.message}});
    return;
  }
  if (!result.ok()) {
    Reply(res, 200,
          {{"ok", false},
           {"error", std::string(result.status().message())},
           {"kind", ErrorKind(result.status())}});
    return;
  }
  Reply(res, 200, {{"ok", true}, {"result", *std::move(result)}});
}

}  // namespace

ProviderServer::ProviderServer(ServedProviders providers)
    : providers_(providers), server_(std::make_unique<httplib::Server>()) {
  Route();
}

ProviderServer::~ProviderServer() { Stop(); }

void ProviderServer::Route() {
  httplib::Server& s = *server_;
  const ServedProviders p = providers_;
  if (p.paraphrase) {
    s.Post("/paraphrase", [p](const auto& req, auto& res) {
      Handle(req, res, [&](const Json& b) -> absl::StatusOr<Json> {
        auto r = p.paraphrase->Generate(StringField(b, "text"),
                                        IntField(b, "n"));
        if (!r.ok()) return r.status();
        return Json(*r);
      });
    });
  }
  if (p.translate) {
    s.Post("/translate", [p](const auto& req, auto& res) {
      Handle(req, res, [&](const Json& b) -> absl::StatusOr<Json> {
        auto r = p.translate->Translate(StringField(b, "text"),
                                        StringField(b, "src"),
                                        StringField(b, "tgt"));
        if (!r.ok()) return r.status();
        return Json(*r);
      });
    });
  }
  if (p.fill) {
    s.Post("/fill", [p](const auto& req, auto& res) {
      Handle(req, res, [&](const Json& b) -> absl::StatusOr<Json> {
        auto r = p.fill->Fill(StringField(b, "text"), IntField(b, "top_k"));
        if (!r.ok()) return r.status();
        return Json(*r);
      });
    });
  }
  if (p.nearest) {
    s.Post("/nearest", [p](const auto& req, auto& res) {
      Handle(req, res, [&](const Json& b) -> absl::StatusOr<Json> {
        auto r = p.nearest->Nearest(StringField(b, "word"),
                                    IntField(b, "top_k"));
        if (!r.ok()) return r.status();
        Json out = Json::array();
        for (const Neighbor& n : *r) {
          out.push_back({{"word", n.word}, {"cosine", n.cosine}});
        }
        return out;
      });
    });
  }
  if (p.similarity) {
    s.Post("/similarity", [p](const auto& req, auto& res) {
      Handle(req, res, [&](const Json& b) -> absl::StatusOr<Json> {
        auto r = p.similarity->Similarity(StringField(b, "a"),
                                          StringField(b, "b"));
        if (!r.ok()) return r.status();
        return Json(*r);
      });
    });
  }
  if (p.loss) {
    s.Post("/loss", [p](const auto& req, auto& res) {
      Handle(req, res, [&](const Json& b) -> absl::StatusOr<Json> {
        absl::StatusOr<Equation> eq = ParseEquation(StringField(b, "equation"));
        if (!eq.ok()) throw BadRequest{std::string(eq.status().message())};
        auto r = p.loss->Loss(StringField(b, "text"), *eq);
        if (!r.ok()) return r.status();
        return Json(*r);
      });
    });
  }
}

absl::Status ProviderServer::Start(const std::string& host, int port) {
  host_ = host;
  port_ = port == 0 ? server_->bind_to_any_port(host)
                    : (server_->bind_to_port(host, port) ? port : -1);
  if (port_ < 0) {
    return MakeError(absl::StatusCode::kUnavailable, "port_busy",
                     absl::StrCat("cannot bind ", host, ":", port));
  }
  thread_ = std::thread([this] { server_->listen_after_bind(); });
  server_->wait_until_ready();
  return absl::OkStatus();
}

absl::Status ProviderServer::Run(const std::string& host, int port) {
  host_ = host;
  port_ = port;
  if (!server_->bind_to_port(host, port)) {
    return MakeError(absl::StatusCode::kUnavailable, "port_busy",
                     absl::StrCat("cannot bind ", host, ":", port));
  }
  server_->listen_after_bind();
  return absl::OkStatus();
}

void ProviderServer::Stop() {
  if (server_) server_->stop();
  if (thread_.joinable()) thread_.join();
}

std::string ProviderServer::base_url() const {
  return absl::StrCat("http://", host_, ":", port_);
}

}  // namespace mwpa
