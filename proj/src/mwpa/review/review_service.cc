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

#include "mwpa/review/review_service.h"

#include <chrono>
#include <ctime>
#include <fstream>

#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "httplib.h"
#include "json.hpp"
#include "mwpa/common/random.h"
#include "mwpa/common/status.h"

namespace mwpa {
namespace {

using Json = nlohmann::json;
using OJson = nlohmann::ordered_json;

constexpr int kMaxSamplesPerRequest = 50;

constexpr char kPlaceholderPage[] =
    "<!doctype html>\n<html><head><meta charset=\"utf-8\">"
    "<title>MWP review</title></head><body>\n"
    "<p>The rating UI is not bundled. Start the service with --assets to "
    "serve it, or use the JSON API under /api/.</p>\n</body></html>\n";

std::string UtcNow() {
  const std::time_t t =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm;
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void Reply(httplib::Response& res, int status, const OJson& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

void Fail(httplib::Response& res, int status, absl::string_view error) {
  Reply(res, status, OJson{{"ok", false}, {"error", std::string(error)}});
}

}  // namespace

ReviewService::ReviewService(EvalBatch batch, ReviewOptions options)
    : batch_(std::move(batch)),
      options_(std::move(options)),
      server_(std::make_unique<httplib::Server>()) {
  for (const EvalItem& item : batch_.items) candidate_ids_.insert(item.blind_id);
  batch_hash_ = StableHash(batch_.BatchJsonl());
}

ReviewService::~ReviewService() { Stop(); }

absl::StatusOr<std::unique_ptr<ReviewService>> ReviewService::Create(
    EvalBatch batch, ReviewOptions options) {
  absl::StatusOr<std::vector<Rating>> existing =
      LoadRatings(options.ratings_path);
  if (!existing.ok()) return existing.status();
  std::unique_ptr<ReviewService> service(
      new ReviewService(std::move(batch), std::move(options)));
  for (Rating& r : *existing) {
    service->rated_[r.evaluator_id].insert(r.candidate_id);
    service->ratings_.push_back(std::move(r));
  }
  service->Route();
  return service;
}

std::string ReviewService::SessionId(const std::string& evaluator_id) const {
  return absl::StrFormat(
      "sess-%016x",
      StableHash(absl::StrCat(evaluator_id, "\x1f", batch_hash_)));
}

std::string ReviewService::SummaryJson() const {
  std::lock_guard<std::mutex> lock(mu_);
  return FormatSummaryJson(SummarizeRatings(ratings_, options_.key));
}

absl::Status ReviewService::Record(Rating rating) {
  std::lock_guard<std::mutex> lock(mu_);
  std::ofstream out(options_.ratings_path, std::ios::app);
  out << RatingToJson(rating) << "\n";
  out.flush();
  if (!out) {
    return MakeError(absl::StatusCode::kInternal, "write_failed",
                     absl::StrCat("cannot append to ",
                                  options_.ratings_path.string()));
  }
  rated_[rating.evaluator_id].insert(rating.candidate_id);
  ratings_.push_back(std::move(rating));
  return absl::OkStatus();
}

void ReviewService::Route() {
  httplib::Server& s = *server_;

  s.Post("/api/session", [this](const httplib::Request& req,
                                httplib::Response& res) {
    Json body = Json::parse(req.body, nullptr, false);
    if (body.is_discarded() || !body.is_object() ||
        !body.contains("evaluator_id") || !body["evaluator_id"].is_string() ||
        body["evaluator_id"].get<std::string>().empty()) {
      return Fail(res, 400, "evaluator_id must be a non-empty string");
    }
    const std::string evaluator = body["evaluator_id"].get<std::string>();
    const std::string id = SessionId(evaluator);
    std::lock_guard<std::mutex> lock(mu_);
    sessions_[id] = evaluator;
    const size_t done = rated_[evaluator].size();
    Reply(res, 200,
          OJson{{"ok", true},
                {"session_id", id},
                {"evaluator_id", evaluator},
                {"total", batch_.items.size()},
                {"rated", done}});
  });

  s.Get("/api/samples", [this](const httplib::Request& req,
                               httplib::Response& res) {
    const std::string session = req.get_param_value("session");
    int count = 1;
    if (req.has_param("count") &&
        (!absl::SimpleAtoi(req.get_param_value("count"), &count) ||
         count < 1)) {
      return Fail(res, 400, "count must be a positive integer");
    }
    count = std::min(count, kMaxSamplesPerRequest);
    std::lock_guard<std::mutex> lock(mu_);
    auto it = sessions_.find(session);
    if (it == sessions_.end()) return Fail(res, 404, "unknown session");
    const std::set<std::string>& done = rated_[it->second];
    OJson samples = OJson::array();
    size_t remaining = 0;
    for (const EvalItem& item : batch_.items) {
      if (done.count(item.blind_id)) continue;
      ++remaining;
      if (static_cast<int>(samples.size()) < count) {
        samples.push_back({{"candidate_id", item.blind_id},
                           {"original", item.original},
                           {"augmented", item.augmented}});
      }
    }
    Reply(res, 200,
          OJson{{"ok", true}, {"samples", samples}, {"remaining", remaining}});
  });

  s.Post("/api/ratings", [this](const httplib::Request& req,
                                httplib::Response& res) {
    Json body = Json::parse(req.body, nullptr, false);
    if (body.is_discarded() || !body.is_object()) {
      return Fail(res, 400, "body must be a JSON object");
    }
    // A session, if given, must belong to the evaluator named in the body.
    if (body.contains("session")) {
      if (!body["session"].is_string()) {
        return Fail(res, 400, "session must be a string");
      }
      std::lock_guard<std::mutex> lock(mu_);
      auto it = sessions_.find(body["session"].get<std::string>());
      if (it == sessions_.end()) return Fail(res, 404, "unknown session");
      if (!body.contains("evaluator_id")) body["evaluator_id"] = it->second;
      if (body["evaluator_id"] != it->second) {
        return Fail(res, 400, "evaluator_id does not own this session");
      }
      body.erase("session");
    }
    absl::StatusOr<Rating> rating = ParseRating(body.dump());
    if (!rating.ok()) return Fail(res, 400, rating.status().message());
    if (!candidate_ids_.count(rating->candidate_id)) {
      return Fail(res, 400, "candidate_id is not in this batch");
    }
    rating->timestamp = UtcNow();
    if (absl::Status st = Record(*std::move(rating)); !st.ok()) {
      return Fail(res, 500, st.message());
    }
    Reply(res, 201, OJson{{"ok", true}});
  });

  s.Get("/api/summary", [this](const httplib::Request&,
                               httplib::Response& res) {
    res.set_content(SummaryJson(), "application/json");
  });

  if (options_.assets_dir) {
    s.set_mount_point("/", options_.assets_dir->string());
  } else {
    s.Get("/", [](const httplib::Request&, httplib::Response& res) {
      res.set_content(kPlaceholderPage, "text/html");
    });
  }
}

absl::Status ReviewService::Bind(const std::string& host, int port) {
  port_ = port == 0 ? server_->bind_to_any_port(host)
                    : (server_->bind_to_port(host, port) ? port : -1);
  if (port_ < 0) {
    return MakeError(absl::StatusCode::kUnavailable, "port_busy",
                     absl::StrCat("cannot bind ", host, ":", port));
  }
  return absl::OkStatus();
}

absl::Status ReviewService::Start(const std::string& host, int port) {
  if (absl::Status s = Bind(host, port); !s.ok()) return s;
  thread_ = std::thread([this] { server_->listen_after_bind(); });
  server_->wait_until_ready();
  return absl::OkStatus();
}

absl::Status ReviewService::Run(const std::string& host, int port) {
  if (absl::Status s = Bind(host, port); !s.ok()) return s;
  server_->listen_after_bind();
  return absl::OkStatus();
}

void ReviewService::Stop() {
  if (server_) server_->stop();
  if (thread_.joinable()) thread_.join();
}

}  // namespace mwpa
