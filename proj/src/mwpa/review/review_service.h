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

#ifndef MWPA_REVIEW_REVIEW_SERVICE_H_
#define MWPA_REVIEW_REVIEW_SERVICE_H_

// HTTP backend for blind rating sessions.
//
//   POST /api/session  {"evaluator_id"}            -> {"session_id", ...}
//   GET  /api/samples?session=..&count=n           -> next unrated samples
//   POST /api/ratings  a rating record minus its timestamp; "session" optional
//   GET  /api/summary                              -> per-family summary
//
// Ratings are appended to a JSONL file and flushed one by one, so a
// restarted service picks up where every evaluator left off. Samples carry
// only their blind id (the "candidate_id" a rating refers to) and the two
// texts.

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>

#include "absl/status/status.h"
#include "mwpa/pipeline/evaluation.h"

namespace httplib {
class Server;
}  // namespace httplib

namespace mwpa {

inline constexpr int kDefaultReviewPort = 8470;

struct ReviewOptions {
  std::filesystem::path ratings_path;
  // blind id -> key entry; empty means families show up as "unknown".
  std::map<std::string, EvalItem> key;
  // Served at "/" if set, else a placeholder page.
  std::optional<std::filesystem::path> assets_dir;
};

class ReviewService {
 public:
  // Loads existing ratings. Error if the ratings file is unreadable.
  static absl::StatusOr<std::unique_ptr<ReviewService>> Create(
      EvalBatch batch, ReviewOptions options);
  ~ReviewService();

  ReviewService(const ReviewService&) = delete;
  ReviewService& operator=(const ReviewService&) = delete;

  absl::Status Start(const std::string& host, int port);  // background
  absl::Status Run(const std::string& host, int port);    // blocking
  void Stop();
  int port() const { return port_; }

  // Same for one evaluator and batch across restarts.
  std::string SessionId(const std::string& evaluator_id) const;
  // The /api/summary body.
  std::string SummaryJson() const;

 private:
  ReviewService(EvalBatch batch, ReviewOptions options);
  void Route();
  absl::Status Bind(const std::string& host, int port);
  absl::Status Record(Rating rating);

  EvalBatch batch_;
  ReviewOptions options_;
  std::set<std::string> candidate_ids_;
  uint64_t batch_hash_ = 0;

  mutable std::mutex mu_;
  std::vector<Rating> ratings_;
  std::map<std::string, std::set<std::string>> rated_;  // evaluator -> ids
  std::map<std::string, std::string> sessions_;         // id -> evaluator

  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
  int port_ = 0;
};

}  // namespace mwpa

#endif  // MWPA_REVIEW_REVIEW_SERVICE_H_
