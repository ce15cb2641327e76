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

#include "mwpa/pipeline/config.h"

#include <algorithm>
#include <functional>

#include "absl/strings/ascii.h"
#include "absl/strings/match.h"
#include "absl/strings/numbers.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_split.h"
#include "absl/strings/strip.h"
#include "mwpa/common/file.h"
#include "mwpa/common/status.h"

namespace mwpa {
namespace {

absl::Status Bad(int line, absl::string_view message) {
  return MakeError(absl::StatusCode::kInvalidArgument, "bad_config",
                   absl::StrCat("config line ", line, ": ", message));
}

std::vector<std::string> List(absl::string_view value) {
  std::vector<std::string> out;
  for (absl::string_view item : absl::StrSplit(value, ',')) {
    item = absl::StripAsciiWhitespace(item);
    if (!item.empty()) out.emplace_back(item);
  }
  return out;
}

bool IsProviderName(absl::string_view name) {
  return std::find(std::begin(kProviderNames), std::end(kProviderNames),
                   name) != std::end(kProviderNames);
}

bool ValidProviderChoice(absl::string_view v) {
  return v == "stub" || v == "remote" || absl::StartsWith(v, "http://") ||
         absl::StartsWith(v, "https://");
}

}  // namespace

absl::string_view CombineModeName(CombineMode mode) {
  return mode == CombineMode::kUnion ? "union" : "per_family";
}

absl::Status PipelineConfig::Validate() const {
  if (base_candidates < 1) {
    return MakeError(absl::StatusCode::kInvalidArgument, "bad_config",
                     "base_candidates must be at least 1");
  }
  if (workers < 1) {
    return MakeError(absl::StatusCode::kInvalidArgument, "bad_config",
                     "workers must be at least 1");
  }
  if (methods.count(Method::kRoundTrip) && routes.empty()) {
    return MakeError(absl::StatusCode::kInvalidArgument, "bad_config",
                     "round_trip is enabled but no routes are listed");
  }
  return substitution.Validate();
}

std::string PipelineConfig::ProviderChoice(const std::string& name) const {
  auto it = providers.find(name);
  return it == providers.end() ? "stub" : it->second;
}

absl::StatusOr<PipelineConfig> ParseConfig(absl::string_view text) {
  PipelineConfig cfg;
  int line_no = 0;
  for (absl::string_view line : absl::StrSplit(text, '\n')) {
    ++line_no;
    if (size_t hash = line.find('#'); hash != absl::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = absl::StripAsciiWhitespace(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == absl::string_view::npos) return Bad(line_no, "expected key = value");
    const std::string key(absl::StripAsciiWhitespace(line.substr(0, eq)));
    const std::string value(absl::StripAsciiWhitespace(line.substr(eq + 1)));

    auto as_int = [&](int& out) -> absl::Status {
      if (!absl::SimpleAtoi(value, &out)) {
        return Bad(line_no, absl::StrCat(key, " wants an integer"));
      }
      return absl::OkStatus();
    };
    absl::Status s;
    if (key == "base_candidates") {
      s = as_int(cfg.base_candidates);
    } else if (key == "methods") {
      cfg.methods.clear();
      if (value != "none") {
        for (const std::string& m : List(value)) {
          absl::StatusOr<Method> method = ParseMethod(m);
          if (!method.ok()) return Bad(line_no, method.status().message());
          cfg.methods.insert(*method);
        }
      }
    } else if (key == "apply_to_original") {
      if (value != "true" && value != "false") {
        return Bad(line_no, "apply_to_original wants true or false");
      }
      cfg.apply_to_original = value == "true";
    } else if (key == "routes") {
      cfg.routes.clear();
      for (const std::string& r : List(value)) {
        absl::StatusOr<TranslationRoute> route = ParseRoute(r);
        if (!route.ok()) return Bad(line_no, route.status().message());
        cfg.routes.push_back(*std::move(route));
      }
    } else if (key == "combine_mode") {
      if (value == "per_family") {
        cfg.combine_mode = CombineMode::kPerFamily;
      } else if (value == "union") {
        cfg.combine_mode = CombineMode::kUnion;
      } else {
        return Bad(line_no, "combine_mode is per_family or union");
      }
    } else if (key == "seed") {
      if (!absl::SimpleAtoi(value, &cfg.seed)) {
        return Bad(line_no, "seed wants an unsigned integer");
      }
      cfg.substitution.seed = cfg.seed;
    } else if (key == "workers") {
      s = as_int(cfg.workers);
    } else if (key == "top_k") {
      s = as_int(cfg.substitution.top_k);
    } else if (key == "max_masks") {
      s = as_int(cfg.substitution.max_masks);
    } else if (key == "mask_window") {
      s = as_int(cfg.substitution.mask_window);
    } else if (key == "max_fill_candidates") {
      s = as_int(cfg.substitution.max_fill_candidates);
    } else if (key == "entity_candidates") {
      s = as_int(cfg.substitution.entity_candidates);
    } else if (key == "replacement_rate") {
      if (!absl::SimpleAtod(value, &cfg.substitution.replacement_rate)) {
        return Bad(line_no, "replacement_rate wants a number");
      }
    } else if (key == "providers") {
      if (value != "stub" && value != "remote") {
        return Bad(line_no, "providers is stub or remote");
      }
      for (const char* name : kProviderNames) cfg.providers[name] = value;
    } else if (absl::StartsWith(key, "provider.")) {
      const std::string name = key.substr(9);
      if (!IsProviderName(name)) {
        return Bad(line_no, absl::StrCat("no provider called '", name, "'"));
      }
      if (!ValidProviderChoice(value)) {
        return Bad(line_no, "provider wants stub, remote or a URL");
      }
      cfg.providers[name] = value;
    } else {
      return Bad(line_no, absl::StrCat("unknown key '", key, "'"));
    }
    if (!s.ok()) return s;
  }
  if (absl::Status s = cfg.Validate(); !s.ok()) return s;
  return cfg;
}

absl::StatusOr<PipelineConfig> LoadConfig(const std::filesystem::path& path) {
  absl::StatusOr<std::string> text = ReadFile(path);
  if (!text.ok()) return text.status();
  return ParseConfig(*text);
}

}  // namespace mwpa
