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

#ifndef MWPA_COMMON_FILE_H_
#define MWPA_COMMON_FILE_H_

#include <filesystem>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"

namespace mwpa {

absl::StatusOr<std::string> ReadFile(const std::filesystem::path& path);

// Writes to a sibling temp file and renames it into place.
absl::Status WriteFile(const std::filesystem::path& path,
                       absl::string_view contents);

// Non-empty lines with trailing '\r' stripped and '#' comment lines dropped.
absl::StatusOr<std::vector<std::string>> ReadDataLines(
    const std::filesystem::path& path);

// Bundled lexicon directory: $MWPA_DATA_DIR if set, else the build default.
std::filesystem::path DefaultDataDir();

}  // namespace mwpa

#endif  // MWPA_COMMON_FILE_H_
