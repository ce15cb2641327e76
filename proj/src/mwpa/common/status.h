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

#ifndef MWPA_COMMON_STATUS_H_
#define MWPA_COMMON_STATUS_H_

#include <string>

#include "absl/status/status.h"
#include "absl/strings/string_view.h"

namespace mwpa {

// Every error we hand out carries a short snake_case "kind" next to the
// canonical code. Callers (and tests) branch on the kind; the message is for
// humans.
inline constexpr char kErrorKindPayloadUrl[] = "type.mwpa.dev/error_kind";

absl::Status MakeError(absl::StatusCode code, absl::string_view kind,
                       absl::string_view message);

// Re-tags an existing status, keeping its code and message.
absl::Status WithKind(absl::Status status, absl::string_view kind);

// Empty string for OK statuses or statuses produced outside this library.
std::string ErrorKind(const absl::Status& status);

}  // namespace mwpa

#endif  // MWPA_COMMON_STATUS_H_
