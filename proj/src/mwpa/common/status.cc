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

#include "mwpa/common/status.h"

#include "absl/strings/cord.h"

namespace mwpa {

absl::Status MakeError(absl::StatusCode code, absl::string_view kind,
                       absl::string_view message) {
  return WithKind(absl::Status(code, message), kind);
}

absl::Status WithKind(absl::Status status, absl::string_view kind) {
  if (status.ok()) return status;
  status.SetPayload(kErrorKindPayloadUrl, absl::Cord(kind));
  return status;
}

std::string ErrorKind(const absl::Status& status) {
  auto payload = status.GetPayload(kErrorKindPayloadUrl);
  if (!payload.has_value()) return "";
  return std::string(*payload);
}

}  // namespace mwpa
