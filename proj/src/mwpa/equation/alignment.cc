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

#include "mwpa/equation/alignment.h"

#include "absl/strings/str_cat.h"
#include "mwpa/common/status.h"

namespace mwpa {

bool IsWhitelistedConstant(const Rational& value) {
  return value == 1 || value == 100;
}

absl::StatusOr<QuantityAlignment> AlignQuantities(
    const Equation& equation, absl::Span<const Rational> quantity_values) {
  QuantityAlignment alignment;
  std::vector<bool> used(quantity_values.size(), false);
  for (const Expr* literal : equation.Literals()) {
    LiteralBinding binding{literal->text(), literal->value(), std::nullopt};
    std::optional<size_t> first_match;
    for (size_t i = 0; i < quantity_values.size(); ++i) {
      if (quantity_values[i] != literal->value()) continue;
      if (!first_match) first_match = i;
      if (!used[i]) {
        binding.quantity_index = i;
        break;
      }
    }
    if (!binding.quantity_index && first_match) {
      binding.quantity_index = first_match;
    }
    if (binding.quantity_index) {
      used[*binding.quantity_index] = true;
    } else if (!IsWhitelistedConstant(literal->value())) {
      return MakeError(
          absl::StatusCode::kFailedPrecondition, "alignment_failed",
          absl::StrCat("equation literal ", literal->text(),
                       " matches no quantity in the text"));
    }
    alignment.bindings.push_back(std::move(binding));
  }
  return alignment;
}

}  // namespace mwpa
