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

#ifndef MWPA_EQUATION_ALIGNMENT_H_
#define MWPA_EQUATION_ALIGNMENT_H_

#include <optional>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "absl/types/span.h"
#include "mwpa/equation/expr.h"

namespace mwpa {

// Constants an equation may use without the text mentioning them
// (percentages and "one more/less" style reasoning).
bool IsWhitelistedConstant(const Rational& value);

struct LiteralBinding {
  std::string literal_text;
  Rational value;
  // Index into the quantity list, or nullopt for a whitelisted constant.
  std::optional<size_t> quantity_index;
};

struct QuantityAlignment {
  // One entry per explicit literal, in textual order of the equation.
  std::vector<LiteralBinding> bindings;
};

// Literals are matched left to right. Each takes the first not-yet-used
// quantity with the same value; if every such quantity is used it reuses the
// first one. Otherwise the literal must be a whitelisted constant.
// Error kind: "alignment_failed".
absl::StatusOr<QuantityAlignment> AlignQuantities(
    const Equation& equation, absl::Span<const Rational> quantity_values);

}  // namespace mwpa

#endif  // MWPA_EQUATION_ALIGNMENT_H_
