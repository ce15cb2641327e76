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

#ifndef MWPA_EQUATION_SOLVER_H_
#define MWPA_EQUATION_SOLVER_H_

#include <string>

#include "absl/status/statusor.h"
#include "mwpa/equation/expr.h"

namespace mwpa {

// a*X + b.
struct LinearForm {
  Rational coefficient;
  Rational constant;
};

// Fails with kind "nonlinear", "division_by_unknown" or "zero_divisor".
absl::StatusOr<LinearForm> Linearize(const Expr& expr);

// Constant expressions only; X is an error ("unexpected_unknown").
absl::StatusOr<Rational> EvaluateConstant(const Expr& expr);

// Kinds: "degenerate" (every X solves it), "inconsistent" (none does), plus
// the Linearize kinds.
absl::StatusOr<Rational> Solve(const Equation& equation);

struct Equivalence {
  bool equivalent = false;
  // Empty when equivalent; otherwise a short explanation.
  std::string reason;
};

// Two single-unknown equations are equivalent when both have exactly one
// solution and the solutions agree.
Equivalence EquationsEquivalent(const Equation& a, const Equation& b);

}  // namespace mwpa

#endif  // MWPA_EQUATION_SOLVER_H_
