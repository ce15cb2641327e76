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

#ifndef MWPA_EQUATION_PARSER_H_
#define MWPA_EQUATION_PARSER_H_

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "mwpa/equation/expr.h"

namespace mwpa {

// Error kinds reported by the parser. Solver kinds (nonlinear,
// division_by_unknown, zero_divisor) are also surfaced since a parsed
// equation must satisfy them.
namespace equation_errors {
inline constexpr char kInvalidCharacter[] = "invalid_character";
inline constexpr char kUnbalancedParentheses[] = "unbalanced_parentheses";
inline constexpr char kDanglingOperator[] = "dangling_operator";
inline constexpr char kMultipleEquals[] = "multiple_equals";
inline constexpr char kMissingEquals[] = "missing_equals";
inline constexpr char kMissingUnknown[] = "missing_unknown";
inline constexpr char kUnexpectedToken[] = "unexpected_token";
inline constexpr char kEmptyExpression[] = "empty_expression";
}  // namespace equation_errors

// Grammar, whitespace insignificant:
//   EQ     := EXPR '=' EXPR
//   EXPR   := TERM (('+'|'-') TERM)*
//   TERM   := FACTOR (('*'|'/') FACTOR)*
//   FACTOR := NUMBER | 'X' | '(' EXPR ')' | '-' FACTOR
absl::StatusOr<Equation> ParseEquation(absl::string_view text);

// A single EXPR, X allowed. No linearity checks.
absl::StatusOr<ExprPtr> ParseExpression(absl::string_view text);

}  // namespace mwpa

#endif  // MWPA_EQUATION_PARSER_H_
