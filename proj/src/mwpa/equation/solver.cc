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

#include "mwpa/equation/solver.h"

#include "absl/strings/str_cat.h"
#include "mwpa/common/status.h"

namespace mwpa {

absl::StatusOr<LinearForm> Linearize(const Expr& expr) {
  switch (expr.kind()) {
    case Expr::Kind::kUnknown:
      return LinearForm{Rational(1), Rational(0)};
    case Expr::Kind::kLiteral:
      return LinearForm{Rational(0), expr.value()};
    case Expr::Kind::kBinary:
      break;
  }
  absl::StatusOr<LinearForm> l = Linearize(expr.lhs());
  if (!l.ok()) return l.status();
  absl::StatusOr<LinearForm> r = Linearize(expr.rhs());
  if (!r.ok()) return r.status();
  switch (expr.op()) {
    case '+':
      return LinearForm{l->coefficient + r->coefficient,
                        l->constant + r->constant};
    case '-':
      return LinearForm{l->coefficient - r->coefficient,
                        l->constant - r->constant};
    case '*':
      if (l->coefficient != 0 && r->coefficient != 0) {
        return MakeError(absl::StatusCode::kInvalidArgument, "nonlinear",
                         absl::StrCat("product of two terms in X: ",
                                      expr.ToString()));
      }
      return LinearForm{
          l->coefficient * r->constant + r->coefficient * l->constant,
          l->constant * r->constant};
    case '/':
      if (expr.rhs().ContainsUnknown()) {
        return MakeError(absl::StatusCode::kInvalidArgument,
                         "division_by_unknown",
                         absl::StrCat("divisor mentions X: ", expr.ToString()));
      }
      if (r->constant == 0) {
        return MakeError(absl::StatusCode::kInvalidArgument, "zero_divisor",
                         absl::StrCat("divisor is zero: ", expr.ToString()));
      }
      return LinearForm{l->coefficient / r->constant,
                        l->constant / r->constant};
    default:
      return MakeError(absl::StatusCode::kInternal, "unexpected_token",
                       absl::StrCat("unknown operator '",
                                    std::string(1, expr.op()), "'"));
  }
}

absl::StatusOr<Rational> EvaluateConstant(const Expr& expr) {
  if (expr.ContainsUnknown()) {
    return MakeError(absl::StatusCode::kInvalidArgument, "unexpected_unknown",
                     "constant expression mentions X");
  }
  absl::StatusOr<LinearForm> form = Linearize(expr);
  if (!form.ok()) return form.status();
  return form->constant;
}

absl::StatusOr<Rational> Solve(const Equation& equation) {
  if (equation.empty()) {
    return MakeError(absl::StatusCode::kInvalidArgument, "empty_expression",
                     "empty equation");
  }
  absl::StatusOr<LinearForm> l = Linearize(equation.left());
  if (!l.ok()) return l.status();
  absl::StatusOr<LinearForm> r = Linearize(equation.right());
  if (!r.ok()) return r.status();
  Rational a = l->coefficient - r->coefficient;
  Rational b = r->constant - l->constant;
  if (a == 0) {
    if (b == 0) {
      return MakeError(absl::StatusCode::kInvalidArgument, "degenerate",
                       "equation holds for every X");
    }
    return MakeError(absl::StatusCode::kInvalidArgument, "inconsistent",
                     "equation has no solution");
  }
  return b / a;
}

Equivalence EquationsEquivalent(const Equation& a, const Equation& b) {
  absl::StatusOr<Rational> sa = Solve(a);
  if (!sa.ok()) {
    return {false, absl::StrCat("first equation: ", ErrorKind(sa.status()))};
  }
  absl::StatusOr<Rational> sb = Solve(b);
  if (!sb.ok()) {
    return {false, absl::StrCat("second equation: ", ErrorKind(sb.status()))};
  }
  if (*sa != *sb) {
    return {false, absl::StrCat("solutions differ: ", FormatRational(*sa),
                                " vs ", FormatRational(*sb))};
  }
  return {true, ""};
}

}  // namespace mwpa
