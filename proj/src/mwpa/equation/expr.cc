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

#include "mwpa/equation/expr.h"

#include <utility>

#include "absl/strings/str_cat.h"

namespace mwpa {
namespace {

// Binding strength used by the printer. Leaves and negations behave as
// factors in the grammar.
int Precedence(const Expr& e) {
  if (e.kind() != Expr::Kind::kBinary || e.is_negation()) return 3;
  return (e.op() == '+' || e.op() == '-') ? 1 : 2;
}

std::string LiteralText(const Expr& e) {
  if (!e.text().empty()) return e.text();
  std::string s = FormatRational(e.value());
  if (s.find('/') != std::string::npos || s.front() == '-') {
    return absl::StrCat("(", s, ")");
  }
  return s;
}

}  // namespace

ExprPtr Expr::Unknown() {
  auto e = std::shared_ptr<Expr>(new Expr());
  e->kind_ = Kind::kUnknown;
  return e;
}

ExprPtr Expr::Literal(Rational value, std::string text, bool implicit) {
  auto e = std::shared_ptr<Expr>(new Expr());
  e->kind_ = Kind::kLiteral;
  e->value_ = std::move(value);
  e->text_ = std::move(text);
  e->implicit_ = implicit;
  return e;
}

ExprPtr Expr::Literal(Rational value) {
  return Literal(std::move(value), "", false);
}

ExprPtr Expr::Binary(char op, ExprPtr lhs, ExprPtr rhs) {
  auto e = std::shared_ptr<Expr>(new Expr());
  e->kind_ = Kind::kBinary;
  e->op_ = op;
  e->lhs_ = std::move(lhs);
  e->rhs_ = std::move(rhs);
  return e;
}

ExprPtr Expr::Negate(ExprPtr operand) {
  return Binary('-', Literal(Rational(0), "0", /*implicit=*/true),
                std::move(operand));
}

bool Expr::ContainsUnknown() const {
  switch (kind_) {
    case Kind::kUnknown:
      return true;
    case Kind::kLiteral:
      return false;
    case Kind::kBinary:
      return lhs_->ContainsUnknown() || rhs_->ContainsUnknown();
  }
  return false;
}

std::string Expr::ToString() const {
  switch (kind_) {
    case Kind::kUnknown:
      return "X";
    case Kind::kLiteral:
      return LiteralText(*this);
    case Kind::kBinary:
      break;
  }
  if (is_negation()) {
    std::string inner = rhs_->ToString();
    if (rhs_->kind_ == Kind::kBinary && !rhs_->is_negation()) {
      return absl::StrCat("-(", inner, ")");
    }
    return absl::StrCat("-", inner);
  }
  const int mine = Precedence(*this);
  std::string left = lhs_->ToString();
  std::string right = rhs_->ToString();
  if (Precedence(*lhs_) < mine) left = absl::StrCat("(", left, ")");
  // Equal precedence on the right must be bracketed or the left-associative
  // parse would regroup it.
  if (Precedence(*rhs_) <= mine) right = absl::StrCat("(", right, ")");
  return absl::StrCat(left, std::string(1, op_), right);
}

std::string Expr::ToSExpr() const {
  switch (kind_) {
    case Kind::kUnknown:
      return "X";
    case Kind::kLiteral:
      return FormatRational(value_);
    case Kind::kBinary:
      return absl::StrCat("(", std::string(1, op_), " ", lhs_->ToSExpr(), " ",
                          rhs_->ToSExpr(), ")");
  }
  return "";
}

void Expr::CollectLiterals(std::vector<const Expr*>& out) const {
  if (kind_ == Kind::kLiteral) {
    if (!implicit_) out.push_back(this);
  } else if (kind_ == Kind::kBinary) {
    lhs_->CollectLiterals(out);
    rhs_->CollectLiterals(out);
  }
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind_ != b.kind_) return false;
  switch (a.kind_) {
    case Expr::Kind::kUnknown:
      return true;
    case Expr::Kind::kLiteral:
      return a.value_ == b.value_ && a.implicit_ == b.implicit_;
    case Expr::Kind::kBinary:
      return a.op_ == b.op_ && *a.lhs_ == *b.lhs_ && *a.rhs_ == *b.rhs_;
  }
  return false;
}

Equation::Equation(ExprPtr left, ExprPtr right, std::string source_text)
    : left_(std::move(left)),
      right_(std::move(right)),
      source_text_(std::move(source_text)) {}

std::string Equation::ToString() const {
  if (empty()) return "";
  return absl::StrCat(left_->ToString(), " = ", right_->ToString());
}

std::string Equation::ToSExpr() const {
  if (empty()) return "";
  return absl::StrCat("(= ", left_->ToSExpr(), " ", right_->ToSExpr(), ")");
}

std::vector<const Expr*> Equation::Literals() const {
  std::vector<const Expr*> out;
  if (empty()) return out;
  left_->CollectLiterals(out);
  right_->CollectLiterals(out);
  return out;
}

bool operator==(const Equation& a, const Equation& b) {
  if (a.empty() || b.empty()) return a.empty() == b.empty();
  return *a.left_ == *b.left_ && *a.right_ == *b.right_;
}

}  // namespace mwpa
