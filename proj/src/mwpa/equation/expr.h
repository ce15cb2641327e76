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

#ifndef MWPA_EQUATION_EXPR_H_
#define MWPA_EQUATION_EXPR_H_

#include <memory>
#include <string>
#include <vector>

#include "mwpa/equation/rational.h"

namespace mwpa {

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Immutable expression node. Nodes are shared between trees freely.
class Expr {
 public:
  enum class Kind { kUnknown, kLiteral, kBinary };

  static ExprPtr Unknown();
  // `implicit` marks the zero a unary minus desugars to; it has no surface
  // form in the problem text and is skipped by quantity alignment.
  static ExprPtr Literal(Rational value, std::string text,
                         bool implicit = false);
  static ExprPtr Literal(Rational value);
  static ExprPtr Binary(char op, ExprPtr lhs, ExprPtr rhs);
  static ExprPtr Negate(ExprPtr operand);

  Kind kind() const { return kind_; }
  const Rational& value() const { return value_; }
  const std::string& text() const { return text_; }
  bool implicit() const { return implicit_; }
  char op() const { return op_; }
  const Expr& lhs() const { return *lhs_; }
  const Expr& rhs() const { return *rhs_; }
  const ExprPtr& lhs_ptr() const { return lhs_; }
  const ExprPtr& rhs_ptr() const { return rhs_; }

  bool is_negation() const {
    return kind_ == Kind::kBinary && op_ == '-' &&
           lhs_->kind_ == Kind::kLiteral && lhs_->implicit_;
  }
  bool ContainsUnknown() const;

  // Infix form that parses back to a structurally identical tree.
  std::string ToString() const;
  // Fully bracketed prefix form, e.g. "(+ 8 5)". Literals print their value.
  std::string ToSExpr() const;

  // Explicit literals in left-to-right textual order.
  void CollectLiterals(std::vector<const Expr*>& out) const;

  friend bool operator==(const Expr& a, const Expr& b);

 private:
  Expr() = default;

  Kind kind_ = Kind::kUnknown;
  Rational value_;
  std::string text_;
  bool implicit_ = false;
  char op_ = 0;
  ExprPtr lhs_;
  ExprPtr rhs_;
};

class Equation {
 public:
  Equation() = default;
  Equation(ExprPtr left, ExprPtr right, std::string source_text = "");

  bool empty() const { return left_ == nullptr; }
  const Expr& left() const { return *left_; }
  const Expr& right() const { return *right_; }
  const ExprPtr& left_ptr() const { return left_; }
  const ExprPtr& right_ptr() const { return right_; }
  const std::string& source_text() const { return source_text_; }

  std::string ToString() const;
  std::string ToSExpr() const;
  std::vector<const Expr*> Literals() const;

  friend bool operator==(const Equation& a, const Equation& b);

 private:
  ExprPtr left_;
  ExprPtr right_;
  std::string source_text_;
};

}  // namespace mwpa

#endif  // MWPA_EQUATION_EXPR_H_
