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

#include "mwpa/equation/parser.h"

#include <string>
#include <utility>
#include <vector>

#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "mwpa/common/status.h"
#include "mwpa/equation/solver.h"

namespace mwpa {
namespace {

using namespace equation_errors;  // NOLINT: local error-kind constants

enum class Tok { kNumber, kUnknown, kOp, kLParen, kRParen, kEquals, kEnd };

struct Token {
  Tok type;
  std::string text;
  size_t offset;
};

absl::Status Error(absl::string_view kind, absl::string_view message) {
  return MakeError(absl::StatusCode::kInvalidArgument, kind, message);
}

absl::StatusOr<std::vector<Token>> Lex(absl::string_view text) {
  std::vector<Token> tokens;
  size_t i = 0;
  while (i < text.size()) {
    const unsigned char c = text[i];
    if (absl::ascii_isspace(c)) {
      ++i;
    } else if (absl::ascii_isdigit(c) || c == '.') {
      size_t start = i;
      while (i < text.size() &&
             (absl::ascii_isdigit(static_cast<unsigned char>(text[i])) ||
              text[i] == '.')) {
        ++i;
      }
      tokens.push_back(
          {Tok::kNumber, std::string(text.substr(start, i - start)), start});
    } else if (c == 'X') {
      tokens.push_back({Tok::kUnknown, "X", i++});
    } else if (c == '+' || c == '-' || c == '*' || c == '/') {
      tokens.push_back({Tok::kOp, std::string(1, c), i++});
    } else if (c == '(') {
      tokens.push_back({Tok::kLParen, "(", i++});
    } else if (c == ')') {
      tokens.push_back({Tok::kRParen, ")", i++});
    } else if (c == '=') {
      tokens.push_back({Tok::kEquals, "=", i++});
    } else {
      return Error(kInvalidCharacter,
                   absl::StrCat("unexpected character '", std::string(1, c),
                                "' at offset ", i));
    }
  }
  return tokens;
}

// Recursive descent over one side of the equation. `tokens` must end with a
// kEnd sentinel.
class SideParser {
 public:
  explicit SideParser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  absl::StatusOr<ExprPtr> ParseAll() {
    if (Peek().type == Tok::kEnd) {
      return Error(kEmptyExpression, "empty side of equation");
    }
    absl::StatusOr<ExprPtr> e = ParseExpr();
    if (!e.ok()) return e;
    if (Peek().type != Tok::kEnd) {
      return Error(kUnexpectedToken,
                   absl::StrCat("unexpected '", Peek().text, "' at offset ",
                                Peek().offset));
    }
    return e;
  }

 private:
  const Token& Peek() const { return tokens_[pos_]; }
  bool PeekOp(char op) const {
    return Peek().type == Tok::kOp && Peek().text[0] == op;
  }

  absl::StatusOr<ExprPtr> ParseExpr() {
    absl::StatusOr<ExprPtr> lhs = ParseTerm();
    if (!lhs.ok()) return lhs;
    ExprPtr acc = *std::move(lhs);
    while (PeekOp('+') || PeekOp('-')) {
      char op = tokens_[pos_++].text[0];
      absl::StatusOr<ExprPtr> rhs = ParseTerm();
      if (!rhs.ok()) return rhs;
      acc = Expr::Binary(op, std::move(acc), *std::move(rhs));
    }
    return acc;
  }

  absl::StatusOr<ExprPtr> ParseTerm() {
    absl::StatusOr<ExprPtr> lhs = ParseFactor();
    if (!lhs.ok()) return lhs;
    ExprPtr acc = *std::move(lhs);
    while (PeekOp('*') || PeekOp('/')) {
      char op = tokens_[pos_++].text[0];
      absl::StatusOr<ExprPtr> rhs = ParseFactor();
      if (!rhs.ok()) return rhs;
      acc = Expr::Binary(op, std::move(acc), *std::move(rhs));
    }
    return acc;
  }

  absl::StatusOr<ExprPtr> ParseFactor() {
    const Token& t = Peek();
    switch (t.type) {
      case Tok::kNumber: {
        absl::StatusOr<Rational> value = ParseDecimal(t.text);
        if (!value.ok()) {
          return Error(kUnexpectedToken,
                       absl::StrCat("malformed number '", t.text, "'"));
        }
        ++pos_;
        return Expr::Literal(*std::move(value), t.text);
      }
      case Tok::kUnknown:
        ++pos_;
        return Expr::Unknown();
      case Tok::kLParen: {
        ++pos_;
        if (Peek().type == Tok::kRParen) {
          return Error(kEmptyExpression,
                       absl::StrCat("empty parentheses at offset ", t.offset));
        }
        absl::StatusOr<ExprPtr> inner = ParseExpr();
        if (!inner.ok()) return inner;
        if (Peek().type != Tok::kRParen) {
          return Error(kUnexpectedToken,
                       absl::StrCat("expected ')' at offset ", Peek().offset));
        }
        ++pos_;
        return inner;
      }
      case Tok::kOp:
        if (t.text[0] == '-') {
          ++pos_;
          absl::StatusOr<ExprPtr> operand = ParseFactor();
          if (!operand.ok()) return operand;
          return Expr::Negate(*std::move(operand));
        }
        return Error(kDanglingOperator,
                     absl::StrCat("operator '", t.text,
                                  "' is missing its left operand"));
      case Tok::kRParen:
      case Tok::kEnd:
        if (pos_ > 0 && tokens_[pos_ - 1].type == Tok::kOp) {
          return Error(kDanglingOperator,
                       absl::StrCat("operator '", tokens_[pos_ - 1].text,
                                    "' is missing its right operand"));
        }
        return Error(kUnexpectedToken,
                     absl::StrCat("unexpected '", t.text, "' at offset ",
                                  t.offset));
      case Tok::kEquals:
        break;
    }
    return Error(kUnexpectedToken, "unexpected '='");
  }

  std::vector<Token> tokens_;
  size_t pos_ = 0;
};

absl::Status CheckBalanced(const std::vector<Token>& tokens) {
  int depth = 0;
  for (const Token& t : tokens) {
    if (t.type == Tok::kLParen) ++depth;
    if (t.type == Tok::kRParen && --depth < 0) {
      return Error(kUnbalancedParentheses,
                   absl::StrCat("unmatched ')' at offset ", t.offset));
    }
  }
  if (depth != 0) {
    return Error(kUnbalancedParentheses,
                 absl::StrCat(depth, " unclosed '('"));
  }
  return absl::OkStatus();
}

absl::StatusOr<ExprPtr> ParseSide(std::vector<Token> tokens, size_t end_offset) {
  if (absl::Status s = CheckBalanced(tokens); !s.ok()) return s;
  tokens.push_back({Tok::kEnd, "<end>", end_offset});
  return SideParser(std::move(tokens)).ParseAll();
}

}  // namespace

absl::StatusOr<Equation> ParseEquation(absl::string_view text) {
  absl::StatusOr<std::vector<Token>> tokens = Lex(text);
  if (!tokens.ok()) return tokens.status();

  std::vector<size_t> equals;
  for (size_t i = 0; i < tokens->size(); ++i) {
    if ((*tokens)[i].type == Tok::kEquals) equals.push_back(i);
  }
  if (equals.empty()) return Error(kMissingEquals, "no '=' in equation");
  if (equals.size() > 1) {
    return Error(kMultipleEquals,
                 absl::StrCat(equals.size(), " '=' signs in equation"));
  }

  // Parentheses are checked over the whole string first, so "X = ((9+3-3" is
  // reported as unbalanced rather than as whatever the descent trips on.
  if (absl::Status s = CheckBalanced(*tokens); !s.ok()) return s;

  const size_t eq = equals.front();
  std::vector<Token> left(tokens->begin(), tokens->begin() + eq);
  std::vector<Token> right(tokens->begin() + eq + 1, tokens->end());
  absl::StatusOr<ExprPtr> lhs = ParseSide(std::move(left), (*tokens)[eq].offset);
  if (!lhs.ok()) return lhs.status();
  absl::StatusOr<ExprPtr> rhs = ParseSide(std::move(right), text.size());
  if (!rhs.ok()) return rhs.status();

  if (!(*lhs)->ContainsUnknown() && !(*rhs)->ContainsUnknown()) {
    return Error(kMissingUnknown, "neither side mentions X");
  }
  for (const ExprPtr* side : {&*lhs, &*rhs}) {
    absl::StatusOr<LinearForm> form = Linearize(**side);
    if (!form.ok()) return form.status();
  }
  return Equation(*std::move(lhs), *std::move(rhs), std::string(text));
}

absl::StatusOr<ExprPtr> ParseExpression(absl::string_view text) {
  absl::StatusOr<std::vector<Token>> tokens = Lex(text);
  if (!tokens.ok()) return tokens.status();
  for (const Token& t : *tokens) {
    if (t.type == Tok::kEquals) {
      return Error(kUnexpectedToken, "'=' inside an expression");
    }
  }
  return ParseSide(*std::move(tokens), text.size());
}

}  // namespace mwpa
