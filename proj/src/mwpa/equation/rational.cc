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

#include "mwpa/equation/rational.h"

#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "mwpa/common/status.h"

namespace mwpa {
namespace {

absl::Status BadNumber(absl::string_view text) {
  return MakeError(absl::StatusCode::kInvalidArgument, "invalid_number",
                   absl::StrCat("not a number: '", text, "'"));
}

}  // namespace

absl::StatusOr<Rational> ParseDecimal(absl::string_view text) {
  if (text.empty()) return BadNumber(text);
  boost::multiprecision::cpp_int numerator = 0;
  boost::multiprecision::cpp_int denominator = 1;
  bool seen_point = false;
  bool seen_digit = false;
  for (size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (absl::ascii_isdigit(static_cast<unsigned char>(c))) {
      numerator = numerator * 10 + (c - '0');
      if (seen_point) denominator *= 10;
      seen_digit = true;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (c == ',' && !seen_point && seen_digit && i + 3 < text.size()) {
      // Thousands separator: exactly three digits must follow.
      for (size_t k = 1; k <= 3; ++k) {
        if (!absl::ascii_isdigit(static_cast<unsigned char>(text[i + k]))) {
          return BadNumber(text);
        }
      }
      if (i + 4 < text.size() && absl::ascii_isdigit(
                                     static_cast<unsigned char>(text[i + 4]))) {
        return BadNumber(text);
      }
    } else {
      return BadNumber(text);
    }
  }
  if (!seen_digit) return BadNumber(text);
  return Rational(numerator, denominator);
}

absl::StatusOr<Rational> ParseRational(absl::string_view text) {
  text = absl::StripAsciiWhitespace(text);
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  size_t slash = text.find('/');
  absl::StatusOr<Rational> value;
  if (slash == absl::string_view::npos) {
    value = ParseDecimal(text);
  } else {
    absl::StatusOr<Rational> num = ParseDecimal(text.substr(0, slash));
    absl::StatusOr<Rational> den = ParseDecimal(text.substr(slash + 1));
    if (!num.ok() || !den.ok() || *den == 0) return BadNumber(text);
    value = *num / *den;
  }
  if (!value.ok()) return value.status();
  return negative ? Rational(-*value) : *value;
}

std::string FormatRational(const Rational& value) {
  if (boost::multiprecision::denominator(value) == 1) {
    return boost::multiprecision::numerator(value).str();
  }
  return value.str();
}

double ToDouble(const Rational& value) {
  return value.convert_to<double>();
}

}  // namespace mwpa
