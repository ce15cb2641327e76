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

#ifndef MWPA_EQUATION_RATIONAL_H_
#define MWPA_EQUATION_RATIONAL_H_

#include <string>

#include "absl/status/statusor.h"
#include "absl/strings/string_view.h"
#include "boost/multiprecision/cpp_int.hpp"

namespace mwpa {

// Exact arithmetic everywhere: 0.1 + 0.2 must equal 0.3 when we compare a
// solved equation against a dataset answer.
using Rational = boost::multiprecision::cpp_rational;

// "8", "8.0", "2.5", ".5", "1,000" (thousands separators). No sign.
absl::StatusOr<Rational> ParseDecimal(absl::string_view text);

// Accepts ParseDecimal input plus an optional sign and "a/b".
absl::StatusOr<Rational> ParseRational(absl::string_view text);

// "13", "-3", "5/2".
std::string FormatRational(const Rational& value);

double ToDouble(const Rational& value);

}  // namespace mwpa

#endif  // MWPA_EQUATION_RATIONAL_H_
