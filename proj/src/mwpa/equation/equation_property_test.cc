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

// Randomised checks of the parser/printer/solver against an independent
// evaluator written only for this test.

#include <optional>
#include <string>
#include <vector>

#include "absl/strings/str_cat.h"
#include "gtest/gtest.h"
#include "mwpa/common/random.h"
#include "mwpa/equation/parser.h"
#include "mwpa/equation/solver.h"
#include "support/equation_oracle.h"

namespace mwpa {
namespace {

using oracle::Draw;
using oracle::Sample;
using oracle::TreeGen;

TEST(EquationPropertyTest, PrintParseSolveMatchesOracle) {
  TreeGen gen(20261016);
  int checked = 0;
  int attempts = 0;
  while (checked < 10000) {
    ASSERT_LT(++attempts, 200000) << "generator too wasteful";
    std::optional<Sample> s = Draw(gen);
    if (!s) continue;
    const std::string text = s->equation.ToString();
    absl::StatusOr<Equation> parsed = ParseEquation(text);
    ASSERT_TRUE(parsed.ok()) << text << ": " << parsed.status();
    ASSERT_EQ(*parsed, s->equation) << text;
    absl::StatusOr<Rational> solved = Solve(*parsed);
    ASSERT_TRUE(solved.ok()) << text << ": " << solved.status();
    ASSERT_EQ(*solved, s->solution) << text;
    ++checked;
  }
}

TEST(EquationPropertyTest, EquivalenceIsAnEquivalenceRelation) {
  TreeGen gen(7);
  std::vector<Equation> pool;
  while (pool.size() < 300) {
    std::optional<Sample> s = Draw(gen);
    if (s) pool.push_back(s->equation);
  }
  // Pair each of the first 100 with a simpler equation sharing its solution
  // so equivalent pairs are common enough to exercise transitivity.
  std::vector<std::vector<size_t>> classes;
  for (size_t i = 0; i < 100; ++i) {
    Rational v = *Solve(pool[i]);
    absl::StatusOr<Equation> simple = ParseEquation(absl::StrCat(
        "X*", boost::multiprecision::denominator(v).str(), " = ",
        boost::multiprecision::numerator(v).str()));
    ASSERT_TRUE(simple.ok()) << simple.status();
    pool.push_back(*simple);
    classes.push_back({i, pool.size() - 1});
  }
  Rng rng(99);
  int transitive_chains = 0;
  for (int t = 0; t < 5000; ++t) {
    size_t ia, ib, ic;
    if (t % 2 == 0) {
      const std::vector<size_t>& cls = classes[rng.Uniform(classes.size())];
      ia = cls[rng.Uniform(2)];
      ib = cls[rng.Uniform(2)];
      ic = cls[rng.Uniform(2)];
    } else {
      ia = rng.Uniform(pool.size());
      ib = rng.Uniform(pool.size());
      ic = rng.Uniform(pool.size());
    }
    const Equation& a = pool[ia];
    const Equation& b = pool[ib];
    const Equation& c = pool[ic];
    EXPECT_TRUE(EquationsEquivalent(a, a).equivalent);
    bool ab = EquationsEquivalent(a, b).equivalent;
    EXPECT_EQ(ab, EquationsEquivalent(b, a).equivalent);
    if (ab && EquationsEquivalent(b, c).equivalent) {
      ++transitive_chains;
      EXPECT_TRUE(EquationsEquivalent(a, c).equivalent);
    }
  }
  // Make sure the transitivity branch is actually exercised.
  EXPECT_GT(transitive_chains, 0);
}

}  // namespace
}  // namespace mwpa
