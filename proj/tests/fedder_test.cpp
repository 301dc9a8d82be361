// Copyright 2026 The fsplit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License").
// You may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing,
// software distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions
// and limitations under the License.

#include "fsplit/fedder.hpp"

#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.hpp"

namespace fsplit {
namespace {

const std::vector<std::string> kXY{"x", "y"};

MPoly XY(const std::string& text, std::uint64_t p) { return ParsePoly(text, kXY, p); }

oracle::NaiveTerms ToNaive(const MPoly& f) {
  oracle::NaiveTerms out;
  for (const auto& [e, c] : f.terms()) {
    out[std::vector<std::int64_t>(e.begin(), e.end())] = static_cast<std::int64_t>(c);
  }
  return out;
}

TEST(BracketIdeal, Examples) {
  EXPECT_TRUE(InBracketIdeal(XY("x^5", 5), 5));
  EXPECT_FALSE(InBracketIdeal(XY("x^4*y^4", 5), 5));
  EXPECT_FALSE(InBracketIdeal(XY("x^5 + x^4*y^4", 5), 5));
  EXPECT_TRUE(InBracketIdeal(MPoly(5, 2), 5));
}

TEST(Nu, Examples) {
  EXPECT_EQ(Nu(XY("x*y", 5), 1), 4u);
  EXPECT_EQ(Nu(XY("y^2 - x^3 + x^2", 5), 1), 4u);
  EXPECT_EQ(Nu(ParsePoly("x", {"x"}, 7), 2), 48u);
  EXPECT_THROW(Nu(XY("x + 1", 5), 1), std::invalid_argument);
  EXPECT_THROW(Nu(XY("3", 5), 1), std::invalid_argument);
}

TEST(Nu, MatchesFullExpansion) {
  const std::vector<std::string> polys{"y^2 - x^3 + x^2", "x^2 + y^3", "x*y*(x+y)", "x^3 + y^3 + x*y", "x^2"};
  for (std::uint64_t p : {3, 5}) {
    for (const auto& text : polys) {
      const MPoly f = XY(text, p);
      for (unsigned e = 1; e <= 2; ++e) {
        const auto q = static_cast<std::int64_t>(IntPow(p, e));
        if (q > 9 && text == "x*y*(x+y)") continue;
        EXPECT_EQ(static_cast<std::int64_t>(Nu(f, e)), oracle::NaiveNu(ToNaive(f), 2, static_cast<std::int64_t>(p), q))
            << text << " p=" << p << " e=" << e;
        EXPECT_EQ(Nu(f, e), NuBisect(f, e)) << text;
      }
    }
  }
}

TEST(FptBounds, NodalFiber) {
  const auto seq = FptBounds(XY("y^2 - x^3 + x^2", 5), 3);
  ASSERT_EQ(seq.values.size(), 3u);
  EXPECT_EQ(seq.values[0].nu, 4u);
  EXPECT_EQ(seq.values[1].nu, 24u);
  EXPECT_EQ(seq.values[2].nu, 124u);
  EXPECT_EQ(seq.fpt_lower, Rational(124, 125));
  EXPECT_EQ(seq.fpt_upper, Rational(1));
}

TEST(FptBounds, SquareAndNode) {
  const auto sq = FptBounds(XY("x^2", 5), 2);
  EXPECT_EQ(sq.values[0].nu, 2u);
  EXPECT_EQ(sq.values[1].nu, 12u);
  EXPECT_EQ(sq.fpt_lower, Rational(12, 25));
  EXPECT_EQ(sq.fpt_upper, Rational(13, 25));
  const auto node = FptBounds(XY("x*y", 3), 3);
  EXPECT_EQ(node.values[0].nu, 2u);
  EXPECT_EQ(node.values[1].nu, 8u);
  EXPECT_EQ(node.values[2].nu, 26u);
}

TEST(FptBounds, CoordinateProductsGiveQMinusOne) {
  const std::vector<std::string> vars{"x", "y", "z"};
  const MPoly f = ParsePoly("x*y*z", vars, 3);
  for (unsigned e = 1; e <= 3; ++e) EXPECT_EQ(Nu(f, e), IntPow(3, e) - 1);
}

TEST(FPurePair, Examples) {
  EXPECT_TRUE(IsFPurePair(XY("x*y", 5), ZpRational(1), 1));
  EXPECT_TRUE(IsFPurePair(XY("x^2", 5), ZpRational(1, 2), 1));
  EXPECT_FALSE(IsFPurePair(XY("x^2", 5), ZpRational(3, 4), 2));
  EXPECT_THROW(IsFPurePair(XY("x^2", 5), ZpRational(1, 3), 1), std::invalid_argument);
}

TEST(FPurePair, NodalFiberAtThresholdOne) {
  const MPoly f = XY("y^2 - x^3 + x^2", 5);
  for (unsigned e = 1; e <= 3; ++e) EXPECT_TRUE(IsFPurePair(f, ZpRational(1), e));
}

}  // namespace
}  // namespace fsplit
