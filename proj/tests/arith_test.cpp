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

#include "fsplit/arith.hpp"

#include <algorithm>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.hpp"

namespace fsplit {
namespace {

TEST(Primes, SmallTable) {
  const std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};
  for (std::uint64_t n = 0; n < 50; ++n) {
    const bool expected = std::find(primes.begin(), primes.end(), n) != primes.end();
    EXPECT_EQ(IsPrime(n), expected) << n;
  }
  EXPECT_TRUE(IsPrime(1000000007));
  EXPECT_FALSE(IsPrime(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST(Primes, RequireOddPrime) {
  EXPECT_THROW(RequireOddPrime(2), std::invalid_argument);
  EXPECT_THROW(RequireOddPrime(9), std::invalid_argument);
  EXPECT_NO_THROW(RequireOddPrime(101));
}

TEST(FieldElement, Arithmetic) {
  const FieldElement a(3, 7);
  const FieldElement b(-2, 7);
  EXPECT_EQ(b.value(), 5u);
  EXPECT_EQ((a + b).value(), 1u);
  EXPECT_EQ((a - b).value(), 5u);
  EXPECT_EQ((a * b).value(), 1u);
  EXPECT_EQ((a / b) * b, a);
  EXPECT_EQ(a.Inverse() * a, FieldElement(1, 7));
  EXPECT_THROW(FieldElement(0, 7).Inverse(), std::domain_error);
  EXPECT_THROW(a + FieldElement(1, 5), std::invalid_argument);
}

TEST(FieldElement, QuadraticCharacterMatchesSquares) {
  for (std::uint64_t p : {3, 5, 7, 11, 13}) {
    std::vector<int> chi(p, -1);
    chi[0] = 0;
    for (std::uint64_t x = 1; x < p; ++x) chi[x * x % p] = 1;
    for (std::uint64_t a = 0; a < p; ++a) {
      EXPECT_EQ(FieldElement::FromCanonical(a, p).QuadraticCharacter(), chi[a]) << a << " mod " << p;
    }
  }
}

TEST(ExtField, NonresidueMatchesSquareListing) {
  for (std::uint64_t p : {3, 5, 7, 11, 13, 17, 31, 101}) {
    EXPECT_EQ(static_cast<std::int64_t>(SmallestNonresidue(p)), oracle::NonresidueBySquares(static_cast<std::int64_t>(p)));
  }
}

TEST(ExtField, MultiplicationMatchesOracle) {
  const std::int64_t p = 7;
  const oracle::Fq2Ring ring{p, oracle::NonresidueBySquares(p)};
  for (const auto& x : EnumerateExtField(p)) {
    for (const auto& y : EnumerateExtField(p)) {
      const auto expect = ring.Mul({static_cast<std::int64_t>(x.a()), static_cast<std::int64_t>(x.b())},
                                   {static_cast<std::int64_t>(y.a()), static_cast<std::int64_t>(y.b())});
      const auto got = x * y;
      ASSERT_EQ(static_cast<std::int64_t>(got.a()), expect.a);
      ASSERT_EQ(static_cast<std::int64_t>(got.b()), expect.b);
    }
  }
}

TEST(ExtField, FrobeniusIsPthPower) {
  for (std::uint64_t p : {3, 5, 13}) {
    for (const auto& x : EnumerateExtField(p)) {
      EXPECT_EQ(x.Frobenius(), x.Pow(p));
      EXPECT_EQ(x.Frobenius().Frobenius(), x);
    }
  }
}

TEST(ExtField, InverseAndLevel) {
  const ExtFieldElement x(2, 3, 11);
  EXPECT_EQ(x * x.Inverse(), ExtFieldElement(1, 0, 11));
  EXPECT_EQ(x.Level(), 2);
  EXPECT_EQ(ExtFieldElement(4, 0, 11).Level(), 1);
  EXPECT_EQ(ExtFieldElement(4, 0, 11).BasePart(), FieldElement(4, 11));
  EXPECT_THROW(x.BasePart(), std::domain_error);
  EXPECT_EQ(x.ToString(), "2+3t");
  EXPECT_EQ(ExtFieldElement(0, 1, 11).ToString(), "t");
  EXPECT_THROW(ExtFieldElement::WithNonresidue(1, 1, 11, 4), std::invalid_argument);
}

TEST(ZpRational, Basics) {
  const ZpRational half(1, 2);
  EXPECT_EQ((half + half), ZpRational(1));
  EXPECT_EQ(ZpRational::Parse("6/8"), ZpRational(3, 4));
  EXPECT_EQ(ZpRational::Parse("-3").ToString(), "-3");
  EXPECT_EQ(ZpRational(2, -4).ToString(), "-1/2");
  EXPECT_TRUE(half.IsPIntegral(5));
  EXPECT_FALSE(ZpRational(1, 10).IsPIntegral(5));
  EXPECT_THROW(ZpRational(1, 10, 5), ZpViolation);
  EXPECT_THROW(ZpRational::Parse("1/0"), std::invalid_argument);
  EXPECT_THROW(ZpRational::Parse("x/2"), std::invalid_argument);
}

TEST(Binomial, LucasMatchesFactorials) {
  for (std::uint64_t p : {3, 5, 7}) {
    for (std::uint64_t n = 0; n < 60; ++n) {
      for (std::uint64_t k = 0; k <= n + 1; ++k) {
        ASSERT_EQ(static_cast<std::int64_t>(BinomModP(n, k, p).value()),
                  oracle::BinomMod(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k), static_cast<std::int64_t>(p)))
            << "C(" << n << "," << k << ") mod " << p;
      }
    }
  }
}

TEST(SplittingLevel, Examples) {
  const std::vector<ZpRational> halves{ZpRational(1, 2), ZpRational(1, 4)};
  EXPECT_EQ(SplittingLevel(halves, 5), 1u);
  const std::vector<ZpRational> thirds{ZpRational(1, 3)};
  EXPECT_EQ(SplittingLevel(thirds, 5), 2u);
  EXPECT_EQ(SplittingLevel(std::vector<ZpRational>{ZpRational(1, 8)}, 3), 2u);
  EXPECT_THROW(SplittingLevel(std::vector<ZpRational>{ZpRational(1, 5)}, 5), ZpViolation);
}

TEST(SplittingLevel, IsSmallestIntegralLevel) {
  for (std::uint64_t p : {3, 5, 7}) {
    for (std::int64_t den = 1; den <= 30; ++den) {
      if (den % static_cast<std::int64_t>(p) == 0) continue;
      const std::vector<ZpRational> b{ZpRational(1, den)};
      const unsigned d = SplittingLevel(b, p);
      EXPECT_NO_THROW(ScaleToLevel(b[0], p, d));
      for (unsigned e = 1; e < d; ++e) EXPECT_THROW(ScaleToLevel(b[0], p, e), std::invalid_argument);
    }
  }
}

TEST(ScaleToLevel, Values) {
  EXPECT_EQ(ScaleToLevel(ZpRational(1, 2), 5, 1), BigInt(2));
  EXPECT_EQ(ScaleToLevel(ZpRational(3, 4), 5, 2), BigInt(18));
  EXPECT_THROW(ScaleToLevel(ZpRational(1, 3), 5, 1), std::invalid_argument);
}

TEST(IntPow, Overflow) {
  EXPECT_EQ(IntPow(5, 3), 125u);
  EXPECT_THROW(IntPow(3, 50), std::overflow_error);
}

}  // namespace
}  // namespace fsplit
