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

#include "fsplit/elliptic.hpp"

#include <set>
#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "oracles.hpp"

namespace fsplit {
namespace {

TEST(LegendreCurve, RejectsNodal) {
  EXPECT_THROW(LegendreCurve(ExtFieldElement(0, 0, 5)), std::invalid_argument);
  EXPECT_THROW(LegendreCurve(ExtFieldElement(1, 0, 5)), std::invalid_argument);
  EXPECT_NO_THROW(LegendreCurve(ExtFieldElement(2, 0, 5)));
}

TEST(Hasse, KnownValues) {
  EXPECT_EQ(HasseCoeff(ExtFieldElement(2, 0, 5)), ExtFieldElement(3, 0, 5));
  EXPECT_TRUE(HasseCoeff(ExtFieldElement(2, 0, 3)).IsZero());
  EXPECT_EQ(HasseClosed(ExtFieldElement(2, 0, 5)), ExtFieldElement(3, 0, 5));
}

TEST(Hasse, ClosedFormMatchesNaiveExpansion) {
  for (std::uint64_t p : {3, 5, 7}) {
    for (const auto& lambda : EnumerateExtField(p)) {
      if (lambda == ExtFieldElement(0, 0, p) || lambda == ExtFieldElement(1, 0, p)) continue;
      const auto expect = oracle::HasseByExpansion(static_cast<std::int64_t>(p),
                                                   {static_cast<std::int64_t>(lambda.a()), static_cast<std::int64_t>(lambda.b())});
      const auto got = HasseClosed(lambda);
      ASSERT_EQ(static_cast<std::int64_t>(got.a()), expect.a) << lambda;
      ASSERT_EQ(static_cast<std::int64_t>(got.b()), expect.b) << lambda;
      ASSERT_EQ(HasseCoeff(lambda), got);
    }
  }
}

TEST(Hasse, SymbolicPolynomialsAgree) {
  for (std::uint64_t p : {3, 5, 7, 11, 13}) {
    EXPECT_EQ(HassePolynomialClosed(p), HassePolynomialByExpansion(p)) << p;
  }
  EXPECT_EQ(FormatPoly(HassePolynomialClosed(5), {"l"}), "l^2 + 4*l + 1");
}

TEST(PointCount, MatchesPairListing) {
  for (std::uint64_t p : {3, 5, 7, 11, 13}) {
    for (std::uint64_t lambda = 2; lambda < p; ++lambda) {
      const LegendreCurve e(ExtFieldElement(lambda, 0, p));
      EXPECT_EQ(CountPoints(e), oracle::CountPointsByPairs(static_cast<std::int64_t>(p), static_cast<std::int64_t>(lambda)));
    }
  }
  EXPECT_THROW(CountPoints(LegendreCurve(ExtFieldElement(1, 1, 5))), std::invalid_argument);
}

TEST(PointCount, SupersingularOnlyFromFive) {
  EXPECT_THROW(IsSupersingularByCount(LegendreCurve(ExtFieldElement(2, 0, 3))), std::invalid_argument);
  EXPECT_FALSE(IsSupersingularByCount(LegendreCurve(ExtFieldElement(2, 0, 5))));
  EXPECT_TRUE(IsOrdinary(LegendreCurve(ExtFieldElement(2, 0, 5))));
  EXPECT_FALSE(IsOrdinary(LegendreCurve(ExtFieldElement(2, 0, 3))));
}

TEST(SupersingularReport, PrimeFive) {
  const auto r = ComputeSupersingularReport(5);
  EXPECT_EQ(FormatPoly(r.poly, {"l"}), "l^2 + 4*l + 1");
  EXPECT_EQ(r.root_count, 2u);
  EXPECT_TRUE(r.squarefree);
  EXPECT_TRUE(r.closed_form_agrees);
  ASSERT_EQ(r.roots.size(), 2u);
  EXPECT_EQ(r.roots[0].value.ToString(), "3+2t");
  EXPECT_EQ(r.roots[1].value.ToString(), "3+3t");
}

TEST(SupersingularReport, LocusIsClosedUnderFrobeniusAndSymmetries) {
  for (std::uint64_t p : {7, 11, 13, 17}) {
    const auto r = ComputeSupersingularReport(p);
    std::set<std::pair<std::uint64_t, std::uint64_t>> locus;
    for (const auto& root : r.roots) locus.insert({root.value.a(), root.value.b()});
    const ExtFieldElement one(1, 0, p);
    for (const auto& root : r.roots) {
      const auto& l = root.value;
      for (const auto& image : {l.Frobenius(), l.Inverse(), one - l, one / (one - l), l / (l - one), (l - one) / l}) {
        EXPECT_TRUE(locus.count({image.a(), image.b()})) << "p=" << p << " " << l << " -> " << image;
      }
    }
  }
}

TEST(CurveKgfr, Classification) {
  EXPECT_TRUE(ClassifyCurveKgfr({0, std::nullopt}).kgfr);
  EXPECT_TRUE(ClassifyCurveKgfr({1, LegendreCurve(ExtFieldElement(2, 0, 5))}).kgfr);
  EXPECT_FALSE(ClassifyCurveKgfr({1, LegendreCurve(ExtFieldElement(2, 0, 3))}).kgfr);
  EXPECT_FALSE(ClassifyCurveKgfr({2, std::nullopt}).kgfr);
  EXPECT_THROW(ClassifyCurveKgfr({1, std::nullopt}), std::invalid_argument);
}

TEST(HasseTable, RowsMatchOracles) {
  const std::int64_t p = 7;
  const auto rows = HasseTable(p);
  ASSERT_EQ(rows.size(), 5u);
  std::ostringstream expect;
  expect << "p,lambda,hasse,count,ordinary\n";
  for (std::int64_t lambda = 2; lambda < p; ++lambda) {
    const auto h = oracle::HasseByExpansion(p, {lambda, 0});
    expect << p << "," << lambda << "," << h.a << "," << oracle::CountPointsByPairs(p, lambda) << ","
           << (h.a != 0 ? "true" : "false") << "\n";
  }
  std::ostringstream out;
  WriteHasseCsv(out, rows);
  EXPECT_EQ(out.str(), expect.str());
}

}  // namespace
}  // namespace fsplit
