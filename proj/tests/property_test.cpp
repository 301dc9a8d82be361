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

#include "properties.hpp"

#include "gtest/gtest.h"

namespace fsplit::props {
namespace {

void Expect(const Tally& t) {
  EXPECT_GE(t.assertions, 100u) << t.name;
  EXPECT_EQ(t.failures, 0u) << t.name;
  for (const auto& m : t.messages) ADD_FAILURE() << t.name << ": " << m;
}

TEST(Properties, NuMonotonicity) { Expect(NuMonotonicity()); }
TEST(Properties, GfsBoundaryMonotonicity) { Expect(GfsBoundaryMonotonicity()); }
TEST(Properties, PowerQm1MatchesNaivePowering) { Expect(PowerQm1Equivalence()); }
TEST(Properties, FieldAxioms) { Expect(FieldAxioms()); }
TEST(Properties, JsonRoundTrip) { Expect(JsonRoundTrip()); }

}  // namespace
}  // namespace fsplit::props
