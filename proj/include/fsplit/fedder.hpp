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

#ifndef FSPLIT_FEDDER_HPP_
#define FSPLIT_FEDDER_HPP_

#include <cstdint>
#include <vector>

#include "fsplit/arith.hpp"
#include "fsplit/mpoly.hpp"

// Frobenius tests at the maximal ideal m = (x_1, ..., x_n) of the origin.
// To test another point, translate coordinates first.
namespace fsplit {

// True iff every monomial of g has some exponent >= q, i.e. g lies in the
// Frobenius power m^[q] = (x_1^q, ..., x_n^q). q must be a power of p.
bool InBracketIdeal(const MPoly& g, std::uint64_t q);

// nu_f(p^e) = max { r : f^r not in m^[p^e] }. Incremental: multiplies by f
// and discards monomials already inside m^[q] after every step.
// Requires f nonconstant with f(0) = 0.
std::uint64_t Nu(const MPoly& f, unsigned e);

// Same value by binary search over r with truncated powering. Slower; kept
// as an independent route for cross-checking Nu.
std::uint64_t NuBisect(const MPoly& f, unsigned e);

struct NuEntry {
  unsigned e;
  std::uint64_t q;
  std::uint64_t nu;
};

struct NuSequence {
  MPoly poly;
  std::uint64_t prime;
  std::vector<NuEntry> values;
  // nu(q)/q <= fpt(f) <= (nu(q) + 1)/q at the largest computed q.
  Rational fpt_lower;
  Rational fpt_upper;
};

// Computes nu for e = 1..e_max. Throws InvariantViolation if
// nu(p q) >= p nu(q) fails, which can only mean an arithmetic bug.
NuSequence FptBounds(const MPoly& f, unsigned e_max);

// True iff f^(t (p^e - 1)) is not in m^[p^e]. Throws std::invalid_argument
// unless t (p^e - 1) is a nonnegative integer.
bool IsFPurePair(const MPoly& f, const ZpRational& t, unsigned e);

}  // namespace fsplit

#endif  // FSPLIT_FEDDER_HPP_
