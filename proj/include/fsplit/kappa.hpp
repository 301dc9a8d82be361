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

#ifndef FSPLIT_KAPPA_HPP_
#define FSPLIT_KAPPA_HPP_

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "fsplit/arith.hpp"

namespace fsplit {

// Section counts on a curve are only degree-determined away from the band
// [0, 2g - 2]; degree 0 additionally depends on whether the bundle is trivial.
enum class DegreeZeroKind { kUnspecified, kGeneric, kTrivial };

struct H0Interval {
  std::int64_t m = 0;
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;

  bool Exact() const { return lower == upper; }
  bool operator==(const H0Interval&) const = default;
};

// Riemann-Roch below and Clifford above.
H0Interval H0Curve(unsigned genus, std::int64_t degree, DegreeZeroKind kind = DegreeZeroKind::kUnspecified);

// h0(mL) = multiplier * sum_{k=0}^{floor(k_slope m)} h0(C, deg_m m + deg_k k + deg_c)
// on a curve C of the given genus. Covers a single line bundle on a curve
// (k_slope = 0) and symmetric powers of rank-2 bundles on ruled surfaces.
struct DegreeLadder {
  unsigned genus = 0;
  Rational k_slope = 0;
  std::int64_t deg_m = 0;
  std::int64_t deg_k = 0;
  std::int64_t deg_c = 0;
  DegreeZeroKind zero_kind = DegreeZeroKind::kUnspecified;
  std::uint64_t multiplier = 1;

  std::uint64_t KMax(std::int64_t m) const;
  std::int64_t SummandDegree(std::int64_t m, std::uint64_t k) const;
  H0Interval Evaluate(std::int64_t m) const;
};

// Ruled surface P(O + O(-K_Y - D)) over a curve Y of genus g >= 2 with
// deg D = d_D > 2g - 2. With -K_X = 2 xi + pi^* D, the summand k of
// Sym^{2m} has degree m d_D - k (2g - 2 + d_D).
DegreeLadder RuledAnticanonicalLadder(unsigned genus, std::int64_t d_D);
H0Interval H0RuledAnticanonical(unsigned genus, std::int64_t d_D, std::int64_t m);

// Largest k whose summand can have sections, and (2m - k_max)/m.
std::uint64_t RuledKMax(unsigned genus, std::int64_t d_D, std::int64_t m);
Rational RuledFixedPartBound(unsigned genus, std::int64_t d_D, std::int64_t m);

// Iitaka dimension: -infinity or a growth order 0, 1, 2.
struct KappaValue {
  bool negative_infinity = false;
  int order = 0;

  static KappaValue NegInf() { return {true, 0}; }
  static KappaValue Order(int d) { return {false, d}; }
  std::string ToString() const;
  static KappaValue Parse(const std::string& text);
  bool operator==(const KappaValue&) const = default;
};

KappaValue operator+(const KappaValue& a, const KappaValue& b);
bool operator<=(const KappaValue& a, const KappaValue& b);

struct KappaResult {
  KappaValue value;
  bool certified = false;
  // When uncertified: the range the data allows.
  KappaValue lower;
  KappaValue upper;
  std::vector<H0Interval> evidence;  // m = 1..m_max
  std::string reason;
};

// Certifies from the affine degree formulas, then checks the computed
// h0 table against the claimed growth order.
KappaResult KappaEstimate(const DegreeLadder& ladder, std::int64_t m_max);

struct CatalogEntry {
  std::string case_id;
  KappaValue kappa_total;
  KappaValue kappa_fiber;
  KappaValue kappa_base;
  std::string inequality;       // holds | fails
  std::string equality;         // yes | no
  std::string fixed_part_flag;  // fired | not-fired
  std::string provenance;
};

// Whitespace-separated rows in the column order of CatalogEntry; '#' starts
// a comment.
std::vector<CatalogEntry> ParseCatalog(std::istream& in);
const std::vector<CatalogEntry>& DefaultCatalog();

struct SuperadditivityReport {
  std::string case_id;
  std::int64_t m_max = 0;
  KappaResult total;
  KappaResult fiber;
  KappaResult base;
  bool inconclusive = false;
  bool inequality_holds = false;
  bool equality = false;
  std::optional<Rational> fixed_part_bound;
  bool fixed_part_flag = false;
  std::optional<bool> kgfr;
  std::optional<CatalogEntry> expected;
  std::vector<std::string> mismatches;
};

// Case ids: legendre:p=P, ruled:g=G,d=D, product:ordinary, product:supersingular.
SuperadditivityReport CheckSuperadditivity(const std::string& case_id,
                                           const std::vector<CatalogEntry>& registry,
                                           std::int64_t m_max = 20);

}  // namespace fsplit

#endif  // FSPLIT_KAPPA_HPP_
