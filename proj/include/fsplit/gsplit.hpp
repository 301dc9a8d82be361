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

#ifndef FSPLIT_GSPLIT_HPP_
#define FSPLIT_GSPLIT_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fsplit/arith.hpp"
#include "fsplit/mpoly.hpp"

namespace fsplit {

// Closed point of P^1 over F_{p^2}: a finite coordinate or infinity.
class P1Point {
 public:
  static P1Point Infinity() { return P1Point(); }
  static P1Point Finite(const ExtFieldElement& value) { return P1Point(value); }
  static P1Point Finite(const FieldElement& value) { return P1Point(ExtFieldElement(value)); }

  bool IsInfinity() const { return !value_.has_value(); }
  // Throws std::logic_error at infinity.
  const ExtFieldElement& value() const;
  // 1 for points of P^1(F_p), 2 otherwise.
  int Level() const { return IsInfinity() ? 1 : value_->Level(); }

  // "inf", or the coordinate as printed by ExtFieldElement.
  std::string ToString() const;
  // Accepts "inf", "a", "a+bt", "bt", "t" (integers reduced mod p).
  static P1Point Parse(const std::string& text, std::uint64_t p);

  bool operator==(const P1Point& rhs) const = default;
  // Finite points by (a, b), infinity last.
  std::strong_ordering operator<=>(const P1Point& rhs) const;

 private:
  P1Point() = default;
  explicit P1Point(const ExtFieldElement& value) : value_(value) {}

  std::optional<ExtFieldElement> value_;
};

struct DivisorEntry {
  P1Point point;
  ZpRational coeff;
};

// Formal Z_(p)-divisor on P^1. Entries are kept sorted with infinity last;
// zero coefficients are dropped.
class P1Divisor {
 public:
  explicit P1Divisor(std::uint64_t p);
  // Throws std::invalid_argument on repeated points and ZpViolation on
  // denominators divisible by p.
  P1Divisor(std::uint64_t p, std::vector<DivisorEntry> entries);

  std::uint64_t prime() const { return p_; }
  const std::vector<DivisorEntry>& entries() const { return entries_; }
  bool IsZero() const { return entries_.empty(); }

  ZpRational Degree() const;
  ZpRational CoeffAt(const P1Point& point) const;
  std::vector<ZpRational> Coefficients() const;
  // Copy with c added to the coefficient at the point.
  P1Divisor Plus(const P1Point& point, const ZpRational& c) const;

  // Comma-separated "coeff@point" list, e.g. "1/2@0,1/2@1,1/2@inf".
  std::string ToString() const;
  static P1Divisor Parse(const std::string& text, std::uint64_t p);

  bool operator==(const P1Divisor& rhs) const;

 private:
  void Normalize();

  std::uint64_t p_;
  std::vector<DivisorEntry> entries_;
};

enum class VerdictStatus { kYes, kNo, kCertifiedNo, kUnknown };

std::string ToString(VerdictStatus status);

// A splitting section at level e: the monomial multiplier x^j pairs with
// g(x) = prod (x - a_i)^{n_i}; the trace reads a nonzero coefficient.
struct SplittingCertificate {
  unsigned level = 0;
  std::uint64_t q = 0;
  std::uint64_t j = 0;
  // coeff of x^{q-1-j} in g; absent when a generic point was involved.
  std::optional<ExtFieldElement> coefficient;
};

struct LevelResult {
  bool split = false;
  unsigned level = 0;
  // 2(q-1) - n_inf - sum n_i; negative means no admissible sections.
  std::int64_t budget = 0;
  std::optional<SplittingCertificate> certificate;
};

struct GfsVerdict {
  VerdictStatus status = VerdictStatus::kUnknown;
  std::optional<SplittingCertificate> certificate;
  std::vector<unsigned> levels_tested;
  std::string reason;
};

// Splitting test at one level. Requires (p^e - 1) B integral and every
// coefficient in [0, 1].
LevelResult GfsP1Level(const P1Divisor& boundary, unsigned e);

// Tries levels d, 2d, ... <= e_max where d is the splitting level of B.
GfsVerdict GfsP1(const P1Divisor& boundary, unsigned e_max);

// Recomputes the certified coefficient and budget from scratch.
bool ReplayCertificate(const P1Divisor& boundary, const SplittingCertificate& certificate);

// One test perturbation B + (point)/(p^e - 1) and the level that split it.
struct PerturbationCertificate {
  // nullopt stands for the generic point.
  std::optional<P1Point> point;
  SplittingCertificate certificate;
};

struct GfrVerdict {
  VerdictStatus status = VerdictStatus::kUnknown;
  std::string reason;
  std::size_t family_size = 0;
  std::size_t budget = 0;
  unsigned e_max = 0;
  std::vector<PerturbationCertificate> certificates;
  // First perturbation with no splitting level found, if any.
  std::optional<std::string> undecided_point;
};

// Bounded global F-regularity test on P^1: every point of P^1(F_{p^2}) and a
// symbolic generic point must split B + (point)/(p^e - 1) at some level
// e <= e_max. Unknown when the family exceeds the budget or a perturbation
// stays unsplit.
GfrVerdict GfrP1Bounded(const P1Divisor& boundary, unsigned e_max, std::size_t perturbation_budget);

// Same splitting test with one extra boundary point (x - t) for an
// indeterminate t, of coefficient generic_coeff. Exposed for testing.
LevelResult GfsP1LevelWithGeneric(const P1Divisor& boundary, const ZpRational& generic_coeff,
                                  unsigned e);

// Degree-(n+1) form in n+1 variables: coefficient of (x_0...x_n)^{p-1} in
// F^{p-1} is nonzero.
bool GfsCyHypersurface(const MPoly& form);

struct BigradedResult {
  bool split = false;
  std::uint64_t degree_first = 0;
  std::uint64_t degree_second = 0;
  // Surviving monomial of F^{p-1} with every exponent <= p - 1.
  std::optional<Exponents> witness;
  // When the first-group degree is maximal: the coefficient of the
  // first-group diagonal monomial, as a form in the second group.
  std::optional<MPoly> window_form;
};

// Hypersurface in P^m x P^n given by a bihomogeneous form. group_sizes
// holds (m + 1, n + 1). Throws if the form is not bihomogeneous or its
// bidegree exceeds (m + 1, n + 1).
BigradedResult GfsBigradedHypersurface(const MPoly& form, std::span<const std::size_t> group_sizes);

enum class CoverKind { kSquare, kLegendre };

struct CoverMap {
  CoverKind kind = CoverKind::kSquare;
  // Branch parameter of the Legendre cover y^2 = x(x-1)(x-lambda).
  std::optional<ExtFieldElement> lambda;
};

struct CoverCheckResult {
  bool diagram_commutes = false;
  std::uint64_t basis_checked = 0;
  P1Divisor source_boundary;
  P1Divisor target_boundary;
  bool source_gfs = false;
  bool target_gfs = false;
  bool verdicts_agree = false;
};

// Checks Tr o C_source = C_target o Tr on monomial differentials of degree
// in [-4q, 4q], and compares splitting of the source and target couples.
// For the square cover u -> u^2, B_source = pullback - ramification must be
// effective. For the Legendre cover the target must be the branch divisor
// 1/2 (0 + 1 + lambda + inf).
CoverCheckResult PushforwardSplittingCheck(const CoverMap& cover, const P1Divisor& target,
                                           unsigned e);

}  // namespace fsplit

#endif  // FSPLIT_GSPLIT_HPP_
