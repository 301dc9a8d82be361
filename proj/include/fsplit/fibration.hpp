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

#ifndef FSPLIT_FIBRATION_HPP_
#define FSPLIT_FIBRATION_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fsplit/arith.hpp"
#include "fsplit/gsplit.hpp"
#include "fsplit/mpoly.hpp"

// The Legendre elliptic surface y^2 z = x (x - z) (x - lambda z) over the
// lambda-line, studied one prime at a time.
namespace fsplit {

// Search limits shared by every decision procedure below.
struct Budgets {
  unsigned e_max = 2;
  std::size_t perturbation_budget = 4096;
  std::uint64_t bigraded_pmax = 13;
};

enum class FiberType { kNodal, kSmoothOrdinary, kSmoothSupersingular, kBoundaryInfinity };

std::string ToString(FiberType type);
FiberType ParseFiberType(const std::string& text);

struct FiberRow {
  P1Point point;
  FiberType type;
  ZpRational coeff;  // coefficient in the discriminant divisor

  bool operator==(const FiberRow&) const = default;
};

struct FDiscriminantReport {
  std::uint64_t prime = 0;
  P1Divisor divisor;
  std::vector<FiberRow> fiber_table;
  ZpRational degree;
  // deg(K + B) == -1 on the base.
  bool degree_identity = false;

  bool operator==(const FDiscriminantReport&) const = default;
};

// 1/2 (inf) + sum over supersingular lambda of mult / (p - 1) (lambda).
FDiscriminantReport FDiscriminantLegendre(std::uint64_t p);

// Rows for 0, 1, the supersingular points and infinity, sorted by point.
// Throws InvariantViolation if the support of the divisor away from
// {0, 1, inf} differs from the supersingular locus.
std::vector<FiberRow> ClassifyFibers(std::uint64_t p);
FiberType ClassifyFiber(const P1Point& point, std::uint64_t p);

// m y^2 z - x (x - z)(m x - l z) in variables x, y, z | l, m; bidegree (3, 1).
MPoly LegendreSurfaceEquation(std::uint64_t p);
std::vector<std::string> LegendreSurfaceVariables();

// Yes/No from the bigraded criterion; Unknown above budgets.bigraded_pmax.
VerdictStatus TotalSpaceGfs(std::uint64_t p, const Budgets& budgets);

struct CbfCheck {
  std::uint64_t prime = 0;
  VerdictStatus total = VerdictStatus::kUnknown;
  VerdictStatus base = VerdictStatus::kUnknown;
  bool decided = false;
  // Total space splits iff the base couple splits.
  bool agree = false;
};

CbfCheck CbfIiiCheck(std::uint64_t p, const Budgets& budgets);

// 1 iff the supersingular polynomial is not identically zero.
unsigned S0FiberFromHasse(const MPoly& hasse);
unsigned S0FiberLegendre(std::uint64_t p);

struct S0Dimensions {
  unsigned total;
  unsigned fiber;
};

// Product E x Y of elliptic curves: the total space splits iff both
// factors are ordinary; the fiber over a point of Y iff E is ordinary.
S0Dimensions S0Product(bool ordinary_fiber, bool ordinary_base);

struct Q0S0Result {
  unsigned q0 = 0;
  unsigned s0 = 0;
  std::vector<unsigned> levels;
  bool equal = false;
};

// Degree-2 couples on P^1. With K + B ~ 0 the only perturbation is D = 0,
// so Q0 is the image at the deepest tested level and S0 the intersection
// over all tested levels.
Q0S0Result Q0EqualsS0Check(const P1Divisor& boundary, const Budgets& budgets);

enum class KgfrStatus { kKgfr, kNotKgfr, kUnknown };

std::string ToString(KgfrStatus status);

struct KgfrVerdict {
  std::uint64_t prime = 0;
  bool fiber_gfs = false;
  GfrVerdict base_gfr;
  KgfrStatus overall = KgfrStatus::kUnknown;
};

KgfrVerdict IsKgfrLegendre(std::uint64_t p, const Budgets& budgets);

struct ScanReport {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::vector<KgfrVerdict> rows;  // ascending in p
  std::size_t kgfr = 0;
  std::size_t not_kgfr = 0;
  std::size_t unknown = 0;
};

// Odd primes in [lo, hi], processed by a pool of `threads` workers.
ScanReport PrimeScan(std::uint64_t lo, std::uint64_t hi, const Budgets& budgets, unsigned threads);

}  // namespace fsplit

#endif  // FSPLIT_FIBRATION_HPP_
