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

#include "fsplit/fibration.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <stdexcept>
#include <thread>

#include "fsplit/elliptic.hpp"

namespace fsplit {

std::string ToString(FiberType type) {
  switch (type) {
    case FiberType::kNodal:
      return "nodal";
    case FiberType::kSmoothOrdinary:
      return "smooth-ordinary";
    case FiberType::kSmoothSupersingular:
      return "smooth-supersingular";
    case FiberType::kBoundaryInfinity:
      return "boundary-infinity";
  }
  return "nodal";
}

FiberType ParseFiberType(const std::string& text) {
  for (auto type : {FiberType::kNodal, FiberType::kSmoothOrdinary, FiberType::kSmoothSupersingular,
                    FiberType::kBoundaryInfinity}) {
    if (ToString(type) == text) return type;
  }
  throw std::invalid_argument("unknown fiber type: " + text);
}

std::string ToString(KgfrStatus status) {
  switch (status) {
    case KgfrStatus::kKgfr:
      return "KGFR";
    case KgfrStatus::kNotKgfr:
      return "not-KGFR";
    case KgfrStatus::kUnknown:
      return "unknown";
  }
  return "unknown";
}

FDiscriminantReport FDiscriminantLegendre(std::uint64_t p) {
  const SupersingularReport ss = ComputeSupersingularReport(p);
  std::vector<DivisorEntry> entries;
  entries.push_back({P1Point::Infinity(), ZpRational(1, 2)});
  for (const auto& root : ss.roots) {
    entries.push_back({P1Point::Finite(root.value),
                       ZpRational(static_cast<std::int64_t>(root.multiplicity), static_cast<std::int64_t>(p - 1))});
  }
  P1Divisor divisor(p, std::move(entries));
  const ZpRational degree = divisor.Degree();
  std::vector<FiberRow> table;
  const ExtFieldElement zero(0, 0, p);
  const ExtFieldElement one(1, 0, p);
  table.push_back({P1Point::Finite(zero), FiberType::kNodal, divisor.CoeffAt(P1Point::Finite(zero))});
  table.push_back({P1Point::Finite(one), FiberType::kNodal, divisor.CoeffAt(P1Point::Finite(one))});
  for (const auto& root : ss.roots) {
    const P1Point point = P1Point::Finite(root.value);
    table.push_back({point, FiberType::kSmoothSupersingular, divisor.CoeffAt(point)});
  }
  table.push_back({P1Point::Infinity(), FiberType::kBoundaryInfinity, divisor.CoeffAt(P1Point::Infinity())});
  std::sort(table.begin(), table.end(), [](const FiberRow& x, const FiberRow& y) { return x.point < y.point; });
  const bool identity = ZpRational(-2) + degree == ZpRational(-1);
  return FDiscriminantReport{p, std::move(divisor), std::move(table), degree, identity};
}

FiberType ClassifyFiber(const P1Point& point, std::uint64_t p) {
  RequireOddPrime(p);
  if (point.IsInfinity()) return FiberType::kBoundaryInfinity;
  const ExtFieldElement& x = point.value();
  if (x.modulus() != p) throw std::invalid_argument("point over a different prime");
  if (x == ExtFieldElement(0, 0, p) || x == ExtFieldElement(1, 0, p)) return FiberType::kNodal;
  return HasseClosed(x).IsZero() ? FiberType::kSmoothSupersingular : FiberType::kSmoothOrdinary;
}

std::vector<FiberRow> ClassifyFibers(std::uint64_t p) {
  FDiscriminantReport report = FDiscriminantLegendre(p);
  for (const auto& entry : report.divisor.entries()) {
    const FiberType type = ClassifyFiber(entry.point, p);
    if (type != FiberType::kSmoothSupersingular && type != FiberType::kBoundaryInfinity) {
      throw InvariantViolation("discriminant supported on a " + ToString(type) + " fiber at " +
                               entry.point.ToString());
    }
  }
  for (const auto& row : report.fiber_table) {
    if (row.type != ClassifyFiber(row.point, p)) {
      throw InvariantViolation("fiber table disagrees with the Hasse invariant at " + row.point.ToString());
    }
  }
  return report.fiber_table;
}

std::vector<std::string> LegendreSurfaceVariables() { return {"x", "y", "z", "l", "m"}; }

MPoly LegendreSurfaceEquation(std::uint64_t p) {
  return ParsePoly("m*y^2*z - x*(x-z)*(m*x-l*z)", LegendreSurfaceVariables(), p);
}

VerdictStatus TotalSpaceGfs(std::uint64_t p, const Budgets& budgets) {
  RequireOddPrime(p);
  if (p > budgets.bigraded_pmax) return VerdictStatus::kUnknown;
  const std::size_t groups[2] = {3, 2};
  return GfsBigradedHypersurface(LegendreSurfaceEquation(p), groups).split ? VerdictStatus::kYes
                                                                          : VerdictStatus::kNo;
}

CbfCheck CbfIiiCheck(std::uint64_t p, const Budgets& budgets) {
  CbfCheck check;
  check.prime = p;
  check.total = TotalSpaceGfs(p, budgets);
  check.base = GfsP1(FDiscriminantLegendre(p).divisor, budgets.e_max).status;
  auto decided = [](VerdictStatus s) {
    return s == VerdictStatus::kYes || s == VerdictStatus::kNo || s == VerdictStatus::kCertifiedNo;
  };
  check.decided = decided(check.total) && decided(check.base);
  check.agree = check.decided && (check.total == VerdictStatus::kYes) == (check.base == VerdictStatus::kYes);
  return check;
}

unsigned S0FiberFromHasse(const MPoly& hasse) { return hasse.IsZero() ? 0 : 1; }

unsigned S0FiberLegendre(std::uint64_t p) {
  const MPoly hasse = HassePolynomialByExpansion(p);
  const unsigned dim = S0FiberFromHasse(hasse);
  if (dim != 1) throw InvariantViolation("supersingular polynomial vanishes identically");
  return dim;
}

S0Dimensions S0Product(bool ordinary_fiber, bool ordinary_base) {
  return {ordinary_fiber && ordinary_base ? 1u : 0u, ordinary_fiber ? 1u : 0u};
}

Q0S0Result Q0EqualsS0Check(const P1Divisor& boundary, const Budgets& budgets) {
  if (!(boundary.Degree() == ZpRational(2))) throw std::invalid_argument("expected a degree-2 boundary");
  const auto coeffs = boundary.Coefficients();
  const unsigned d = coeffs.empty() ? 1 : SplittingLevel(coeffs, boundary.prime());
  Q0S0Result result;
  for (unsigned e = d; e <= budgets.e_max; e += d) result.levels.push_back(e);
  if (result.levels.empty()) {
    throw std::invalid_argument("splitting level " + std::to_string(d) + " exceeds e_max");
  }
  bool all = true;
  bool last = false;
  for (unsigned e : result.levels) {
    last = GfsP1Level(boundary, e).split;
    all = all && last;
  }
  result.s0 = all ? 1 : 0;
  result.q0 = last ? 1 : 0;
  result.equal = result.s0 == result.q0;
  return result;
}

KgfrVerdict IsKgfrLegendre(std::uint64_t p, const Budgets& budgets) {
  KgfrVerdict verdict;
  verdict.prime = p;
  verdict.fiber_gfs = S0FiberLegendre(p) == 1;
  verdict.base_gfr = GfrP1Bounded(FDiscriminantLegendre(p).divisor, budgets.e_max, budgets.perturbation_budget);
  if (!verdict.fiber_gfs || verdict.base_gfr.status == VerdictStatus::kCertifiedNo) {
    verdict.overall = KgfrStatus::kNotKgfr;
  } else if (verdict.base_gfr.status == VerdictStatus::kYes) {
    verdict.overall = KgfrStatus::kKgfr;
  } else {
    verdict.overall = KgfrStatus::kUnknown;
  }
  return verdict;
}

ScanReport PrimeScan(std::uint64_t lo, std::uint64_t hi, const Budgets& budgets, unsigned threads) {
  ScanReport report;
  report.lo = lo;
  report.hi = hi;
  std::vector<std::uint64_t> primes;
  for (std::uint64_t n = std::max<std::uint64_t>(lo, 3); n <= hi; ++n) {
    if (IsPrime(n)) primes.push_back(n);
  }
  report.rows.resize(primes.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(primes.size());
  auto worker = [&] {
    for (std::size_t i = next++; i < primes.size(); i = next++) {
      try {
        report.rows[i] = IsKgfrLegendre(primes[i], budgets);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned count = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(primes.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
  for (const auto& row : report.rows) {
    switch (row.overall) {
      case KgfrStatus::kKgfr:
        ++report.kgfr;
        break;
      case KgfrStatus::kNotKgfr:
        ++report.not_kgfr;
        break;
      case KgfrStatus::kUnknown:
        ++report.unknown;
        break;
    }
  }
  return report;
}

}  // namespace fsplit
