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

#ifndef FSPLIT_ELLIPTIC_HPP_
#define FSPLIT_ELLIPTIC_HPP_

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "fsplit/arith.hpp"
#include "fsplit/mpoly.hpp"

namespace fsplit {

// y^2 = x (x - 1) (x - lambda) with lambda in F_{p^2} \ {0, 1}.
class LegendreCurve {
 public:
  explicit LegendreCurve(const ExtFieldElement& lambda);

  const ExtFieldElement& lambda() const { return lambda_; }
  std::uint64_t prime() const { return lambda_.modulus(); }

 private:
  ExtFieldElement lambda_;
};

// (-1)^m sum_i C(m, i)^2 lambda^i with m = (p - 1)/2.
ExtFieldElement HasseClosed(const ExtFieldElement& lambda);
// Coefficient of x^{p-1} in (x (x - 1) (x - lambda))^{(p-1)/2}.
ExtFieldElement HasseCoeff(const ExtFieldElement& lambda);

// The supersingular polynomial H_p(lambda) in one variable, by the binomial
// closed form and by coefficient extraction over F_p[x, lambda].
MPoly HassePolynomialClosed(std::uint64_t p);
MPoly HassePolynomialByExpansion(std::uint64_t p);

// #E(F_p) = p + 1 + sum_x chi(x (x - 1) (x - lambda)). Requires lambda in F_p.
std::int64_t CountPoints(const LegendreCurve& curve);
// a_p = 0, valid only for p >= 5; throws std::invalid_argument at p = 3.
bool IsSupersingularByCount(const LegendreCurve& curve);
bool IsOrdinary(const LegendreCurve& curve);

struct SupersingularReport {
  std::uint64_t prime = 0;
  MPoly poly;
  std::vector<UnivRoot> roots;  // over F_{p^2}
  bool squarefree = false;
  std::uint64_t root_count = 0;  // with multiplicity
  bool closed_form_agrees = false;
};

SupersingularReport ComputeSupersingularReport(std::uint64_t p);

struct CurveDescriptor {
  unsigned genus = 0;
  std::optional<LegendreCurve> curve;  // required for genus 1
};

struct CurveKgfrVerdict {
  bool kgfr = false;
  std::string reason;
};

CurveKgfrVerdict ClassifyCurveKgfr(const CurveDescriptor& descriptor);

struct HasseRow {
  std::uint64_t prime;
  std::uint64_t lambda;
  std::uint64_t hasse;
  std::int64_t count;
  bool ordinary;
};

// One row per lambda in F_p \ {0, 1}.
std::vector<HasseRow> HasseTable(std::uint64_t p);
void WriteHasseCsv(std::ostream& out, const std::vector<HasseRow>& rows);

}  // namespace fsplit

#endif  // FSPLIT_ELLIPTIC_HPP_
