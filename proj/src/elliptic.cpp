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

#include <stdexcept>

#include "fsplit/ext_poly.hpp"

namespace fsplit {
namespace {

ExtFieldElement RequireCurveParameter(const ExtFieldElement& lambda) {
  RequireOddPrime(lambda.modulus());
  const std::uint64_t p = lambda.modulus();
  if (lambda == ExtFieldElement(0, 0, p) || lambda == ExtFieldElement(1, 0, p)) {
    throw std::invalid_argument("lambda must avoid 0 and 1");
  }
  return lambda;
}

}  // namespace

LegendreCurve::LegendreCurve(const ExtFieldElement& lambda) : lambda_(RequireCurveParameter(lambda)) {}

ExtFieldElement HasseClosed(const ExtFieldElement& lambda) {
  RequireCurveParameter(lambda);
  const std::uint64_t p = lambda.modulus();
  const std::uint64_t m = (p - 1) / 2;
  ExtFieldElement sum(0, 0, p);
  ExtFieldElement power(1, 0, p);
  for (std::uint64_t i = 0; i <= m; ++i) {
    const FieldElement c = BinomModP(m, i, p);
    sum += power * ExtFieldElement(c * c);
    power *= lambda;
  }
  return m % 2 == 0 ? sum : -sum;
}

ExtFieldElement HasseCoeff(const ExtFieldElement& lambda) {
  RequireCurveParameter(lambda);
  const std::uint64_t p = lambda.modulus();
  const ExtFieldElement zero(0, 0, p);
  const ExtFieldElement one(1, 0, p);
  const ExtPoly cubic =
      ExtPoly::LinearPower(zero, 1) * ExtPoly::LinearPower(one, 1) * ExtPoly::LinearPower(lambda, 1);
  return cubic.Pow((p - 1) / 2).Coeff(static_cast<std::int64_t>(p - 1));
}

MPoly HassePolynomialClosed(std::uint64_t p) {
  RequireOddPrime(p);
  const std::uint64_t m = (p - 1) / 2;
  MPoly out(p, 1);
  for (std::uint64_t i = 0; i <= m; ++i) {
    const FieldElement c = BinomModP(m, i, p);
    out.AddTerm({i}, m % 2 == 0 ? c * c : -(c * c));
  }
  return out;
}

MPoly HassePolynomialByExpansion(std::uint64_t p) {
  RequireOddPrime(p);
  const std::vector<std::string> vars{"x", "l"};
  const MPoly cubic = ParsePoly("x*(x-1)*(x-l)", vars, p);
  const MPoly power = cubic.Pow((p - 1) / 2);
  MPoly out(p, 1);
  for (const auto& [exps, c] : power.terms()) {
    if (exps[0] == p - 1) out.AddTerm({exps[1]}, FieldElement::FromCanonical(c, p));
  }
  return out;
}

std::int64_t CountPoints(const LegendreCurve& curve) {
  if (!curve.lambda().InBaseField()) throw std::invalid_argument("point count needs lambda in F_p");
  const std::uint64_t p = curve.prime();
  const FieldElement lambda = curve.lambda().BasePart();
  std::int64_t count = static_cast<std::int64_t>(p) + 1;
  for (std::uint64_t x = 0; x < p; ++x) {
    const FieldElement fx = FieldElement::FromCanonical(x, p);
    count += (fx * (fx - FieldElement(1, p)) * (fx - lambda)).QuadraticCharacter();
  }
  return count;
}

bool IsSupersingularByCount(const LegendreCurve& curve) {
  if (curve.prime() < 5) throw std::invalid_argument("point counts decide supersingularity only for p >= 5");
  return CountPoints(curve) == static_cast<std::int64_t>(curve.prime()) + 1;
}

bool IsOrdinary(const LegendreCurve& curve) { return !HasseClosed(curve.lambda()).IsZero(); }

SupersingularReport ComputeSupersingularReport(std::uint64_t p) {
  RequireOddPrime(p);
  SupersingularReport report{p, HassePolynomialByExpansion(p), {}, false, 0, false};
  report.closed_form_agrees = report.poly == HassePolynomialClosed(p);
  report.squarefree = UnivSquarefree(report.poly);
  report.roots = UnivRoots(report.poly, 2);
  for (const auto& root : report.roots) report.root_count += root.multiplicity;
  return report;
}

CurveKgfrVerdict ClassifyCurveKgfr(const CurveDescriptor& descriptor) {
  if (descriptor.genus == 0) return {true, "projective line"};
  if (descriptor.genus == 1) {
    if (!descriptor.curve) throw std::invalid_argument("genus 1 needs a Legendre parameter");
    if (IsOrdinary(*descriptor.curve)) return {true, "ordinary elliptic curve"};
    return {false, "supersingular elliptic curve"};
  }
  return {false, "genus at least 2: anticanonical class not effective"};
}

std::vector<HasseRow> HasseTable(std::uint64_t p) {
  RequireOddPrime(p);
  std::vector<HasseRow> rows;
  for (std::uint64_t l = 2; l < p; ++l) {
    const LegendreCurve curve(ExtFieldElement(l, 0, p));
    const ExtFieldElement hasse = HasseClosed(curve.lambda());
    rows.push_back({p, l, hasse.a(), CountPoints(curve), !hasse.IsZero()});
  }
  return rows;
}

void WriteHasseCsv(std::ostream& out, const std::vector<HasseRow>& rows) {
  out << "p,lambda,hasse,count,ordinary\n";
  for (const auto& row : rows) {
    out << row.prime << ',' << row.lambda << ',' << row.hasse << ',' << row.count << ','
        << (row.ordinary ? "true" : "false") << '\n';
  }
}

}  // namespace fsplit
