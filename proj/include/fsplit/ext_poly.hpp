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

#ifndef FSPLIT_EXT_POLY_HPP_
#define FSPLIT_EXT_POLY_HPP_

#include <cstdint>
#include <vector>

#include "fsplit/arith.hpp"

namespace fsplit {

// Dense univariate polynomial over F_{p^2}; index = degree. Used for the
// one-variable computations on P^1 where support points may leave F_p.
class ExtPoly {
 public:
  explicit ExtPoly(std::uint64_t p);  // the constant 1
  ExtPoly(std::uint64_t p, std::vector<ExtFieldElement> coeffs);

  // (x - root)^n, expanded with Lucas binomials.
  static ExtPoly LinearPower(const ExtFieldElement& root, std::uint64_t n);

  std::uint64_t prime() const { return p_; }
  // -1 for the zero polynomial.
  std::int64_t Degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  // Zero outside the stored range (including negative k).
  ExtFieldElement Coeff(std::int64_t k) const;
  const std::vector<ExtFieldElement>& coeffs() const { return coeffs_; }

  ExtPoly operator*(const ExtPoly& rhs) const;
  ExtPoly Pow(std::uint64_t n) const;

 private:
  void Trim();

  std::uint64_t p_;
  std::vector<ExtFieldElement> coeffs_;
};

}  // namespace fsplit

#endif  // FSPLIT_EXT_POLY_HPP_
