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

#ifndef FSPLIT_MPOLY_HPP_
#define FSPLIT_MPOLY_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fsplit/arith.hpp"

namespace fsplit {

using Exponents = std::vector<std::uint64_t>;

// Sparse polynomial in a fixed number of variables over F_p. Terms are kept
// in a map ordered lexicographically by exponent vector; zero coefficients
// are never stored.
class MPoly {
 public:
  using TermMap = std::map<Exponents, std::uint64_t>;

  MPoly(std::uint64_t p, std::size_t nvars);

  static MPoly Constant(std::uint64_t p, std::size_t nvars, std::int64_t c);
  static MPoly Variable(std::uint64_t p, std::size_t nvars, std::size_t index);
  static MPoly Monomial(std::uint64_t p, Exponents exps, std::int64_t c = 1);

  std::uint64_t prime() const { return p_; }
  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool IsZero() const { return terms_.empty(); }
  bool IsConstant() const;

  FieldElement Coeff(const Exponents& exps) const;
  FieldElement ConstantTerm() const;
  // Adds c to the coefficient of the given monomial.
  void AddTerm(const Exponents& exps, const FieldElement& c);

  // Maximum total degree; 0 for constants and the zero polynomial.
  std::uint64_t TotalDegree() const;
  std::uint64_t Degree(std::size_t var) const;
  bool IsHomogeneous() const;
  // Returns the common degree of every term in each group, if there is one.
  // `group_sizes` must sum to nvars.
  std::optional<std::vector<std::uint64_t>> MultiDegree(std::span<const std::size_t> group_sizes) const;

  MPoly operator+(const MPoly& rhs) const;
  MPoly operator-(const MPoly& rhs) const;
  MPoly operator*(const MPoly& rhs) const;
  MPoly operator-() const;
  MPoly& operator+=(const MPoly& rhs) { return *this = *this + rhs; }
  MPoly& operator-=(const MPoly& rhs) { return *this = *this - rhs; }
  MPoly& operator*=(const MPoly& rhs) { return *this = *this * rhs; }
  MPoly Scale(const FieldElement& c) const;

  MPoly Pow(std::uint64_t n) const;

  // Drops every monomial with some exponent >= box.
  MPoly TruncateBox(std::uint64_t box) const;
  // Product with monomials outside [0, box)^n discarded on the fly. The
  // discarded part lies in the monomial ideal (x_1^box, ..., x_n^box), so
  // this is exact modulo that ideal. box == 0 disables truncation.
  MPoly MulTruncated(const MPoly& rhs, std::uint64_t box) const;
  MPoly PowTruncated(std::uint64_t n, std::uint64_t box) const;

  // Scales every exponent by p^i; coefficients are fixed (they lie in F_p).
  MPoly FrobeniusTwist(unsigned i) const;
  // f^(p^e - 1) as prod_{i<e} twist_i(f^(p-1)).
  MPoly PowerQm1(unsigned e) const;

  // Univariate evaluation over F_{p^2}.
  ExtFieldElement EvaluateUnivariate(const ExtFieldElement& x) const;

  bool operator==(const MPoly& rhs) const = default;

 private:
  void CheckCompatible(const MPoly& rhs) const;

  std::uint64_t p_;
  std::size_t nvars_;
  TermMap terms_;
};

// Dense univariate coefficient vector (index = degree) of a univariate MPoly.
std::vector<FieldElement> ToDense(const MPoly& f);
MPoly FromDense(std::span<const FieldElement> coeffs);

// True iff gcd(f, f') is constant.
bool UnivSquarefree(const MPoly& f);

struct UnivRoot {
  ExtFieldElement value;
  unsigned multiplicity;
};

// Roots of a univariate F_p-polynomial in F_p (level 1) or F_{p^2} (level 2),
// by exhaustive scan; multiplicities by repeated synthetic division. Sorted
// by (a, b).
std::vector<UnivRoot> UnivRoots(const MPoly& f, int level);

// Text grammar: integers, declared variable names, + - * ^ and parentheses.
MPoly ParsePoly(const std::string& text, const std::vector<std::string>& vars, std::uint64_t p);
// Canonical printing: terms in decreasing lexicographic exponent order,
// coefficients as representatives in [0, p). ParsePoly inverts it exactly.
std::string FormatPoly(const MPoly& f, const std::vector<std::string>& vars);

}  // namespace fsplit

#endif  // FSPLIT_MPOLY_HPP_
