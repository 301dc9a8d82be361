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

#include "fsplit/ext_poly.hpp"

#include <stdexcept>

namespace fsplit {

ExtPoly::ExtPoly(std::uint64_t p) : p_(p), coeffs_{ExtFieldElement(1, 0, p)} {}

ExtPoly::ExtPoly(std::uint64_t p, std::vector<ExtFieldElement> coeffs)
    : p_(p), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (c.modulus() != p_) throw std::invalid_argument("coefficient over a different prime");
  }
  Trim();
}

void ExtPoly::Trim() {
  while (!coeffs_.empty() && coeffs_.back().IsZero()) coeffs_.pop_back();
}

ExtPoly ExtPoly::LinearPower(const ExtFieldElement& root, std::uint64_t n) {
  const std::uint64_t p = root.modulus();
  std::vector<ExtFieldElement> coeffs;
  coeffs.reserve(n + 1);
  const ExtFieldElement minus_root = -root;
  // coefficient of x^k is C(n, k) (-root)^(n - k)
  std::vector<ExtFieldElement> powers{ExtFieldElement(1, 0, p)};
  powers.reserve(n + 1);
  for (std::uint64_t i = 1; i <= n; ++i) powers.push_back(powers.back() * minus_root);
  for (std::uint64_t k = 0; k <= n; ++k) {
    coeffs.push_back(powers[n - k] * ExtFieldElement(BinomModP(n, k, p)));
  }
  return ExtPoly(p, std::move(coeffs));
}

ExtFieldElement ExtPoly::Coeff(std::int64_t k) const {
  if (k < 0 || k > Degree()) return ExtFieldElement(0, 0, p_);
  return coeffs_[static_cast<std::size_t>(k)];
}

ExtPoly ExtPoly::operator*(const ExtPoly& rhs) const {
  if (p_ != rhs.p_) throw std::invalid_argument("polynomials over different primes");
  if (coeffs_.empty() || rhs.coeffs_.empty()) return ExtPoly(p_, {});
  // Schoolbook product on raw (a, b) pairs; reductions deferred per output slot.
  const std::uint64_t n = coeffs_.front().nonresidue();
  const std::size_t size = coeffs_.size() + rhs.coeffs_.size() - 1;
  std::vector<std::uint64_t> re(size, 0);
  std::vector<std::uint64_t> im(size, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const auto& x = coeffs_[i];
    if (x.IsZero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      const auto& y = rhs.coeffs_[j];
      const std::uint64_t ac = MulMod(x.a(), y.a(), p_);
      const std::uint64_t bd = MulMod(MulMod(x.b(), y.b(), p_), n, p_);
      const std::uint64_t ad = MulMod(x.a(), y.b(), p_);
      const std::uint64_t bc = MulMod(x.b(), y.a(), p_);
      re[i + j] = (re[i + j] + ac + bd) % p_;
      im[i + j] = (im[i + j] + ad + bc) % p_;
    }
  }
  std::vector<ExtFieldElement> out;
  out.reserve(size);
  for (std::size_t k = 0; k < size; ++k) {
    out.push_back(ExtFieldElement::WithNonresidue(re[k], im[k], p_, n));
  }
  return ExtPoly(p_, std::move(out));
}

ExtPoly ExtPoly::Pow(std::uint64_t n) const {
  ExtPoly result(p_);
  ExtPoly base = *this;
  while (n > 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

}  // namespace fsplit
