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

#include "fsplit/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace fsplit {
namespace {

struct ExponentsHash {
  std::size_t operator()(const Exponents& e) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto x : e) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

using Accumulator = std::unordered_map<Exponents, std::uint64_t, ExponentsHash>;

MPoly::TermMap Collect(Accumulator&& acc) {
  MPoly::TermMap out;
  for (auto& [exps, c] : acc) {
    if (c != 0) out.emplace(exps, c);
  }
  return out;
}

}  // namespace

MPoly::MPoly(std::uint64_t p, std::size_t nvars) : p_(p), nvars_(nvars) {
  RequireOddPrime(p);
  if (nvars == 0) throw std::invalid_argument("polynomial needs at least one variable");
}

MPoly MPoly::Constant(std::uint64_t p, std::size_t nvars, std::int64_t c) {
  MPoly f(p, nvars);
  f.AddTerm(Exponents(nvars, 0), FieldElement(c, p));
  return f;
}

MPoly MPoly::Variable(std::uint64_t p, std::size_t nvars, std::size_t index) {
  if (index >= nvars) throw std::out_of_range("variable index out of range");
  Exponents e(nvars, 0);
  e[index] = 1;
  return Monomial(p, std::move(e));
}

MPoly MPoly::Monomial(std::uint64_t p, Exponents exps, std::int64_t c) {
  MPoly f(p, exps.size());
  f.AddTerm(exps, FieldElement(c, p));
  return f;
}

bool MPoly::IsConstant() const {
  return terms_.empty() ||
         (terms_.size() == 1 &&
          std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                      [](auto x) { return x == 0; }));
}

void MPoly::CheckCompatible(const MPoly& rhs) const {
  if (p_ != rhs.p_) throw std::invalid_argument("polynomials over different primes");
  if (nvars_ != rhs.nvars_) throw std::invalid_argument("polynomials with different arity");
}

FieldElement MPoly::Coeff(const Exponents& exps) const {
  if (exps.size() != nvars_) throw std::invalid_argument("exponent vector has wrong length");
  auto it = terms_.find(exps);
  return FieldElement::FromCanonical(it == terms_.end() ? 0 : it->second, p_);
}

FieldElement MPoly::ConstantTerm() const { return Coeff(Exponents(nvars_, 0)); }

void MPoly::AddTerm(const Exponents& exps, const FieldElement& c) {
  if (exps.size() != nvars_) throw std::invalid_argument("exponent vector has wrong length");
  if (c.modulus() != p_) throw std::invalid_argument("coefficient over a different prime");
  if (c.IsZero()) return;
  auto [it, inserted] = terms_.try_emplace(exps, c.value());
  if (!inserted) {
    it->second = (it->second + c.value()) % p_;
    if (it->second == 0) terms_.erase(it);
  }
}

std::uint64_t MPoly::TotalDegree() const {
  std::uint64_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max<std::uint64_t>(d, std::accumulate(e.begin(), e.end(), std::uint64_t{0}));
  return d;
}

std::uint64_t MPoly::Degree(std::size_t var) const {
  if (var >= nvars_) throw std::out_of_range("variable index out of range");
  std::uint64_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

bool MPoly::IsHomogeneous() const {
  const std::size_t all[] = {nvars_};
  return MultiDegree(all).has_value();
}

std::optional<std::vector<std::uint64_t>> MPoly::MultiDegree(
    std::span<const std::size_t> group_sizes) const {
  if (std::accumulate(group_sizes.begin(), group_sizes.end(), std::size_t{0}) != nvars_) {
    throw std::invalid_argument("variable groups do not cover all variables");
  }
  std::optional<std::vector<std::uint64_t>> degrees;
  for (const auto& [e, c] : terms_) {
    std::vector<std::uint64_t> d;
    std::size_t offset = 0;
    for (auto size : group_sizes) {
      d.push_back(std::accumulate(e.begin() + offset, e.begin() + offset + size, std::uint64_t{0}));
      offset += size;
    }
    if (!degrees) {
      degrees = std::move(d);
    } else if (*degrees != d) {
      return std::nullopt;
    }
  }
  if (!degrees) degrees = std::vector<std::uint64_t>(group_sizes.size(), 0);
  return degrees;
}

MPoly MPoly::operator+(const MPoly& rhs) const {
  CheckCompatible(rhs);
  MPoly out = *this;
  for (const auto& [e, c] : rhs.terms_) out.AddTerm(e, FieldElement::FromCanonical(c, p_));
  return out;
}

MPoly MPoly::operator-(const MPoly& rhs) const { return *this + (-rhs); }

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& [e, c] : out.terms_) c = p_ - c;
  return out;
}

MPoly MPoly::Scale(const FieldElement& c) const {
  if (c.modulus() != p_) throw std::invalid_argument("scalar over a different prime");
  MPoly out(p_, nvars_);
  if (c.IsZero()) return out;
  out.terms_ = terms_;
  for (auto& [e, v] : out.terms_) v = MulMod(v, c.value(), p_);
  return out;
}

MPoly MPoly::operator*(const MPoly& rhs) const {
  return MulTruncated(rhs, 0);
}

MPoly MPoly::MulTruncated(const MPoly& rhs, std::uint64_t box) const {
  CheckCompatible(rhs);
  Accumulator acc;
  acc.reserve(terms_.size() * rhs.terms_.size());
  Exponents e(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      bool keep = true;
      for (std::size_t i = 0; i < nvars_; ++i) {
        e[i] = ea[i] + eb[i];
        if (box != 0 && e[i] >= box) {
          keep = false;
          break;
        }
      }
      if (!keep) continue;
      auto& slot = acc[e];
      slot = (slot + MulMod(ca, cb, p_)) % p_;
    }
  }
  MPoly out(p_, nvars_);
  out.terms_ = Collect(std::move(acc));
  return out;
}

MPoly MPoly::TruncateBox(std::uint64_t box) const {
  MPoly out(p_, nvars_);
  for (const auto& [e, c] : terms_) {
    if (std::all_of(e.begin(), e.end(), [box](auto x) { return x < box; })) out.terms_.emplace(e, c);
  }
  return out;
}

MPoly MPoly::PowTruncated(std::uint64_t n, std::uint64_t box) const {
  MPoly result = Constant(p_, nvars_, 1);
  if (box != 0) result = result.TruncateBox(box);
  MPoly base = box != 0 ? TruncateBox(box) : *this;
  while (n > 0) {
    if (n & 1) result = result.MulTruncated(base, box);
    n >>= 1;
    if (n > 0) base = base.MulTruncated(base, box);
  }
  return result;
}

MPoly MPoly::Pow(std::uint64_t n) const { return PowTruncated(n, 0); }

MPoly MPoly::FrobeniusTwist(unsigned i) const {
  const std::uint64_t scale = IntPow(p_, i);
  MPoly out(p_, nvars_);
  for (const auto& [e, c] : terms_) {
    Exponents scaled = e;
    for (auto& x : scaled) x *= scale;
    out.terms_.emplace(std::move(scaled), c);
  }
  return out;
}

MPoly MPoly::PowerQm1(unsigned e) const {
  if (e == 0) throw std::invalid_argument("power_qm1 needs e >= 1");
  const MPoly base = Pow(p_ - 1);
  MPoly result = base;
  for (unsigned i = 1; i < e; ++i) result *= base.FrobeniusTwist(i);
  return result;
}

ExtFieldElement MPoly::EvaluateUnivariate(const ExtFieldElement& x) const {
  if (nvars_ != 1) throw std::invalid_argument("univariate evaluation of a multivariate polynomial");
  if (x.modulus() != p_) throw std::invalid_argument("evaluation point over a different prime");
  const std::uint64_t n = x.nonresidue();
  ExtFieldElement acc = ExtFieldElement::WithNonresidue(0, 0, p_, n);
  ExtFieldElement power = ExtFieldElement::WithNonresidue(1, 0, p_, n);
  std::uint64_t last = 0;
  for (const auto& [e, c] : terms_) {
    power *= x.Pow(e[0] - last);
    last = e[0];
    acc += power * ExtFieldElement::WithNonresidue(c, 0, p_, n);
  }
  return acc;
}

// Univariate helpers ---------------------------------------------------------

namespace {

using Dense = std::vector<std::uint64_t>;

void Trim(Dense& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Dense DenseOf(const MPoly& f) {
  if (f.nvars() != 1) throw std::invalid_argument("expected a univariate polynomial");
  if (f.IsZero()) throw std::invalid_argument("zero polynomial");
  Dense out(f.Degree(0) + 1, 0);
  for (const auto& [e, c] : f.terms()) out[e[0]] = c;
  return out;
}

// Remainder of a modulo b (b nonzero, trimmed).
Dense Remainder(Dense a, const Dense& b, std::uint64_t p) {
  const std::uint64_t lead_inv = PowMod(b.back(), p - 2, p);
  while (a.size() >= b.size()) {
    const std::uint64_t factor = MulMod(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      a[shift + i] = (a[shift + i] + p - MulMod(factor, b[i], p)) % p;
    }
    Trim(a);
  }
  return a;
}

}  // namespace

std::vector<FieldElement> ToDense(const MPoly& f) {
  std::vector<FieldElement> out;
  for (auto c : DenseOf(f)) out.push_back(FieldElement::FromCanonical(c, f.prime()));
  return out;
}

MPoly FromDense(std::span<const FieldElement> coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("empty coefficient list");
  MPoly f(coeffs.front().modulus(), 1);
  for (std::size_t i = 0; i < coeffs.size(); ++i) f.AddTerm({i}, coeffs[i]);
  return f;
}

bool UnivSquarefree(const MPoly& f) {
  const std::uint64_t p = f.prime();
  Dense a = DenseOf(f);
  Dense b(a.size() > 1 ? a.size() - 1 : 0, 0);
  for (std::size_t i = 1; i < a.size(); ++i) b[i - 1] = MulMod(a[i], i % p, p);
  Trim(b);
  if (b.empty()) return a.size() == 1;  // constant, or a p-th power when deg > 0
  while (!b.empty()) {
    Dense r = Remainder(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a.size() == 1;
}

std::vector<UnivRoot> UnivRoots(const MPoly& f, int level) {
  if (level != 1 && level != 2) throw std::invalid_argument("root level must be 1 or 2");
  const std::uint64_t p = f.prime();
  const Dense dense = DenseOf(f);
  const std::uint64_t n = SmallestNonresidue(p);
  // Coefficients as (a, b) pairs over F_{p^2}.
  using Pair = std::pair<std::uint64_t, std::uint64_t>;
  auto mul = [p, n](Pair x, Pair y) -> Pair {
    return {(MulMod(x.first, y.first, p) + MulMod(MulMod(x.second, y.second, p), n, p)) % p,
            (MulMod(x.first, y.second, p) + MulMod(x.second, y.first, p)) % p};
  };
  std::vector<UnivRoot> roots;
  const std::uint64_t b_max = level == 1 ? 1 : p;
  for (std::uint64_t ra = 0; ra < p; ++ra) {
    for (std::uint64_t rb = 0; rb < b_max; ++rb) {
      const Pair r{ra, rb};
      std::vector<Pair> poly;
      for (auto c : dense) poly.push_back({c, 0});
      unsigned multiplicity = 0;
      // Synthetic division by (x - r) while the remainder vanishes.
      while (poly.size() > 1) {
        std::vector<Pair> quotient(poly.size() - 1);
        Pair carry{0, 0};
        for (std::size_t i = poly.size(); i-- > 1;) {
          const Pair m = mul(carry, r);
          carry = {(poly[i].first + m.first) % p, (poly[i].second + m.second) % p};
          quotient[i - 1] = carry;
        }
        const Pair m = mul(carry, r);
        const Pair remainder{(poly[0].first + m.first) % p, (poly[0].second + m.second) % p};
        if (remainder.first != 0 || remainder.second != 0) break;
        ++multiplicity;
        poly = std::move(quotient);
      }
      if (multiplicity > 0) {
        roots.push_back({ExtFieldElement::WithNonresidue(ra, rb, p, n), multiplicity});
      }
    }
  }
  return roots;
}

}  // namespace fsplit
