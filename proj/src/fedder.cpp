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

#include "fsplit/fedder.hpp"

#include <algorithm>
#include <stdexcept>

namespace fsplit {
namespace {

void RequirePowerOfP(std::uint64_t q, std::uint64_t p) {
  if (q == 0) throw std::invalid_argument("q must be a power of p");
  while (q % p == 0) q /= p;
  if (q != 1) throw std::invalid_argument("q must be a power of p");
}

void RequireInMaximalIdeal(const MPoly& f) {
  if (f.IsConstant()) throw std::invalid_argument("f must be nonconstant");
  if (!f.ConstantTerm().IsZero()) throw std::invalid_argument("f must vanish at the origin");
}

}  // namespace

bool InBracketIdeal(const MPoly& g, std::uint64_t q) {
  RequirePowerOfP(q, g.prime());
  return std::all_of(g.terms().begin(), g.terms().end(), [q](const auto& term) {
    const auto& e = term.first;
    return std::any_of(e.begin(), e.end(), [q](auto x) { return x >= q; });
  });
}

std::uint64_t Nu(const MPoly& f, unsigned e) {
  RequireInMaximalIdeal(f);
  const std::uint64_t q = IntPow(f.prime(), e);
  const MPoly base = f.TruncateBox(q);
  MPoly power = MPoly::Constant(f.prime(), f.nvars(), 1);
  std::uint64_t r = 0;
  // f^r lies in m^[q] once r > n (q - 1), so the loop terminates.
  for (;;) {
    MPoly next = power.MulTruncated(base, q);
    if (next.IsZero()) return r;
    power = std::move(next);
    ++r;
  }
}

std::uint64_t NuBisect(const MPoly& f, unsigned e) {
  RequireInMaximalIdeal(f);
  const std::uint64_t q = IntPow(f.prime(), e);
  // Invariant: f^lo survives, f^hi does not.
  std::uint64_t lo = 0;
  std::uint64_t hi = f.nvars() * (q - 1) + 1;
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (f.PowTruncated(mid, q).IsZero()) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return lo;
}

NuSequence FptBounds(const MPoly& f, unsigned e_max) {
  if (e_max == 0) throw std::invalid_argument("e_max must be positive");
  NuSequence seq{f, f.prime(), {}, Rational(0), Rational(1)};
  for (unsigned e = 1; e <= e_max; ++e) {
    const std::uint64_t q = IntPow(f.prime(), e);
    const std::uint64_t nu = Nu(f, e);
    if (!seq.values.empty() && nu < f.prime() * seq.values.back().nu) {
      throw InvariantViolation("nu monotonicity violated at q = " + std::to_string(q));
    }
    seq.values.push_back({e, q, nu});
  }
  const auto& last = seq.values.back();
  seq.fpt_lower = Rational(last.nu, last.q);
  seq.fpt_upper = Rational(last.nu + 1, last.q);
  return seq;
}

bool IsFPurePair(const MPoly& f, const ZpRational& t, unsigned e) {
  if (e == 0) throw std::invalid_argument("level must be positive");
  if (t < ZpRational(0)) throw std::invalid_argument("negative pair coefficient");
  const BigInt exponent = ScaleToLevel(t, f.prime(), e);
  const std::uint64_t q = IntPow(f.prime(), e);
  return !f.PowTruncated(exponent.convert_to<std::uint64_t>(), q).IsZero();
}

}  // namespace fsplit
