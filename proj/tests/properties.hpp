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

#ifndef FSPLIT_TESTS_PROPERTIES_HPP_
#define FSPLIT_TESTS_PROPERTIES_HPP_

// Randomized property suites with fixed seeds, shared by the unit tests and
// the acceptance runner.

#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fsplit/arith.hpp"
#include "fsplit/fedder.hpp"
#include "fsplit/fibration.hpp"
#include "fsplit/gsplit.hpp"
#include "fsplit/json_io.hpp"
#include "fsplit/mpoly.hpp"
#include "oracles.hpp"

namespace fsplit::props {

inline constexpr std::uint32_t kSeed = 20260415;

struct Tally {
  explicit Tally(std::string n) : name(std::move(n)) {}

  std::string name;
  std::size_t assertions = 0;
  std::size_t failures = 0;
  std::vector<std::string> messages;  // first few failures

  void Check(bool ok, const std::string& what) {
    ++assertions;
    if (ok) return;
    ++failures;
    if (messages.size() < 5) messages.push_back(what);
  }
  bool Passed() const { return failures == 0 && assertions >= 100; }
};

inline std::uint64_t Uniform(std::mt19937& rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

// Sparse polynomial with `terms` random monomials of degree <= max_deg.
inline MPoly RandomPoly(std::mt19937& rng, std::uint64_t p, std::size_t nvars, std::size_t terms,
                        std::uint64_t max_deg, bool in_maximal_ideal) {
  MPoly f(p, nvars);
  for (std::size_t t = 0; t < terms; ++t) {
    Exponents e(nvars, 0);
    std::uint64_t budget = Uniform(rng, in_maximal_ideal ? 1 : 0, max_deg);
    while (budget > 0) {
      ++e[Uniform(rng, 0, nvars - 1)];
      --budget;
    }
    f.AddTerm(e, FieldElement(static_cast<std::int64_t>(Uniform(rng, 1, p - 1)), p));
  }
  return f;
}

inline oracle::NaiveTerms ToNaive(const MPoly& f) {
  oracle::NaiveTerms out;
  for (const auto& [e, c] : f.terms()) out[std::vector<std::int64_t>(e.begin(), e.end())] = static_cast<std::int64_t>(c);
  return out;
}

inline std::string Describe(const MPoly& f) {
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < f.nvars(); ++i) vars.push_back("x" + std::to_string(i));
  return FormatPoly(f, vars) + " mod " + std::to_string(f.prime());
}

inline Tally NuMonotonicity() {
  Tally tally("nu-monotonicity");
  std::mt19937 rng(kSeed);
  struct Case {
    std::uint64_t p;
    unsigned e_max;
  };
  for (const Case c : {Case{3, 3}, Case{5, 2}, Case{7, 2}}) {
    for (int trial = 0; trial < 25; ++trial) {
      const MPoly f = RandomPoly(rng, c.p, 2, Uniform(rng, 1, 3), 3, true);
      if (f.IsZero() || !f.ConstantTerm().IsZero()) continue;
      const NuSequence seq = FptBounds(f, c.e_max);
      for (std::size_t i = 0; i + 1 < seq.values.size(); ++i) {
        tally.Check(seq.values[i + 1].nu >= c.p * seq.values[i].nu, "nu(pq) >= p nu(q) for " + Describe(f));
      }
      const bool outside = !InBracketIdeal(f, c.p);
      for (const auto& v : seq.values) {
        if (outside) {
          tally.Check(v.nu > 0 && v.nu <= v.q, "0 < nu/q <= 1 for " + Describe(f));
        }
      }
      tally.Check(seq.fpt_lower <= seq.fpt_upper, "fpt bounds ordered for " + Describe(f));
      // Smaller exponent t splits more.
      const std::uint64_t q = c.p;
      bool previous = true;
      for (std::uint64_t k = 0; k <= q - 1; ++k) {
        const bool pure = IsFPurePair(f, ZpRational(static_cast<std::int64_t>(k), static_cast<std::int64_t>(q - 1)), 1);
        tally.Check(previous || !pure, "fpure pair monotone in t for " + Describe(f));
        previous = pure;
      }
    }
  }
  for (std::size_t n = 1; n <= 3; ++n) {
    MPoly f = MPoly::Constant(3, 3, 1);
    for (std::size_t i = 0; i < n; ++i) f *= MPoly::Variable(3, 3, i);
    for (unsigned e = 1; e <= 3; ++e) tally.Check(Nu(f, e) == IntPow(3, e) - 1, "coordinate product nu = q - 1");
  }
  return tally;
}

inline P1Point RandomPointOfP1(std::mt19937& rng, std::uint64_t p, bool allow_quadratic) {
  const std::uint64_t span = allow_quadratic ? p * p + 1 : p + 1;
  const std::uint64_t k = Uniform(rng, 0, span - 1);
  if (k == span - 1) return P1Point::Infinity();
  return P1Point::Finite(ExtFieldElement(k % p, k / p, p));
}

// Random effective divisor with coefficients in [0, 1] at level 1 or 2.
inline P1Divisor RandomDivisor(std::mt19937& rng, std::uint64_t p, unsigned level, std::size_t max_points) {
  const auto den = static_cast<std::int64_t>(IntPow(p, level) - 1);
  std::vector<DivisorEntry> entries;
  const std::size_t n = Uniform(rng, 0, max_points);
  for (std::size_t i = 0; i < n; ++i) {
    const P1Point point = RandomPointOfP1(rng, p, level == 2);
    bool duplicate = false;
    for (const auto& e : entries) duplicate = duplicate || e.point == point;
    if (duplicate) continue;
    entries.push_back({point, ZpRational(static_cast<std::int64_t>(Uniform(rng, 0, static_cast<std::uint64_t>(den))), den)});
  }
  return P1Divisor(p, std::move(entries));
}

inline Tally GfsBoundaryMonotonicity() {
  Tally tally("gfs-boundary-monotonicity");
  std::mt19937 rng(kSeed + 1);
  for (std::uint64_t p : {3, 5, 7}) {
    for (int trial = 0; trial < 60; ++trial) {
      const unsigned level = (p == 3 && trial % 2 == 1) ? 2 : 1;
      const P1Divisor b = RandomDivisor(rng, p, level, 5);
      const LevelResult big = GfsP1Level(b, level);
      // Lower a random subset of coefficients.
      P1Divisor smaller(p);
      for (const auto& e : b.entries()) {
        const auto den = static_cast<std::int64_t>(IntPow(p, level) - 1);
        const auto num = static_cast<std::int64_t>(ScaleToLevel(e.coeff, p, level));
        const auto lowered = static_cast<std::int64_t>(Uniform(rng, 0, static_cast<std::uint64_t>(num)));
        smaller = smaller.Plus(e.point, ZpRational(lowered, den));
      }
      const LevelResult small = GfsP1Level(smaller, level);
      tally.Check(!big.split || small.split, "B' <= B keeps splitting: " + b.ToString() + " vs " + smaller.ToString());
      if (big.split) {
        tally.Check(ReplayCertificate(b, *big.certificate), "certificate replays for " + b.ToString());
        if (IntPow(p, 2 * level) <= 2500) {
          tally.Check(GfsP1Level(b, 2 * level).split, "level coherence for " + b.ToString());
        }
        tally.Check(b.Degree() <= ZpRational(2), "splitting forces degree <= 2 for " + b.ToString());
      }
    }
  }
  for (int trial = 0; trial < 1000; ++trial) {
    const std::uint64_t p = std::vector<std::uint64_t>{3, 5, 7}[Uniform(rng, 0, 2)];
    const P1Divisor b = RandomDivisor(rng, p, 1, 6);
    if (GfsP1Level(b, 1).split) tally.Check(b.Degree() <= ZpRational(2), "gfs implies deg <= 2: " + b.ToString());
  }
  return tally;
}

inline Tally PowerQm1Equivalence() {
  Tally tally("power-qm1-oracle");
  std::mt19937 rng(kSeed + 2);
  struct Case {
    std::uint64_t p;
    unsigned e;
  };
  for (const Case c : {Case{3, 1}, Case{3, 2}, Case{3, 3}, Case{5, 1}, Case{5, 2}, Case{7, 1}, Case{13, 1}}) {
    const std::uint64_t q = IntPow(c.p, c.e);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t nvars = Uniform(rng, 1, 3);
      const MPoly f = RandomPoly(rng, c.p, nvars, Uniform(rng, 1, 3), 3, false);
      if (f.IsZero()) continue;
      const MPoly fast = f.PowerQm1(c.e);
      const auto naive = oracle::NaivePow(ToNaive(f), static_cast<std::int64_t>(q - 1), nvars, static_cast<std::int64_t>(c.p));
      tally.Check(ToNaive(fast) == naive, "power_qm1 = naive for " + Describe(f) + " e=" + std::to_string(c.e));
      tally.Check(fast.TotalDegree() == (q - 1) * f.TotalDegree(), "degree of power_qm1 for " + Describe(f));
    }
  }
  for (int trial = 0; trial < 20; ++trial) {
    const MPoly f = RandomPoly(rng, 5, 2, 3, 3, false);
    const MPoly g = f.Pow(4);
    tally.Check(g.FrobeniusTwist(1) == g.Pow(5), "twist equals p-th power for " + Describe(f));
  }
  return tally;
}

inline Tally FieldAxioms() {
  Tally tally("field-axioms");
  std::mt19937 rng(kSeed + 3);
  for (std::uint64_t p : {3, 5, 7, 13, 101}) {
    const oracle::Fq2Ring ring{static_cast<std::int64_t>(p), oracle::NonresidueBySquares(static_cast<std::int64_t>(p))};
    auto draw = [&] { return ExtFieldElement(Uniform(rng, 0, p - 1), Uniform(rng, 0, p - 1), p); };
    const ExtFieldElement zero(0, 0, p);
    const ExtFieldElement one(1, 0, p);
    bool ok = true;
    for (int i = 0; i < 1000; ++i) {
      const auto x = draw();
      const auto y = draw();
      const auto z = draw();
      ok = ok && (x * y) * z == x * (y * z);
      ok = ok && (x + y) + z == x + (y + z);
      ok = ok && x * (y + z) == x * y + x * z;
      ok = ok && x * y == y * x;
      ok = ok && x + (-x) == zero;
      ok = ok && x * one == x;
      if (!x.IsZero()) ok = ok && x * x.Inverse() == one;
      const auto ref = ring.Mul({static_cast<std::int64_t>(x.a()), static_cast<std::int64_t>(x.b())},
                                {static_cast<std::int64_t>(y.a()), static_cast<std::int64_t>(y.b())});
      const auto got = x * y;
      ok = ok && static_cast<std::int64_t>(got.a()) == ref.a && static_cast<std::int64_t>(got.b()) == ref.b;
      ok = ok && x.Frobenius() == x.Pow(p);
      tally.Check(ok, "field axioms at p=" + std::to_string(p) + " sample " + std::to_string(i));
      if (!ok) break;
    }
    for (std::uint64_t n = 0; n < 3 * p && p <= 13; ++n) {
      for (std::uint64_t k = 0; k <= n; ++k) {
        tally.Check(static_cast<std::int64_t>(BinomModP(n, k, p).value()) ==
                        oracle::BinomMod(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k), static_cast<std::int64_t>(p)),
                    "binomial mod p");
      }
    }
  }
  return tally;
}

inline Tally JsonRoundTrip() {
  Tally tally("json-round-trip");
  std::mt19937 rng(kSeed + 4);
  for (int trial = 0; trial < 150; ++trial) {
    const std::uint64_t p = std::vector<std::uint64_t>{3, 5, 7, 11}[Uniform(rng, 0, 3)];
    const P1Divisor b = RandomDivisor(rng, p, static_cast<unsigned>(Uniform(rng, 1, 2)), 5);
    const Json j = ToJson(b);
    tally.Check(DivisorFromJson(Json::parse(j.dump()), p) == b, "divisor round-trip " + b.ToString());
    tally.Check(P1Divisor::Parse(b.ToString(), p) == b, "divisor text round-trip " + b.ToString());
  }
  for (std::uint64_t p = 3; p <= 31; p += 2) {
    if (!IsPrime(p)) continue;
    const FDiscriminantReport r = FDiscriminantLegendre(p);
    const Json j = ToJson(r);
    const FDiscriminantReport back = FDiscriminantFromJson(Json::parse(j.dump()));
    tally.Check(back == r, "fdisc round-trip p=" + std::to_string(p));
    tally.Check(ToJson(back).dump() == j.dump(), "fdisc re-encode p=" + std::to_string(p));
  }
  std::vector<std::string> vars{"x", "y", "z"};
  for (int trial = 0; trial < 50; ++trial) {
    const MPoly f = RandomPoly(rng, 7, 3, Uniform(rng, 1, 5), 4, false);
    tally.Check(ParsePoly(FormatPoly(f, vars), vars, 7) == f, "polynomial text round-trip " + FormatPoly(f, vars));
  }
  return tally;
}

inline std::vector<Tally> AllSuites() {
  return {NuMonotonicity(), GfsBoundaryMonotonicity(), PowerQm1Equivalence(), FieldAxioms(), JsonRoundTrip()};
}

}  // namespace fsplit::props

#endif  // FSPLIT_TESTS_PROPERTIES_HPP_
