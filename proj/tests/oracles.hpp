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

#ifndef FSPLIT_TESTS_ORACLES_HPP_
#define FSPLIT_TESTS_ORACLES_HPP_

// Naive reference implementations, independent of the library's arithmetic.

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fsplit::oracle {

using Big = boost::multiprecision::cpp_int;

inline std::int64_t Mod(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

inline std::int64_t BinomMod(std::int64_t n, std::int64_t k, std::int64_t p) {
  if (k < 0 || k > n) return 0;
  Big num = 1;
  Big den = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    num *= (n - i);
    den *= (i + 1);
  }
  const Big value = num / den;
  return static_cast<std::int64_t>(value % p);
}

inline std::int64_t PowModNaive(std::int64_t b, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1 % p;
  for (std::int64_t i = 0; i < e; ++i) r = Mod(r * b, p);
  return r;
}

// Nonresidue found by listing squares, independent of Euler's criterion.
inline std::int64_t NonresidueBySquares(std::int64_t p) {
  std::vector<bool> square(static_cast<std::size_t>(p), false);
  for (std::int64_t x = 0; x < p; ++x) square[static_cast<std::size_t>(Mod(x * x, p))] = true;
  for (std::int64_t n = 2; n < p; ++n) {
    if (!square[static_cast<std::size_t>(n)]) return n;
  }
  return -1;
}

// a + b t with t^2 = n.
struct Fq2 {
  std::int64_t a = 0;
  std::int64_t b = 0;
  bool operator==(const Fq2&) const = default;
};

struct Fq2Ring {
  std::int64_t p;
  std::int64_t n;

  Fq2 Add(Fq2 x, Fq2 y) const { return {Mod(x.a + y.a, p), Mod(x.b + y.b, p)}; }
  Fq2 Sub(Fq2 x, Fq2 y) const { return {Mod(x.a - y.a, p), Mod(x.b - y.b, p)}; }
  Fq2 Mul(Fq2 x, Fq2 y) const {
    return {Mod(x.a * y.a + Mod(x.b * y.b, p) * n, p), Mod(x.a * y.b + x.b * y.a, p)};
  }
  Fq2 Scalar(std::int64_t c) const { return {Mod(c, p), 0}; }
};

// Dense univariate polynomials over F_{p^2}, index = degree.
using Fq2Poly = std::vector<Fq2>;

inline Fq2Poly PolyMul(const Fq2Ring& ring, const Fq2Poly& f, const Fq2Poly& g) {
  Fq2Poly out(f.size() + g.size() - 1, Fq2{});
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) out[i + j] = ring.Add(out[i + j], ring.Mul(f[i], g[j]));
  }
  return out;
}

inline Fq2Poly PolyPowNaive(const Fq2Ring& ring, const Fq2Poly& f, std::int64_t n) {
  Fq2Poly out{Fq2{1, 0}};
  for (std::int64_t i = 0; i < n; ++i) out = PolyMul(ring, out, f);
  return out;
}

inline Fq2 Eval(const Fq2Ring& ring, const Fq2Poly& f, Fq2 x) {
  Fq2 acc{};
  for (std::size_t i = f.size(); i-- > 0;) acc = ring.Add(ring.Mul(acc, x), f[i]);
  return acc;
}

// Coefficient of x^{p-1} in (x (x - 1) (x - lambda))^{(p-1)/2}, expanded by
// repeated multiplication.
inline Fq2 HasseByExpansion(std::int64_t p, Fq2 lambda) {
  const Fq2Ring ring{p, NonresidueBySquares(p)};
  const Fq2Poly cubic = PolyMul(ring, PolyMul(ring, {Fq2{0, 0}, Fq2{1, 0}}, {ring.Scalar(-1), Fq2{1, 0}}),
                                {ring.Sub(Fq2{0, 0}, lambda), Fq2{1, 0}});
  const Fq2Poly power = PolyPowNaive(ring, cubic, (p - 1) / 2);
  return power[static_cast<std::size_t>(p - 1)];
}

// #E(F_p) by listing every affine pair (x, y).
inline std::int64_t CountPointsByPairs(std::int64_t p, std::int64_t lambda) {
  std::int64_t count = 1;
  for (std::int64_t x = 0; x < p; ++x) {
    const std::int64_t rhs = Mod(x * Mod(x - 1, p) % p * Mod(x - lambda, p), p);
    for (std::int64_t y = 0; y < p; ++y) {
      if (Mod(y * y, p) == rhs) ++count;
    }
  }
  return count;
}

// Sparse polynomial by full expansion; no truncation anywhere.
using NaiveTerms = std::map<std::vector<std::int64_t>, std::int64_t>;

inline NaiveTerms NaiveMul(const NaiveTerms& f, const NaiveTerms& g, std::int64_t p) {
  NaiveTerms out;
  for (const auto& [ea, ca] : f) {
    for (const auto& [eb, cb] : g) {
      std::vector<std::int64_t> e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] = Mod(out[e] + ca * cb, p);
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

inline NaiveTerms NaivePow(const NaiveTerms& f, std::int64_t n, std::size_t nvars, std::int64_t p) {
  NaiveTerms out{{std::vector<std::int64_t>(nvars, 0), 1}};
  for (std::int64_t i = 0; i < n; ++i) out = NaiveMul(out, f, p);
  return out;
}

// Some monomial has every exponent below q.
inline bool SurvivesBracket(const NaiveTerms& g, std::int64_t q) {
  for (const auto& [e, c] : g) {
    bool inside = true;
    for (auto x : e) inside = inside && x < q;
    if (inside) return true;
  }
  return false;
}

inline std::int64_t NaiveNu(const NaiveTerms& f, std::size_t nvars, std::int64_t p, std::int64_t q) {
  std::int64_t r = 0;
  NaiveTerms power{{std::vector<std::int64_t>(nvars, 0), 1}};
  for (;;) {
    power = NaiveMul(power, f, p);
    if (!SurvivesBracket(power, q)) return r;
    ++r;
  }
}

}  // namespace fsplit::oracle

#endif  // FSPLIT_TESTS_ORACLES_HPP_
