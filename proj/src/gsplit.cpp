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

#include "fsplit/gsplit.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "fsplit/ext_poly.hpp"

namespace fsplit {
namespace {

std::string Trim(const std::string& s) {
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  return s.substr(begin, end - begin);
}

std::uint64_t ParseResidue(const std::string& text, std::uint64_t p) {
  if (text.empty()) throw std::invalid_argument("empty coordinate");
  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) throw std::invalid_argument("malformed coordinate: " + text);
  std::uint64_t value = 0;
  for (; pos < text.size(); ++pos) {
    if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw std::invalid_argument("malformed coordinate: " + text);
    }
    value = (MulMod(value, 10, p) + static_cast<std::uint64_t>(text[pos] - '0')) % p;
  }
  return negative ? (p - value) % p : value;
}

// Exponents (q - 1) b_i of a divisor at one level.
struct ScaledDivisor {
  std::uint64_t q = 0;
  std::vector<std::pair<ExtFieldElement, std::uint64_t>> finite;
  std::uint64_t at_infinity = 0;
  std::int64_t budget = 0;
};

ScaledDivisor ScaleDivisor(const P1Divisor& boundary, unsigned e) {
  if (e == 0) throw std::invalid_argument("level must be positive");
  const std::uint64_t p = boundary.prime();
  ScaledDivisor out;
  out.q = IntPow(p, e);
  const ZpRational one(1);
  BigInt total = 0;
  for (const auto& entry : boundary.entries()) {
    if (entry.coeff < ZpRational(0) || entry.coeff > one) {
      throw std::invalid_argument("boundary coefficient outside [0, 1]: " + entry.coeff.ToString());
    }
    const BigInt n = ScaleToLevel(entry.coeff, p, e);
    total += n;
    const auto n64 = n.convert_to<std::uint64_t>();
    if (entry.point.IsInfinity()) {
      out.at_infinity = n64;
    } else {
      out.finite.emplace_back(entry.point.value(), n64);
    }
  }
  const BigInt budget = 2 * BigInt(out.q - 1) - total;
  out.budget = budget.convert_to<std::int64_t>();
  return out;
}

ExtPoly BuildSectionPoly(const ScaledDivisor& scaled, std::uint64_t p) {
  ExtPoly g(p);
  for (const auto& [root, n] : scaled.finite) g = g * ExtPoly::LinearPower(root, n);
  return g;
}

// Coefficient of x^k in g * (x - t)^m is nonzero as a polynomial in t iff
// some i <= m has C(m, i) != 0 mod p and g_{k-i} != 0.
bool GenericCoeffNonzero(const ExtPoly& g, std::int64_t k, std::uint64_t m, std::uint64_t p) {
  for (std::uint64_t i = 0; i <= m && static_cast<std::int64_t>(i) <= k; ++i) {
    if (g.Coeff(k - static_cast<std::int64_t>(i)).IsZero()) continue;
    if (!BinomModP(m, i, p).IsZero()) return true;
  }
  return false;
}

// Smallest j in [0, budget] whose coefficient is nonzero.
template <typename CoeffFn>
std::optional<std::uint64_t> SearchWindow(std::uint64_t q, std::int64_t budget, CoeffFn nonzero) {
  if (budget < 0) return std::nullopt;
  const auto last = std::min<std::uint64_t>(static_cast<std::uint64_t>(budget), q - 1);
  for (std::uint64_t j = 0; j <= last; ++j) {
    if (nonzero(static_cast<std::int64_t>(q - 1 - j))) return j;
  }
  return std::nullopt;
}

void RequireNonnegative(const P1Divisor& boundary) {
  for (const auto& entry : boundary.entries()) {
    if (entry.coeff < ZpRational(0)) {
      throw std::invalid_argument("negative boundary coefficient at " + entry.point.ToString());
    }
  }
}

bool AnyCoeff(const P1Divisor& boundary, bool (*pred)(const ZpRational&)) {
  return std::any_of(boundary.entries().begin(), boundary.entries().end(),
                     [pred](const DivisorEntry& entry) { return pred(entry.coeff); });
}

std::vector<unsigned> LevelsUpTo(unsigned d, unsigned e_max) {
  std::vector<unsigned> levels;
  for (unsigned e = d; e <= e_max; e += d) levels.push_back(e);
  return levels;
}

// x -> c^{1/q}, realized as a power of Frobenius since it has order 2.
ExtFieldElement FrobeniusRoot(const ExtFieldElement& c, unsigned e) {
  return e % 2 == 0 ? c : c.Frobenius();
}

// Cartier operator on c x^a dx: exponent of the image, if nonzero.
std::optional<std::int64_t> CartierExponent(std::int64_t a, std::uint64_t q) {
  const auto qq = static_cast<std::int64_t>(q);
  if ((a + 1) % qq != 0) return std::nullopt;
  return (a + 1) / qq - 1;
}

using LaurentPoly = std::map<std::int64_t, ExtFieldElement>;

void AddTerm(LaurentPoly& f, std::int64_t exponent, const ExtFieldElement& c) {
  if (c.IsZero()) return;
  auto [it, inserted] = f.emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second.IsZero()) f.erase(it);
  }
}

LaurentPoly Cartier(const LaurentPoly& f, std::uint64_t q, unsigned e) {
  LaurentPoly out;
  for (const auto& [a, c] : f) {
    if (auto b = CartierExponent(a, q)) AddTerm(out, *b, FrobeniusRoot(c, e));
  }
  return out;
}

LaurentPoly ScaleLaurent(const LaurentPoly& f, const ExtFieldElement& c) {
  LaurentPoly out;
  for (const auto& [a, x] : f) AddTerm(out, a, x * c);
  return out;
}

std::optional<ExtFieldElement> SquareRoot(const ExtFieldElement& a) {
  for (const auto& x : EnumerateExtField(a.modulus())) {
    if (x * x == a) return x;
  }
  return std::nullopt;
}

CoverCheckResult SquareCoverCheck(const P1Divisor& target, unsigned e) {
  const std::uint64_t p = target.prime();
  const std::uint64_t q = IntPow(p, e);
  const ExtFieldElement zero(0, 0, p);
  const P1Point origin = P1Point::Finite(zero);
  const P1Point infinity = P1Point::Infinity();

  // Pullback along u -> u^2 minus the ramification (0) + (inf).
  std::vector<DivisorEntry> source;
  for (const auto& entry : target.entries()) {
    if (entry.point == origin || entry.point == infinity) continue;
    const auto root = SquareRoot(entry.point.value());
    if (!root) {
      throw std::invalid_argument("preimage of " + entry.point.ToString() + " leaves F_{p^2}");
    }
    source.push_back({P1Point::Finite(*root), entry.coeff});
    source.push_back({P1Point::Finite(-*root), entry.coeff});
  }
  for (const auto& point : {origin, infinity}) {
    const ZpRational c = ZpRational(2) * target.CoeffAt(point) - ZpRational(1);
    if (c < ZpRational(0)) {
      throw std::invalid_argument("source boundary is not effective at " + point.ToString());
    }
    source.push_back({point, c});
  }
  P1Divisor source_boundary(p, std::move(source));

  // Tr(u^a du) = x^{(a-1)/2} dx for odd a and 0 otherwise.
  auto trace = [](std::int64_t a) -> std::optional<std::int64_t> {
    if (a % 2 == 0) return std::nullopt;
    return (a - 1) / 2;
  };
  // A coefficient outside F_p makes the Frobenius twist visible.
  const ExtFieldElement c(1, 1, p);
  const ExtFieldElement c_root = FrobeniusRoot(c, e);
  bool commutes = true;
  std::uint64_t checked = 0;
  const auto bound = static_cast<std::int64_t>(4 * q);
  for (std::int64_t a = -bound; a <= bound; ++a, ++checked) {
    std::optional<std::pair<ExtFieldElement, std::int64_t>> left;
    if (auto b = CartierExponent(a, q)) {
      if (auto t = trace(*b)) left.emplace(c_root, *t);
    }
    std::optional<std::pair<ExtFieldElement, std::int64_t>> right;
    if (auto t = trace(a)) {
      if (auto b = CartierExponent(*t, q)) right.emplace(c_root, *b);
    }
    if (left != right) commutes = false;
  }

  const bool source_gfs = GfsP1Level(source_boundary, e).split;
  const bool target_gfs = GfsP1Level(target, e).split;
  return CoverCheckResult{commutes, checked, std::move(source_boundary), target,
                          source_gfs, target_gfs, source_gfs == target_gfs};
}

CoverCheckResult LegendreCoverCheck(const ExtFieldElement& lambda, const P1Divisor& target,
                                    unsigned e) {
  const std::uint64_t p = target.prime();
  if (lambda.modulus() != p) throw std::invalid_argument("lambda over a different prime");
  const ExtFieldElement zero(0, 0, p);
  const ExtFieldElement one(1, 0, p);
  if (lambda == zero || lambda == one) throw std::invalid_argument("lambda must avoid 0 and 1");
  const P1Divisor branch(p, {{P1Point::Finite(zero), ZpRational(1, 2)},
                             {P1Point::Finite(one), ZpRational(1, 2)},
                             {P1Point::Finite(lambda), ZpRational(1, 2)},
                             {P1Point::Infinity(), ZpRational(1, 2)}});
  if (!(target == branch)) {
    throw std::invalid_argument("target must be the branch divisor of the Legendre cover");
  }
  const std::uint64_t q = IntPow(p, e);
  // f^{(q-1)/2} with f = x (x - 1) (x - lambda).
  const ExtPoly cubic = ExtPoly::LinearPower(zero, 1) * ExtPoly::LinearPower(one, 1) *
                        ExtPoly::LinearPower(lambda, 1);
  const ExtPoly lift = cubic.Pow((q - 1) / 2);

  // Forms h0 dx + h1 dx / y on the curve. Cartier: the even part maps by
  // C_x; the odd part by h1 dx/y -> C_x(h1 f^{(q-1)/2} dx) / y. The trace
  // doubles the even part and kills the odd part.
  const ExtFieldElement two(2, 0, p);
  const ExtFieldElement c(1, 1, p);
  bool commutes = true;
  std::uint64_t checked = 0;
  const auto bound = static_cast<std::int64_t>(4 * q);
  for (std::int64_t a = -bound; a <= bound; ++a) {
    for (int odd = 0; odd < 2; ++odd, ++checked) {
      LaurentPoly h0;
      LaurentPoly h1;
      (odd ? h1 : h0).emplace(a, c);
      LaurentPoly c_even = Cartier(h0, q, e);
      LaurentPoly lifted;
      for (const auto& [k, x] : h1) {
        for (std::int64_t i = 0; i <= lift.Degree(); ++i) AddTerm(lifted, k + i, x * lift.Coeff(i));
      }
      LaurentPoly c_odd = Cartier(lifted, q, e);
      (void)c_odd;  // discarded by the trace below
      const LaurentPoly left = ScaleLaurent(c_even, two);
      const LaurentPoly right = Cartier(ScaleLaurent(h0, two), q, e);
      if (left != right) commutes = false;
    }
  }

  // The curve splits iff C(dx/y) != 0, i.e. x^{q-1} survives in f^{(q-1)/2}.
  const bool source_gfs = !lift.Coeff(static_cast<std::int64_t>(q - 1)).IsZero();
  const bool target_gfs = GfsP1Level(target, e).split;
  return CoverCheckResult{commutes, checked, P1Divisor(p), target,
                          source_gfs, target_gfs, source_gfs == target_gfs};
}

}  // namespace

// --- P1Point ---

const ExtFieldElement& P1Point::value() const {
  if (!value_) throw std::logic_error("the point at infinity has no coordinate");
  return *value_;
}

std::string P1Point::ToString() const { return value_ ? value_->ToString() : "inf"; }

P1Point P1Point::Parse(const std::string& raw, std::uint64_t p) {
  RequireOddPrime(p);
  std::string text;
  for (char ch : raw) {
    if (!std::isspace(static_cast<unsigned char>(ch))) text.push_back(ch);
  }
  if (text == "inf" || text == "infinity" || text == "oo") return Infinity();
  if (text.empty()) throw std::invalid_argument("empty point");
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  if (text.back() == 't') {
    const std::string body = text.substr(0, text.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
      if (body[i] == '+' || body[i] == '-') {
        split = i;
        break;
      }
    }
    std::string real = split == std::string::npos ? "" : body.substr(0, split);
    std::string imag = split == std::string::npos ? body : body.substr(split);
    if (imag.empty() || imag == "+") imag = "1";
    if (imag == "-") imag = "-1";
    if (!real.empty()) a = ParseResidue(real, p);
    b = ParseResidue(imag, p);
  } else {
    a = ParseResidue(text, p);
  }
  return Finite(ExtFieldElement(a, b, p));
}

std::strong_ordering P1Point::operator<=>(const P1Point& rhs) const {
  if (IsInfinity() || rhs.IsInfinity()) {
    return IsInfinity() <=> rhs.IsInfinity();
  }
  return *value_ <=> *rhs.value_;
}

// --- P1Divisor ---

P1Divisor::P1Divisor(std::uint64_t p) : p_(p) { RequireOddPrime(p); }

P1Divisor::P1Divisor(std::uint64_t p, std::vector<DivisorEntry> entries)
    : p_(p), entries_(std::move(entries)) {
  RequireOddPrime(p);
  for (const auto& entry : entries_) {
    if (!entry.point.IsInfinity() && entry.point.value().modulus() != p_) {
      throw std::invalid_argument("point over a different prime");
    }
    entry.coeff.RequirePIntegral(p_);
  }
  Normalize();
}

void P1Divisor::Normalize() {
  std::sort(entries_.begin(), entries_.end(),
            [](const DivisorEntry& x, const DivisorEntry& y) { return x.point < y.point; });
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (entries_[i].point == entries_[i - 1].point) {
      throw std::invalid_argument("repeated point " + entries_[i].point.ToString());
    }
  }
  std::erase_if(entries_, [](const DivisorEntry& x) { return x.coeff == ZpRational(0); });
}

ZpRational P1Divisor::Degree() const {
  ZpRational total(0);
  for (const auto& entry : entries_) total = total + entry.coeff;
  return total;
}

ZpRational P1Divisor::CoeffAt(const P1Point& point) const {
  for (const auto& entry : entries_) {
    if (entry.point == point) return entry.coeff;
  }
  return ZpRational(0);
}

std::vector<ZpRational> P1Divisor::Coefficients() const {
  std::vector<ZpRational> out;
  out.reserve(entries_.size());
  for (const auto& entry : entries_) out.push_back(entry.coeff);
  return out;
}

P1Divisor P1Divisor::Plus(const P1Point& point, const ZpRational& c) const {
  std::vector<DivisorEntry> entries = entries_;
  bool found = false;
  for (auto& entry : entries) {
    if (entry.point == point) {
      entry.coeff = entry.coeff + c;
      found = true;
    }
  }
  if (!found) entries.push_back({point, c});
  return P1Divisor(p_, std::move(entries));
}

std::string P1Divisor::ToString() const {
  if (entries_.empty()) return "0";
  std::ostringstream out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i > 0) out << ',';
    out << entries_[i].coeff.ToString() << '@' << entries_[i].point.ToString();
  }
  return out.str();
}

P1Divisor P1Divisor::Parse(const std::string& text, std::uint64_t p) {
  const std::string body = Trim(text);
  if (body.empty() || body == "0") return P1Divisor(p);
  std::vector<DivisorEntry> entries;
  std::stringstream stream(body);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const auto at = item.find('@');
    if (at == std::string::npos) throw std::invalid_argument("divisor entry needs coeff@point: " + item);
    entries.push_back({P1Point::Parse(item.substr(at + 1), p), ZpRational::Parse(Trim(item.substr(0, at)))});
  }
  return P1Divisor(p, std::move(entries));
}

bool P1Divisor::operator==(const P1Divisor& rhs) const {
  if (p_ != rhs.p_ || entries_.size() != rhs.entries_.size()) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!(entries_[i].point == rhs.entries_[i].point) || !(entries_[i].coeff == rhs.entries_[i].coeff)) {
      return false;
    }
  }
  return true;
}

std::string ToString(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::kYes:
      return "yes";
    case VerdictStatus::kNo:
      return "no";
    case VerdictStatus::kCertifiedNo:
      return "certified-no";
    case VerdictStatus::kUnknown:
      return "unknown";
  }
  return "unknown";
}

// --- splitting on P^1 ---

LevelResult GfsP1LevelWithGeneric(const P1Divisor& boundary, const ZpRational& generic_coeff,
                                  unsigned e) {
  const std::uint64_t p = boundary.prime();
  ScaledDivisor scaled = ScaleDivisor(boundary, e);
  if (generic_coeff < ZpRational(0) || generic_coeff > ZpRational(1)) {
    throw std::invalid_argument("generic coefficient outside [0, 1]");
  }
  const auto m = ScaleToLevel(generic_coeff, p, e).convert_to<std::uint64_t>();
  scaled.budget -= static_cast<std::int64_t>(m);

  LevelResult result;
  result.level = e;
  result.budget = scaled.budget;
  if (scaled.budget < 0) return result;
  const ExtPoly g = BuildSectionPoly(scaled, p);
  std::optional<std::uint64_t> j;
  if (m == 0) {
    j = SearchWindow(scaled.q, scaled.budget, [&](std::int64_t k) { return !g.Coeff(k).IsZero(); });
  } else {
    j = SearchWindow(scaled.q, scaled.budget,
                     [&](std::int64_t k) { return GenericCoeffNonzero(g, k, m, p); });
  }
  if (j) {
    result.split = true;
    SplittingCertificate cert{e, scaled.q, *j, std::nullopt};
    if (m == 0) cert.coefficient = g.Coeff(static_cast<std::int64_t>(scaled.q - 1 - *j));
    result.certificate = cert;
  }
  return result;
}

LevelResult GfsP1Level(const P1Divisor& boundary, unsigned e) {
  return GfsP1LevelWithGeneric(boundary, ZpRational(0), e);
}

GfsVerdict GfsP1(const P1Divisor& boundary, unsigned e_max) {
  RequireNonnegative(boundary);
  GfsVerdict verdict;
  if (AnyCoeff(boundary, [](const ZpRational& c) { return c > ZpRational(1); })) {
    verdict.status = VerdictStatus::kCertifiedNo;
    verdict.reason = "coefficient greater than 1";
    return verdict;
  }
  if (boundary.Degree() > ZpRational(2)) {
    verdict.status = VerdictStatus::kCertifiedNo;
    verdict.reason = "degree greater than 2";
    return verdict;
  }
  const auto coeffs = boundary.Coefficients();
  const unsigned d = coeffs.empty() ? 1 : SplittingLevel(coeffs, boundary.prime());
  if (d > e_max) {
    verdict.status = VerdictStatus::kUnknown;
    verdict.reason = "splitting level " + std::to_string(d) + " exceeds e_max " + std::to_string(e_max);
    return verdict;
  }
  for (unsigned e : LevelsUpTo(d, e_max)) {
    verdict.levels_tested.push_back(e);
    LevelResult level = GfsP1Level(boundary, e);
    if (level.split) {
      verdict.status = VerdictStatus::kYes;
      verdict.certificate = level.certificate;
      return verdict;
    }
  }
  verdict.status = VerdictStatus::kNo;
  verdict.reason = "no splitting section at tested levels";
  return verdict;
}

bool ReplayCertificate(const P1Divisor& boundary, const SplittingCertificate& certificate) {
  const ScaledDivisor scaled = ScaleDivisor(boundary, certificate.level);
  if (scaled.q != certificate.q || scaled.budget < 0) return false;
  if (certificate.j > static_cast<std::uint64_t>(scaled.budget) || certificate.j >= scaled.q) return false;
  const ExtPoly g = BuildSectionPoly(scaled, boundary.prime());
  const ExtFieldElement c = g.Coeff(static_cast<std::int64_t>(scaled.q - 1 - certificate.j));
  if (c.IsZero()) return false;
  return !certificate.coefficient || *certificate.coefficient == c;
}

GfrVerdict GfrP1Bounded(const P1Divisor& boundary, unsigned e_max, std::size_t perturbation_budget) {
  RequireNonnegative(boundary);
  const std::uint64_t p = boundary.prime();
  GfrVerdict verdict;
  verdict.budget = perturbation_budget;
  verdict.e_max = e_max;
  verdict.family_size = static_cast<std::size_t>(p * p + 2);
  if (AnyCoeff(boundary, [](const ZpRational& c) { return c >= ZpRational(1); })) {
    verdict.status = VerdictStatus::kCertifiedNo;
    verdict.reason = "coefficient at least 1";
    return verdict;
  }
  if (boundary.Degree() >= ZpRational(2)) {
    verdict.status = VerdictStatus::kCertifiedNo;
    verdict.reason = "degree at least 2";
    return verdict;
  }
  if (perturbation_budget < verdict.family_size) {
    verdict.status = VerdictStatus::kUnknown;
    verdict.reason = "perturbation family of size " + std::to_string(verdict.family_size) +
                     " exceeds budget " + std::to_string(perturbation_budget);
    return verdict;
  }
  const auto coeffs = boundary.Coefficients();
  const unsigned d = coeffs.empty() ? 1 : SplittingLevel(coeffs, p);
  const auto levels = LevelsUpTo(d, e_max);
  if (levels.empty()) {
    verdict.status = VerdictStatus::kUnknown;
    verdict.reason = "splitting level " + std::to_string(d) + " exceeds e_max " + std::to_string(e_max);
    return verdict;
  }

  // Per level: the unperturbed section polynomial and its budget. Adding
  // (P)/(q - 1) multiplies g by (x - P), or lowers the budget for P = inf.
  struct LevelData {
    ScaledDivisor scaled;
    ExtPoly g;
  };
  std::map<unsigned, LevelData> cache;
  auto level_data = [&](unsigned e) -> const LevelData& {
    auto it = cache.find(e);
    if (it == cache.end()) {
      ScaledDivisor scaled = ScaleDivisor(boundary, e);
      ExtPoly g = BuildSectionPoly(scaled, p);
      it = cache.emplace(e, LevelData{std::move(scaled), std::move(g)}).first;
    }
    return it->second;
  };

  auto try_point = [&](const std::optional<P1Point>& point) -> std::optional<SplittingCertificate> {
    for (unsigned e : levels) {
      const LevelData& data = level_data(e);
      const std::int64_t budget = data.scaled.budget - 1;
      const ExtPoly& g = data.g;
      std::optional<std::uint64_t> j;
      std::optional<ExtFieldElement> coeff;
      if (!point) {
        j = SearchWindow(data.scaled.q, budget, [&](std::int64_t k) {
          return !g.Coeff(k - 1).IsZero() || !g.Coeff(k).IsZero();
        });
      } else if (point->IsInfinity()) {
        j = SearchWindow(data.scaled.q, budget, [&](std::int64_t k) { return !g.Coeff(k).IsZero(); });
        if (j) coeff = g.Coeff(static_cast<std::int64_t>(data.scaled.q - 1 - *j));
      } else {
        const ExtFieldElement& root = point->value();
        auto shifted = [&](std::int64_t k) { return g.Coeff(k - 1) - root * g.Coeff(k); };
        j = SearchWindow(data.scaled.q, budget, [&](std::int64_t k) { return !shifted(k).IsZero(); });
        if (j) coeff = shifted(static_cast<std::int64_t>(data.scaled.q - 1 - *j));
      }
      if (j) return SplittingCertificate{e, data.scaled.q, *j, coeff};
    }
    return std::nullopt;
  };

  std::vector<std::optional<P1Point>> family;
  family.reserve(verdict.family_size);
  for (const auto& x : EnumerateExtField(p)) family.emplace_back(P1Point::Finite(x));
  family.emplace_back(P1Point::Infinity());
  family.emplace_back(std::nullopt);

  for (const auto& point : family) {
    auto cert = try_point(point);
    if (!cert) {
      verdict.status = VerdictStatus::kUnknown;
      verdict.undecided_point = point ? point->ToString() : "generic";
      verdict.reason = "perturbation at " + *verdict.undecided_point + " unsplit up to level " +
                       std::to_string(levels.back());
      verdict.certificates.clear();
      return verdict;
    }
    verdict.certificates.push_back({point, *cert});
  }
  verdict.status = VerdictStatus::kYes;
  verdict.reason = "every test perturbation splits";
  return verdict;
}

// --- hypersurfaces ---

bool GfsCyHypersurface(const MPoly& form) {
  const std::size_t n = form.nvars();
  if (form.IsZero() || !form.IsHomogeneous() || form.TotalDegree() != n) {
    throw std::invalid_argument("expected a form of degree equal to the number of variables");
  }
  const std::uint64_t p = form.prime();
  const MPoly power = form.PowTruncated(p - 1, p);
  return !power.Coeff(Exponents(n, p - 1)).IsZero();
}

BigradedResult GfsBigradedHypersurface(const MPoly& form, std::span<const std::size_t> group_sizes) {
  if (group_sizes.size() != 2 || group_sizes[0] == 0 || group_sizes[1] == 0 ||
      group_sizes[0] + group_sizes[1] != form.nvars()) {
    throw std::invalid_argument("expected two nonempty variable groups covering every variable");
  }
  if (form.IsZero()) throw std::invalid_argument("zero form");
  const auto degrees = form.MultiDegree(group_sizes);
  if (!degrees) throw std::invalid_argument("form is not bihomogeneous");
  BigradedResult result;
  result.degree_first = (*degrees)[0];
  result.degree_second = (*degrees)[1];
  if (result.degree_first > group_sizes[0] || result.degree_second > group_sizes[1]) {
    throw std::invalid_argument("bidegree exceeds the anticanonical bound");
  }
  const std::uint64_t p = form.prime();
  // A surviving monomial x^a y^b of F^{p-1} inside the box pairs with the
  // complementary monomial of the diagonal, which has the right bidegree.
  const MPoly power = form.PowTruncated(p - 1, p);
  result.split = !power.IsZero();
  if (result.split) result.witness = power.terms().begin()->first;
  if (result.degree_first == group_sizes[0]) {
    MPoly window(p, group_sizes[1]);
    for (const auto& [exps, c] : power.terms()) {
      Exponents tail(exps.begin() + static_cast<std::ptrdiff_t>(group_sizes[0]), exps.end());
      window.AddTerm(tail, FieldElement::FromCanonical(c, p));
    }
    result.window_form = std::move(window);
  }
  return result;
}

// --- covers ---

CoverCheckResult PushforwardSplittingCheck(const CoverMap& cover, const P1Divisor& target, unsigned e) {
  if (e == 0) throw std::invalid_argument("level must be positive");
  switch (cover.kind) {
    case CoverKind::kSquare:
      return SquareCoverCheck(target, e);
    case CoverKind::kLegendre:
      if (!cover.lambda) throw std::invalid_argument("Legendre cover needs lambda");
      return LegendreCoverCheck(*cover.lambda, target, e);
  }
  throw std::invalid_argument("unknown cover");
}

}  // namespace fsplit
