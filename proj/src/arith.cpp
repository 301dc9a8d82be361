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

#include "fsplit/arith.hpp"

#include <limits>
#include <sstream>

namespace fsplit {

std::uint64_t MulMod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t PowMod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = MulMod(result, base, m);
    base = MulMod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool IsPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL,
                              31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL,
                          37ULL}) {
    std::uint64_t x = PowMod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = MulMod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

void RequireOddPrime(std::uint64_t p) {
  thread_local std::uint64_t last_checked = 0;
  if (p == last_checked) return;
  if (p == 2) throw std::invalid_argument("characteristic 2 is not supported");
  if (!IsPrime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
  last_checked = p;
}

std::uint64_t IntPow(std::uint64_t p, unsigned e) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (result > std::numeric_limits<std::uint64_t>::max() / p) {
      throw std::overflow_error("p^e does not fit in 64 bits");
    }
    result *= p;
  }
  return result;
}

// FieldElement ---------------------------------------------------------------

FieldElement::FieldElement(std::int64_t value, std::uint64_t modulus) : modulus_(modulus) {
  RequireOddPrime(modulus);
  const auto m = static_cast<std::int64_t>(modulus);
  std::int64_t r = value % m;
  if (r < 0) r += m;
  value_ = static_cast<std::uint64_t>(r);
}

void FieldElement::CheckSameField(const FieldElement& rhs) const {
  if (modulus_ != rhs.modulus_) throw std::invalid_argument("field elements over different primes");
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  CheckSameField(rhs);
  std::uint64_t s = value_ + rhs.value_;
  if (s >= modulus_) s -= modulus_;
  return FromCanonical(s, modulus_);
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
  CheckSameField(rhs);
  return FromCanonical(value_ >= rhs.value_ ? value_ - rhs.value_ : value_ + modulus_ - rhs.value_,
                       modulus_);
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  CheckSameField(rhs);
  return FromCanonical(MulMod(value_, rhs.value_, modulus_), modulus_);
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const {
  CheckSameField(rhs);
  return *this * rhs.Inverse();
}

FieldElement FieldElement::operator-() const {
  return FromCanonical(value_ == 0 ? 0 : modulus_ - value_, modulus_);
}

FieldElement FieldElement::Inverse() const {
  if (value_ == 0) throw std::domain_error("inverse of zero");
  return FromCanonical(PowMod(value_, modulus_ - 2, modulus_), modulus_);
}

FieldElement FieldElement::Pow(std::uint64_t exp) const {
  return FromCanonical(PowMod(value_, exp, modulus_), modulus_);
}

int FieldElement::QuadraticCharacter() const {
  if (value_ == 0) return 0;
  return PowMod(value_, (modulus_ - 1) / 2, modulus_) == 1 ? 1 : -1;
}

std::ostream& operator<<(std::ostream& os, const FieldElement& x) { return os << x.value(); }

std::uint64_t SmallestNonresidue(std::uint64_t p) {
  thread_local std::uint64_t cached_p = 0;
  thread_local std::uint64_t cached_n = 0;
  if (p == cached_p) return cached_n;
  RequireOddPrime(p);
  for (std::uint64_t n = 2; n < p; ++n) {
    if (PowMod(n, (p - 1) / 2, p) == p - 1) {
      cached_p = p;
      cached_n = n;
      return n;
    }
  }
  throw InvariantViolation("no quadratic nonresidue found");
}

// ExtFieldElement ------------------------------------------------------------

namespace {
std::uint64_t CheckedPrime(std::uint64_t p) {
  RequireOddPrime(p);
  return p;
}
}  // namespace

ExtFieldElement::ExtFieldElement(std::uint64_t a, std::uint64_t b, std::uint64_t p)
    : a_(a % CheckedPrime(p)), b_(b % p), p_(p), n_(SmallestNonresidue(p)) {}

ExtFieldElement::ExtFieldElement(const FieldElement& x)
    : a_(x.value()), b_(0), p_(x.modulus()), n_(SmallestNonresidue(x.modulus())) {}

ExtFieldElement ExtFieldElement::WithNonresidue(std::uint64_t a, std::uint64_t b, std::uint64_t p,
                                                std::uint64_t nonresidue) {
  RequireOddPrime(p);
  nonresidue %= p;
  if (nonresidue == 0 || PowMod(nonresidue, (p - 1) / 2, p) != p - 1) {
    throw std::invalid_argument(std::to_string(nonresidue) + " is a square mod " +
                                std::to_string(p));
  }
  return ExtFieldElement(a % p, b % p, p, nonresidue, 0);
}

void ExtFieldElement::CheckSameField(const ExtFieldElement& rhs) const {
  if (p_ != rhs.p_ || n_ != rhs.n_) {
    throw std::invalid_argument("extension field elements over different fields");
  }
}

FieldElement ExtFieldElement::BasePart() const {
  if (b_ != 0) throw std::domain_error(ToString() + " is not in the prime field");
  return FieldElement::FromCanonical(a_, p_);
}

ExtFieldElement ExtFieldElement::operator+(const ExtFieldElement& rhs) const {
  CheckSameField(rhs);
  return ExtFieldElement((a_ + rhs.a_) % p_, (b_ + rhs.b_) % p_, p_, n_, 0);
}

ExtFieldElement ExtFieldElement::operator-(const ExtFieldElement& rhs) const {
  CheckSameField(rhs);
  return ExtFieldElement((a_ + p_ - rhs.a_) % p_, (b_ + p_ - rhs.b_) % p_, p_, n_, 0);
}

ExtFieldElement ExtFieldElement::operator*(const ExtFieldElement& rhs) const {
  CheckSameField(rhs);
  // (a + bt)(c + dt) = (ac + n bd) + (ad + bc) t
  const std::uint64_t ac = MulMod(a_, rhs.a_, p_);
  const std::uint64_t bd = MulMod(MulMod(b_, rhs.b_, p_), n_, p_);
  const std::uint64_t ad = MulMod(a_, rhs.b_, p_);
  const std::uint64_t bc = MulMod(b_, rhs.a_, p_);
  return ExtFieldElement((ac + bd) % p_, (ad + bc) % p_, p_, n_, 0);
}

ExtFieldElement ExtFieldElement::operator/(const ExtFieldElement& rhs) const {
  return *this * rhs.Inverse();
}

ExtFieldElement ExtFieldElement::operator-() const {
  return ExtFieldElement((p_ - a_) % p_, (p_ - b_) % p_, p_, n_, 0);
}

ExtFieldElement ExtFieldElement::Inverse() const {
  if (IsZero()) throw std::domain_error("inverse of zero");
  // 1/(a + bt) = (a - bt) / (a^2 - n b^2)
  const std::uint64_t norm =
      (MulMod(a_, a_, p_) + p_ - MulMod(n_, MulMod(b_, b_, p_), p_)) % p_;
  const std::uint64_t inv = PowMod(norm, p_ - 2, p_);
  return ExtFieldElement(MulMod(a_, inv, p_), MulMod((p_ - b_) % p_, inv, p_), p_, n_, 0);
}

ExtFieldElement ExtFieldElement::Pow(std::uint64_t exp) const {
  ExtFieldElement result(1, 0, p_, n_, 0);
  ExtFieldElement base = *this;
  while (exp > 0) {
    if (exp & 1) result *= base;
    base *= base;
    exp >>= 1;
  }
  return result;
}

ExtFieldElement ExtFieldElement::Frobenius() const {
  // t^p = n^((p-1)/2) t = -t
  return ExtFieldElement(a_, (p_ - b_) % p_, p_, n_, 0);
}

std::string ExtFieldElement::ToString() const {
  if (b_ == 0) return std::to_string(a_);
  std::string t = b_ == 1 ? "t" : std::to_string(b_) + "t";
  if (a_ == 0) return t;
  return std::to_string(a_) + "+" + t;
}

std::ostream& operator<<(std::ostream& os, const ExtFieldElement& x) { return os << x.ToString(); }

std::vector<ExtFieldElement> EnumerateExtField(std::uint64_t p) {
  const ExtFieldElement zero(0, 0, p);
  std::vector<ExtFieldElement> out;
  out.reserve(p * p);
  for (std::uint64_t a = 0; a < p; ++a) {
    for (std::uint64_t b = 0; b < p; ++b) {
      out.push_back(ExtFieldElement::WithNonresidue(a, b, p, zero.nonresidue()));
    }
  }
  return out;
}

// ZpRational -----------------------------------------------------------------

ZpRational::ZpRational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw std::invalid_argument("zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  value_ = Rational(numerator, denominator);
}

ZpRational::ZpRational(std::int64_t numerator, std::int64_t denominator, std::uint64_t p)
    : ZpRational(numerator, denominator) {
  RequirePIntegral(p);
}

bool ZpRational::IsPIntegral(std::uint64_t p) const { return denominator() % p != 0; }

const ZpRational& ZpRational::RequirePIntegral(std::uint64_t p) const {
  if (!IsPIntegral(p)) {
    throw ZpViolation(ToString() + " has denominator divisible by " + std::to_string(p));
  }
  return *this;
}

std::string ZpRational::ToString() const {
  std::ostringstream os;
  os << numerator();
  if (denominator() != 1) os << "/" << denominator();
  return os.str();
}

ZpRational ZpRational::Parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return ZpRational(Rational(BigInt(text)));
    const BigInt num(text.substr(0, slash));
    const BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return den < 0 ? ZpRational(Rational(-num, -den)) : ZpRational(Rational(num, den));
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational '" + text + "'");
  }
}

std::ostream& operator<<(std::ostream& os, const ZpRational& x) { return os << x.ToString(); }

// Binomials and levels -------------------------------------------------------

FieldElement BinomModP(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
  RequireOddPrime(p);
  if (k > n) return FieldElement::FromCanonical(0, p);
  std::uint64_t result = 1;
  while (n > 0 || k > 0) {
    const std::uint64_t ni = n % p;
    const std::uint64_t ki = k % p;
    if (ki > ni) return FieldElement::FromCanonical(0, p);
    // C(ni, ki) for digits < p via the multiplicative formula.
    std::uint64_t num = 1;
    std::uint64_t den = 1;
    for (std::uint64_t i = 0; i < ki; ++i) {
      num = MulMod(num, ni - i, p);
      den = MulMod(den, i + 1, p);
    }
    result = MulMod(result, MulMod(num, PowMod(den, p - 2, p), p), p);
    n /= p;
    k /= p;
  }
  return FieldElement::FromCanonical(result, p);
}

unsigned SplittingLevel(std::span<const ZpRational> coefficients, std::uint64_t p) {
  RequireOddPrime(p);
  BigInt lcm = 1;
  for (const auto& b : coefficients) {
    b.RequirePIntegral(p);
    lcm = boost::multiprecision::lcm(lcm, b.denominator());
  }
  if (lcm == 1) return 1;
  // Multiplicative order of p modulo lcm.
  const BigInt pm = BigInt(p) % lcm;
  BigInt power = pm;
  for (unsigned e = 1;; ++e) {
    if (power == 1 % lcm) return e;
    power = (power * pm) % lcm;
    if (e > 1000000) throw InvariantViolation("splitting level search did not terminate");
  }
}

BigInt ScaleToLevel(const ZpRational& b, std::uint64_t p, unsigned e) {
  const Rational scaled = b.value() * Rational(BigInt(IntPow(p, e)) - 1);
  if (boost::multiprecision::denominator(scaled) != 1) {
    throw std::invalid_argument("(p^" + std::to_string(e) + " - 1) * " + b.ToString() +
                                " is not integral");
  }
  return boost::multiprecision::numerator(scaled);
}

}  // namespace fsplit
