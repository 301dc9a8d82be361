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

#ifndef FSPLIT_ARITH_HPP_
#define FSPLIT_ARITH_HPP_

#include <compare>
#include <cstdint>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fsplit {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Raised when a rational with a denominator divisible by the ambient prime
// shows up where only p-integral values are allowed.
class ZpViolation : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised when an internal consistency check fails (an arithmetic bug, not a
// bad input).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

bool IsPrime(std::uint64_t n);

// Throws std::invalid_argument unless p is an odd prime.
void RequireOddPrime(std::uint64_t p);

std::uint64_t MulMod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t PowMod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// p^e, throwing std::overflow_error if it does not fit in 64 bits.
std::uint64_t IntPow(std::uint64_t p, unsigned e);

// Element of F_p. The modulus travels with the value; mixing moduli throws.
class FieldElement {
 public:
  FieldElement(std::int64_t value, std::uint64_t modulus);
  static FieldElement FromCanonical(std::uint64_t value, std::uint64_t modulus) {
    return FieldElement(value, modulus, Unchecked{});
  }

  std::uint64_t value() const { return value_; }
  std::uint64_t modulus() const { return modulus_; }
  bool IsZero() const { return value_ == 0; }

  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const;
  FieldElement operator*(const FieldElement& rhs) const;
  FieldElement operator/(const FieldElement& rhs) const;
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs) { return *this = *this + rhs; }
  FieldElement& operator-=(const FieldElement& rhs) { return *this = *this - rhs; }
  FieldElement& operator*=(const FieldElement& rhs) { return *this = *this * rhs; }

  FieldElement Inverse() const;
  FieldElement Pow(std::uint64_t exp) const;

  // Legendre symbol: 0, 1 or -1.
  int QuadraticCharacter() const;

  bool operator==(const FieldElement& rhs) const = default;

 private:
  struct Unchecked {};
  FieldElement(std::uint64_t value, std::uint64_t modulus, Unchecked)
      : value_(value), modulus_(modulus) {}
  void CheckSameField(const FieldElement& rhs) const;

  std::uint64_t value_;
  std::uint64_t modulus_;
};

std::ostream& operator<<(std::ostream& os, const FieldElement& x);

// Smallest quadratic nonresidue mod p, found by scanning 2, 3, 4, ...
std::uint64_t SmallestNonresidue(std::uint64_t p);

// Element a + b*t of F_{p^2} = F_p[t]/(t^2 - n), where n is the smallest
// quadratic nonresidue mod p. Since n is canonical, elements built for the
// same p by unrelated code are always compatible.
class ExtFieldElement {
 public:
  ExtFieldElement(std::uint64_t a, std::uint64_t b, std::uint64_t p);
  // Embedding of F_p.
  explicit ExtFieldElement(const FieldElement& x);
  // Builds an element over an explicitly given nonresidue (checked).
  static ExtFieldElement WithNonresidue(std::uint64_t a, std::uint64_t b, std::uint64_t p,
                                        std::uint64_t nonresidue);

  std::uint64_t a() const { return a_; }
  std::uint64_t b() const { return b_; }
  std::uint64_t modulus() const { return p_; }
  std::uint64_t nonresidue() const { return n_; }
  bool IsZero() const { return a_ == 0 && b_ == 0; }
  bool InBaseField() const { return b_ == 0; }
  // 1 for elements of F_p, 2 otherwise.
  int Level() const { return b_ == 0 ? 1 : 2; }
  FieldElement BasePart() const;  // throws unless InBaseField()

  ExtFieldElement operator+(const ExtFieldElement& rhs) const;
  ExtFieldElement operator-(const ExtFieldElement& rhs) const;
  ExtFieldElement operator*(const ExtFieldElement& rhs) const;
  ExtFieldElement operator/(const ExtFieldElement& rhs) const;
  ExtFieldElement operator-() const;
  ExtFieldElement& operator+=(const ExtFieldElement& rhs) { return *this = *this + rhs; }
  ExtFieldElement& operator-=(const ExtFieldElement& rhs) { return *this = *this - rhs; }
  ExtFieldElement& operator*=(const ExtFieldElement& rhs) { return *this = *this * rhs; }

  ExtFieldElement Inverse() const;
  ExtFieldElement Pow(std::uint64_t exp) const;
  // x -> x^p.
  ExtFieldElement Frobenius() const;

  bool operator==(const ExtFieldElement& rhs) const = default;
  // Lexicographic on (a, b); only meaningful within one field.
  auto operator<=>(const ExtFieldElement& rhs) const {
    if (auto c = a_ <=> rhs.a_; c != 0) return c;
    return b_ <=> rhs.b_;
  }

  std::string ToString() const;

 private:
  ExtFieldElement(std::uint64_t a, std::uint64_t b, std::uint64_t p, std::uint64_t n, int)
      : a_(a), b_(b), p_(p), n_(n) {}
  void CheckSameField(const ExtFieldElement& rhs) const;

  std::uint64_t a_;
  std::uint64_t b_;
  std::uint64_t p_;
  std::uint64_t n_;
};

std::ostream& operator<<(std::ostream& os, const ExtFieldElement& x);

// All p^2 elements of F_{p^2}, ordered by (a, b).
std::vector<ExtFieldElement> EnumerateExtField(std::uint64_t p);

// Exact rational whose denominator is prime to a fixed ambient prime (a
// Z_(p)-coefficient). Always stored in lowest terms with positive denominator.
class ZpRational {
 public:
  ZpRational() = default;
  ZpRational(std::int64_t numerator, std::int64_t denominator = 1);
  explicit ZpRational(const Rational& value) : value_(value) {}
  // Builds and checks p-integrality in one go.
  ZpRational(std::int64_t numerator, std::int64_t denominator, std::uint64_t p);

  const Rational& value() const { return value_; }
  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }

  bool IsPIntegral(std::uint64_t p) const;
  // Throws ZpViolation if p divides the denominator.
  const ZpRational& RequirePIntegral(std::uint64_t p) const;
  bool IsIntegral() const { return denominator() == 1; }

  ZpRational operator+(const ZpRational& rhs) const { return ZpRational(value_ + rhs.value_); }
  ZpRational operator-(const ZpRational& rhs) const { return ZpRational(value_ - rhs.value_); }
  ZpRational operator*(const ZpRational& rhs) const { return ZpRational(value_ * rhs.value_); }
  ZpRational operator-() const { return ZpRational(Rational(-value_)); }

  bool operator==(const ZpRational& rhs) const { return value_ == rhs.value_; }
  bool operator<(const ZpRational& rhs) const { return value_ < rhs.value_; }
  bool operator<=(const ZpRational& rhs) const { return value_ <= rhs.value_; }
  bool operator>(const ZpRational& rhs) const { return value_ > rhs.value_; }
  bool operator>=(const ZpRational& rhs) const { return value_ >= rhs.value_; }

  std::string ToString() const;
  // Parses "a" or "a/b".
  static ZpRational Parse(const std::string& text);

 private:
  Rational value_{0};
};

std::ostream& operator<<(std::ostream& os, const ZpRational& x);

// C(n, k) mod p via Lucas' theorem.
FieldElement BinomModP(std::uint64_t n, std::uint64_t k, std::uint64_t p);

// Smallest e >= 1 with (p^e - 1) * b integral for every b.
unsigned SplittingLevel(std::span<const ZpRational> coefficients, std::uint64_t p);

// (p^e - 1) * b as an exact integer; throws if not integral.
BigInt ScaleToLevel(const ZpRational& b, std::uint64_t p, unsigned e);

}  // namespace fsplit

#endif  // FSPLIT_ARITH_HPP_
