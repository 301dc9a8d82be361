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

// Plain-text polynomial grammar:
//
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ['^' integer]
//   atom   := integer | variable | '(' expr ')' | '-' factor
//
// Whitespace is ignored. Integer literals of any length are reduced mod p.

#include <cctype>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "fsplit/mpoly.hpp"

namespace fsplit {
namespace {

class Parser {
 public:
  Parser(const std::string& text, const std::vector<std::string>& vars, std::uint64_t p)
      : text_(text), vars_(vars), p_(p) {}

  MPoly Parse() {
    MPoly f = Expr();
    SkipSpace();
    if (pos_ != text_.size()) Fail("unexpected character");
    return f;
  }

 private:
  [[noreturn]] void Fail(const std::string& what) const {
    throw std::invalid_argument("malformed polynomial '" + text_ + "': " + what + " at offset " +
                                std::to_string(pos_));
  }

  void SkipSpace() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool Accept(char c) {
    SkipSpace();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MPoly Expr() {
    MPoly f = Term();
    for (;;) {
      if (Accept('+')) {
        f += Term();
      } else if (Accept('-')) {
        f -= Term();
      } else {
        return f;
      }
    }
  }

  MPoly Term() {
    MPoly f = Factor();
    while (Accept('*')) f *= Factor();
    return f;
  }

  MPoly Factor() {
    MPoly base = Atom();
    if (Accept('^')) {
      SkipSpace();
      return base.Pow(Exponent());
    }
    return base;
  }

  std::uint64_t Exponent() {
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      Fail("expected a nonnegative integer exponent");
    }
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::uint64_t digit = text_[pos_] - '0';
      if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) Fail("exponent overflow");
      value = value * 10 + digit;
      ++pos_;
    }
    return value;
  }

  MPoly Atom() {
    SkipSpace();
    if (pos_ >= text_.size()) Fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MPoly f = Expr();
      if (!Accept(')')) Fail("expected ')'");
      return f;
    }
    if (c == '-') {
      ++pos_;
      return -Factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t value = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        value = (MulMod(value, 10, p_) + static_cast<std::uint64_t>(text_[pos_] - '0')) % p_;
        ++pos_;
      }
      MPoly f(p_, vars_.size());
      f.AddTerm(Exponents(vars_.size(), 0), FieldElement::FromCanonical(value, p_));
      return f;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      const std::string name = text_.substr(start, pos_ - start);
      for (std::size_t i = 0; i < vars_.size(); ++i) {
        if (vars_[i] == name) return MPoly::Variable(p_, vars_.size(), i);
      }
      pos_ = start;
      Fail("unknown variable '" + name + "'");
    }
    Fail("unexpected character");
  }

  const std::string& text_;
  const std::vector<std::string>& vars_;
  std::uint64_t p_;
  std::size_t pos_ = 0;
};

}  // namespace

MPoly ParsePoly(const std::string& text, const std::vector<std::string>& vars, std::uint64_t p) {
  RequireOddPrime(p);
  if (vars.empty()) throw std::invalid_argument("no variables declared");
  return Parser(text, vars, p).Parse();
}

std::string FormatPoly(const MPoly& f, const std::vector<std::string>& vars) {
  if (vars.size() != f.nvars()) throw std::invalid_argument("variable list has wrong length");
  if (f.IsZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
    const auto& [exps, c] = *it;
    if (!first) os << " + ";
    first = false;
    std::ostringstream mono;
    bool any = false;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (exps[i] == 0) continue;
      if (any) mono << "*";
      any = true;
      mono << vars[i];
      if (exps[i] > 1) mono << "^" << exps[i];
    }
    if (!any) {
      os << c;
    } else if (c == 1) {
      os << mono.str();
    } else {
      os << c << "*" << mono.str();
    }
  }
  return os.str();
}

}  // namespace fsplit
