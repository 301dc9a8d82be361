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

#include "fsplit/kappa.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "fsplit/catalog_data.hpp"
#include "fsplit/elliptic.hpp"
#include "fsplit/fibration.hpp"
#include "fsplit/gsplit.hpp"

namespace fsplit {
namespace {

std::uint64_t FloorTimes(const Rational& s, std::int64_t m) {
  const BigInt num = boost::multiprecision::numerator(s) * m;
  return static_cast<std::uint64_t>(BigInt(num / boost::multiprecision::denominator(s)));
}

struct CaseSpec {
  std::string kind;
  std::map<std::string, std::int64_t> params;
  std::string variant;
};

CaseSpec ParseCaseId(const std::string& case_id) {
  const auto colon = case_id.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("malformed case id: " + case_id);
  CaseSpec spec;
  spec.kind = case_id.substr(0, colon);
  const std::string rest = case_id.substr(colon + 1);
  if (spec.kind == "product") {
    if (rest != "ordinary" && rest != "supersingular") throw std::invalid_argument("unknown product case: " + rest);
    spec.variant = rest;
    return spec;
  }
  std::stringstream stream(rest);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("malformed case parameter: " + item);
    try {
      spec.params[item.substr(0, eq)] = std::stoll(item.substr(eq + 1));
    } catch (const std::logic_error&) {
      throw std::invalid_argument("malformed case parameter: " + item);
    }
  }
  auto require = [&](const char* key) {
    if (!spec.params.count(key)) throw std::invalid_argument(std::string("case needs ") + key + ": " + case_id);
  };
  if (spec.kind == "legendre") {
    require("p");
    RequireOddPrime(static_cast<std::uint64_t>(std::max<std::int64_t>(spec.params["p"], 0)));
  } else if (spec.kind == "ruled") {
    require("g");
    require("d");
  } else {
    throw std::invalid_argument("unknown case kind: " + spec.kind);
  }
  return spec;
}

DegreeLadder CurveLadder(unsigned genus, std::int64_t deg_m, DegreeZeroKind kind = DegreeZeroKind::kUnspecified) {
  DegreeLadder ladder;
  ladder.genus = genus;
  ladder.deg_m = deg_m;
  ladder.zero_kind = kind;
  return ladder;
}

}  // namespace

H0Interval H0Curve(unsigned genus, std::int64_t degree, DegreeZeroKind kind) {
  const auto g = static_cast<std::int64_t>(genus);
  H0Interval out;
  if (degree < 0) return out;
  if (degree > 2 * g - 2) {
    out.lower = out.upper = static_cast<std::uint64_t>(degree + 1 - g);
    return out;
  }
  if (degree == 0 && kind == DegreeZeroKind::kGeneric) return out;
  if (degree == 0 && kind == DegreeZeroKind::kTrivial) {
    out.lower = out.upper = 1;
    return out;
  }
  out.lower = static_cast<std::uint64_t>(std::max<std::int64_t>(0, degree + 1 - g));
  out.upper = static_cast<std::uint64_t>(1 + degree / 2);
  return out;
}

std::uint64_t DegreeLadder::KMax(std::int64_t m) const { return FloorTimes(k_slope, m); }

std::int64_t DegreeLadder::SummandDegree(std::int64_t m, std::uint64_t k) const {
  return deg_m * m + deg_k * static_cast<std::int64_t>(k) + deg_c;
}

H0Interval DegreeLadder::Evaluate(std::int64_t m) const {
  H0Interval out;
  out.m = m;
  for (std::uint64_t k = 0; k <= KMax(m); ++k) {
    const H0Interval h = H0Curve(genus, SummandDegree(m, k), zero_kind);
    out.lower += h.lower;
    out.upper += h.upper;
  }
  out.lower *= multiplier;
  out.upper *= multiplier;
  return out;
}

DegreeLadder RuledAnticanonicalLadder(unsigned genus, std::int64_t d_D) {
  const auto g = static_cast<std::int64_t>(genus);
  if (genus < 2 || d_D <= 2 * g - 2) throw std::invalid_argument("ruled case needs g >= 2 and deg D > 2g - 2");
  DegreeLadder ladder;
  ladder.genus = genus;
  ladder.k_slope = 2;
  ladder.deg_m = d_D;
  ladder.deg_k = -(2 * g - 2 + d_D);
  return ladder;
}

H0Interval H0RuledAnticanonical(unsigned genus, std::int64_t d_D, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("multiple must be positive");
  return RuledAnticanonicalLadder(genus, d_D).Evaluate(m);
}

std::uint64_t RuledKMax(unsigned genus, std::int64_t d_D, std::int64_t m) {
  const DegreeLadder ladder = RuledAnticanonicalLadder(genus, d_D);
  std::uint64_t k_max = 0;
  for (std::uint64_t k = 0; k <= ladder.KMax(m); ++k) {
    if (H0Curve(genus, ladder.SummandDegree(m, k), ladder.zero_kind).upper > 0) k_max = k;
  }
  return k_max;
}

Rational RuledFixedPartBound(unsigned genus, std::int64_t d_D, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("multiple must be positive");
  const auto k_max = static_cast<std::int64_t>(RuledKMax(genus, d_D, m));
  return Rational(2 * m - k_max, m);
}

std::string KappaValue::ToString() const { return negative_infinity ? "-inf" : std::to_string(order); }

KappaValue KappaValue::Parse(const std::string& text) {
  if (text == "-inf") return NegInf();
  if (text == "0" || text == "1" || text == "2" || text == "3") return Order(std::stoi(text));
  throw std::invalid_argument("malformed Iitaka dimension: " + text);
}

KappaValue operator+(const KappaValue& a, const KappaValue& b) {
  if (a.negative_infinity || b.negative_infinity) return KappaValue::NegInf();
  return KappaValue::Order(a.order + b.order);
}

bool operator<=(const KappaValue& a, const KappaValue& b) {
  if (a.negative_infinity) return true;
  if (b.negative_infinity) return false;
  return a.order <= b.order;
}

KappaResult KappaEstimate(const DegreeLadder& ladder, std::int64_t m_max) {
  if (m_max < 1) throw std::invalid_argument("empty range of multiples");
  if (ladder.k_slope < 0) throw std::invalid_argument("negative ladder slope");
  KappaResult result;
  for (std::int64_t m = 1; m <= m_max; ++m) result.evidence.push_back(ladder.Evaluate(m));

  // Every summand degree is at most slope_max * m + deg_c.
  const Rational slope_max = Rational(ladder.deg_m) + Rational(std::max<std::int64_t>(0, ladder.deg_k)) * ladder.k_slope;
  const Rational bound_at_1 = slope_max + Rational(ladder.deg_c);
  const bool generic_zero = ladder.zero_kind == DegreeZeroKind::kGeneric;
  if (slope_max <= 0 && (bound_at_1 < 0 || (bound_at_1 == 0 && generic_zero))) {
    result.value = result.lower = result.upper = KappaValue::NegInf();
    result.certified = true;
    result.reason = "every summand degree is negative for all m";
    return result;
  }

  std::optional<int> order;
  if (ladder.deg_m > 0 && ladder.k_slope > 0) {
    order = 2;
    result.reason = "linearly many summands of linearly growing degree";
  } else if (ladder.deg_m > 0 && ladder.k_slope == 0) {
    order = 1;
    result.reason = "single summand of linearly growing degree";
  } else if (ladder.deg_m == 0 && ladder.k_slope == 0 && H0Curve(ladder.genus, ladder.deg_c, ladder.zero_kind).lower > 0) {
    order = 0;
    result.reason = "constant degree with sections";
  }

  const bool any_sections = std::any_of(result.evidence.begin(), result.evidence.end(),
                                        [](const H0Interval& h) { return h.lower > 0; });
  result.lower = any_sections ? KappaValue::Order(0) : KappaValue::NegInf();
  result.upper = KappaValue::Order(ladder.k_slope > 0 ? 2 : 1);
  if (!order) {
    result.value = result.lower;
    result.reason = "degree ladder outside the decidable regimes";
    return result;
  }

  // Tail sanity on [m_max/2, m_max].
  if (m_max >= 4) {
    const H0Interval& half = result.evidence[static_cast<std::size_t>(m_max / 2 - 1)];
    const H0Interval& last = result.evidence.back();
    const auto mh = static_cast<double>(m_max / 2);
    const auto mm = static_cast<double>(m_max);
    bool ok = half.lower > 0 && last.lower > 0;
    if (*order == 0) ok = ok && half.upper == last.upper;
    if (*order >= 1) ok = ok && last.lower > half.lower;
    if (*order == 1) ok = ok && static_cast<double>(last.upper) / (mm * mm) < static_cast<double>(half.upper) / (mh * mh);
    if (*order == 2) ok = ok && static_cast<double>(last.lower) / mm > static_cast<double>(half.lower) / mh;
    if (!ok) {
      result.value = result.lower;
      result.reason = "h0 table contradicts the growth order " + std::to_string(*order);
      return result;
    }
  }
  result.value = result.lower = result.upper = KappaValue::Order(*order);
  result.certified = true;
  return result;
}

std::vector<CatalogEntry> ParseCatalog(std::istream& in) {
  std::vector<CatalogEntry> entries;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream row(line);
    std::vector<std::string> cols;
    for (std::string col; row >> col;) cols.push_back(col);
    if (cols.empty()) continue;
    if (cols.size() != 8) {
      throw std::invalid_argument("catalog line " + std::to_string(line_no) + ": expected 8 columns");
    }
    try {
      entries.push_back({cols[0], KappaValue::Parse(cols[1]), KappaValue::Parse(cols[2]), KappaValue::Parse(cols[3]),
                         cols[4], cols[5], cols[6], cols[7]});
    } catch (const std::invalid_argument& err) {
      throw std::invalid_argument("catalog line " + std::to_string(line_no) + ": " + err.what());
    }
  }
  return entries;
}

const std::vector<CatalogEntry>& DefaultCatalog() {
  static const std::vector<CatalogEntry> catalog = [] {
    std::istringstream in(kCatalogText);
    return ParseCatalog(in);
  }();
  return catalog;
}

SuperadditivityReport CheckSuperadditivity(const std::string& case_id, const std::vector<CatalogEntry>& registry,
                                           std::int64_t m_max) {
  const CaseSpec spec = ParseCaseId(case_id);
  SuperadditivityReport report;
  report.case_id = case_id;
  report.m_max = m_max;
  const Budgets budgets;

  DegreeLadder total;
  DegreeLadder fiber;
  DegreeLadder base;
  if (spec.kind == "legendre") {
    // -K of the surface is the pullback of a point class: h0 = m + 1.
    const auto p = static_cast<std::uint64_t>(spec.params.at("p"));
    total = CurveLadder(0, 1);
    fiber = CurveLadder(1, 0, DegreeZeroKind::kTrivial);
    base = CurveLadder(0, 2);
    report.kgfr = IsKgfrLegendre(p, budgets).overall == KgfrStatus::kKgfr;
  } else if (spec.kind == "ruled") {
    const auto g = spec.params.at("g");
    const auto d = spec.params.at("d");
    if (g < 2) throw std::invalid_argument("ruled case needs g >= 2");
    total = RuledAnticanonicalLadder(static_cast<unsigned>(g), d);
    fiber = CurveLadder(0, 2);
    base = CurveLadder(static_cast<unsigned>(g), -(2 * g - 2));
    report.fixed_part_bound = RuledFixedPartBound(static_cast<unsigned>(g), d, m_max);
    report.fixed_part_flag = *report.fixed_part_bound >= 1;
  } else {
    // Elliptic curve E times P^1: h0(-mK) = h0(E, O) h0(P^1, O(2m)).
    const bool ordinary = spec.variant == "ordinary";
    const std::uint64_t p = ordinary ? 5 : 3;
    const LegendreCurve curve(ExtFieldElement(2, 0, p));
    total = CurveLadder(0, 2);
    total.multiplier = H0Curve(1, 0, DegreeZeroKind::kTrivial).lower;
    fiber = CurveLadder(1, 0, DegreeZeroKind::kTrivial);
    base = CurveLadder(0, 2);
    const bool fiber_gfs = ClassifyCurveKgfr({1, curve}).kgfr;
    const bool base_gfr = GfrP1Bounded(P1Divisor(p), budgets.e_max, budgets.perturbation_budget).status ==
                          VerdictStatus::kYes;
    report.kgfr = fiber_gfs && base_gfr;
  }
  report.total = KappaEstimate(total, m_max);
  report.fiber = KappaEstimate(fiber, m_max);
  report.base = KappaEstimate(base, m_max);
  report.inconclusive = !(report.total.certified && report.fiber.certified && report.base.certified);
  if (!report.inconclusive) {
    const KappaValue rhs = report.fiber.value + report.base.value;
    report.inequality_holds = report.total.value <= rhs;
    report.equality = report.total.value == rhs;
  }

  for (const auto& entry : registry) {
    if (entry.case_id == case_id) report.expected = entry;
  }
  if (report.expected) {
    const CatalogEntry& want = *report.expected;
    auto check = [&](bool ok, const std::string& what) {
      if (!ok) report.mismatches.push_back(what);
    };
    if (report.inconclusive) report.mismatches.push_back("inconclusive: uncertified Iitaka dimension");
    check(report.total.value == want.kappa_total, "kappa_total");
    check(report.fiber.value == want.kappa_fiber, "kappa_fiber");
    check(report.base.value == want.kappa_base, "kappa_base");
    check((report.inequality_holds ? "holds" : "fails") == want.inequality, "inequality");
    check((report.equality ? "yes" : "no") == want.equality, "equality");
    check((report.fixed_part_flag ? "fired" : "not-fired") == want.fixed_part_flag, "fixed_part_flag");
  }
  return report;
}

}  // namespace fsplit
