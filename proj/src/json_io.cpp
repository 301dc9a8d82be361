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

#include "fsplit/json_io.hpp"

#include <stdexcept>

namespace fsplit {
namespace {

Json OptionalString(const std::optional<std::string>& s) { return s ? Json(*s) : Json(nullptr); }

std::int64_t ToInt64(const BigInt& x) { return x.convert_to<std::int64_t>(); }

}  // namespace

Json ToJson(const ZpRational& x) { return x.ToString(); }

Json ToJson(const P1Divisor& divisor) {
  Json out = Json::array();
  for (const auto& entry : divisor.entries()) {
    out.push_back({{"point", entry.point.ToString()},
                   {"num", ToInt64(entry.coeff.numerator())},
                   {"den", ToInt64(entry.coeff.denominator())}});
  }
  return out;
}

Json ToJson(const SplittingCertificate& cert) {
  return {{"level", cert.level},
          {"q", cert.q},
          {"j", cert.j},
          {"coefficient", cert.coefficient ? Json(cert.coefficient->ToString()) : Json(nullptr)}};
}

Json ToJson(const LevelResult& level) {
  return {{"split", level.split},
          {"level", level.level},
          {"budget", level.budget},
          {"certificate", level.certificate ? ToJson(*level.certificate) : Json(nullptr)}};
}

Json ToJson(const GfsVerdict& verdict) {
  return {{"status", ToString(verdict.status)},
          {"certificate", verdict.certificate ? ToJson(*verdict.certificate) : Json(nullptr)},
          {"levels_tested", verdict.levels_tested},
          {"reason", verdict.reason}};
}

Json ToJson(const GfrVerdict& verdict) {
  Json certs = Json::array();
  for (const auto& c : verdict.certificates) {
    certs.push_back({{"point", c.point ? c.point->ToString() : "generic"}, {"certificate", ToJson(c.certificate)}});
  }
  return {{"status", ToString(verdict.status)},
          {"reason", verdict.reason},
          {"family_size", verdict.family_size},
          {"budget", verdict.budget},
          {"e_max", verdict.e_max},
          {"undecided_point", OptionalString(verdict.undecided_point)},
          {"certificates", certs}};
}

Json ToJson(const SupersingularReport& report) {
  Json roots = Json::array();
  for (const auto& r : report.roots) roots.push_back({{"value", r.value.ToString()}, {"multiplicity", r.multiplicity}});
  return {{"prime", report.prime},
          {"poly", FormatPoly(report.poly, {"l"})},
          {"degree", report.poly.TotalDegree()},
          {"roots", roots},
          {"root_count", report.root_count},
          {"expected_count", (report.prime - 1) / 2},
          {"squarefree", report.squarefree},
          {"closed_form_agrees", report.closed_form_agrees}};
}

Json ToJson(const FDiscriminantReport& report) {
  Json table = Json::array();
  for (const auto& row : report.fiber_table) {
    table.push_back({{"point", row.point.ToString()}, {"type", ToString(row.type)}, {"coeff", ToJson(row.coeff)}});
  }
  return {{"prime", report.prime},
          {"bY", ToJson(report.divisor)},
          {"degree", ToJson(report.degree)},
          {"degree_identity", report.degree_identity},
          {"fiber_table", table}};
}

Json ToJson(const KgfrVerdict& verdict) {
  return {{"prime", verdict.prime},
          {"fiber_gfs", verdict.fiber_gfs},
          {"base_gfr", ToJson(verdict.base_gfr)},
          {"overall", ToString(verdict.overall)}};
}

Json ToJson(const ScanReport& report) {
  Json rows = Json::array();
  for (const auto& row : report.rows) {
    rows.push_back({{"prime", row.prime},
                    {"fiber_gfs", row.fiber_gfs},
                    {"base_gfr", ToString(row.base_gfr.status)},
                    {"overall", ToString(row.overall)},
                    {"reason", row.base_gfr.reason}});
  }
  const std::size_t n = report.rows.size();
  auto fraction = [n](std::size_t k) { return n == 0 ? Json(nullptr) : Json(ToJson(ZpRational(Rational(k, n)))); };
  return {{"range", {report.lo, report.hi}},
          {"primes", n},
          {"counts", {{"KGFR", report.kgfr}, {"not-KGFR", report.not_kgfr}, {"unknown", report.unknown}}},
          {"fractions",
           {{"KGFR", fraction(report.kgfr)}, {"not-KGFR", fraction(report.not_kgfr)}, {"unknown", fraction(report.unknown)}}},
          {"rows", rows}};
}

Json ToJson(const CbfCheck& check) {
  return {{"prime", check.prime},
          {"total_space", ToString(check.total)},
          {"base_couple", ToString(check.base)},
          {"decided", check.decided},
          {"agree", check.agree}};
}

Json ToJson(const Q0S0Result& result) {
  return {{"q0", result.q0}, {"s0", result.s0}, {"levels", result.levels}, {"equal", result.equal}};
}

Json ToJson(const CoverCheckResult& result) {
  return {{"diagram_commutes", result.diagram_commutes},
          {"basis_checked", result.basis_checked},
          {"source_boundary", ToJson(result.source_boundary)},
          {"target_boundary", ToJson(result.target_boundary)},
          {"source_gfs", result.source_gfs},
          {"target_gfs", result.target_gfs},
          {"verdicts_agree", result.verdicts_agree}};
}

Json ToJson(const BigradedResult& result, const std::vector<std::string>& second_group_vars) {
  return {{"split", result.split},
          {"bidegree", {result.degree_first, result.degree_second}},
          {"witness", result.witness ? Json(*result.witness) : Json(nullptr)},
          {"window_form",
           result.window_form ? Json(FormatPoly(*result.window_form, second_group_vars)) : Json(nullptr)}};
}

Json ToJson(const NuSequence& seq, const std::vector<std::string>& vars) {
  Json values = Json::array();
  for (const auto& v : seq.values) values.push_back({{"e", v.e}, {"q", v.q}, {"nu", v.nu}});
  return {{"poly", FormatPoly(seq.poly, vars)},
          {"prime", seq.prime},
          {"values", values},
          {"fpt_lower", ToJson(ZpRational(seq.fpt_lower))},
          {"fpt_upper", ToJson(ZpRational(seq.fpt_upper))}};
}

Json ToJson(const H0Interval& h) { return {{"m", h.m}, {"lower", h.lower}, {"upper", h.upper}}; }

Json ToJson(const KappaResult& result) {
  Json evidence = Json::array();
  for (const auto& h : result.evidence) evidence.push_back(ToJson(h));
  return {{"value", result.value.ToString()},
          {"certified", result.certified},
          {"interval", {result.lower.ToString(), result.upper.ToString()}},
          {"reason", result.reason},
          {"evidence", evidence}};
}

Json ToJson(const CatalogEntry& entry) {
  return {{"case_id", entry.case_id},
          {"kappa_total", entry.kappa_total.ToString()},
          {"kappa_fiber", entry.kappa_fiber.ToString()},
          {"kappa_base", entry.kappa_base.ToString()},
          {"inequality", entry.inequality},
          {"equality", entry.equality},
          {"fixed_part_flag", entry.fixed_part_flag},
          {"provenance", entry.provenance}};
}

Json ToJson(const SuperadditivityReport& report) {
  return {{"case_id", report.case_id},
          {"m_max", report.m_max},
          {"kappa_total", ToJson(report.total)},
          {"kappa_fiber", ToJson(report.fiber)},
          {"kappa_base", ToJson(report.base)},
          {"inconclusive", report.inconclusive},
          {"inequality", report.inequality_holds ? "holds" : "fails"},
          {"equality", report.equality},
          {"fixed_part_bound",
           report.fixed_part_bound ? Json(ToJson(ZpRational(*report.fixed_part_bound))) : Json(nullptr)},
          {"fixed_part_flag", report.fixed_part_flag},
          {"kgfr", report.kgfr ? Json(*report.kgfr) : Json(nullptr)},
          {"expected", report.expected ? ToJson(*report.expected) : Json(nullptr)},
          {"mismatches", report.mismatches}};
}

Json ToJson(const Budgets& budgets) {
  return {{"emax", budgets.e_max},
          {"perturbation_budget", budgets.perturbation_budget},
          {"bigraded_pmax", budgets.bigraded_pmax}};
}

P1Divisor DivisorFromJson(const Json& j, std::uint64_t p) {
  std::vector<DivisorEntry> entries;
  for (const auto& item : j) {
    entries.push_back({P1Point::Parse(item.at("point").get<std::string>(), p),
                       ZpRational(item.at("num").get<std::int64_t>(), item.at("den").get<std::int64_t>())});
  }
  return P1Divisor(p, std::move(entries));
}

FDiscriminantReport FDiscriminantFromJson(const Json& j) {
  const auto p = j.at("prime").get<std::uint64_t>();
  std::vector<FiberRow> table;
  for (const auto& row : j.at("fiber_table")) {
    table.push_back({P1Point::Parse(row.at("point").get<std::string>(), p),
                     ParseFiberType(row.at("type").get<std::string>()),
                     ZpRational::Parse(row.at("coeff").get<std::string>())});
  }
  return FDiscriminantReport{p, DivisorFromJson(j.at("bY"), p), std::move(table),
                             ZpRational::Parse(j.at("degree").get<std::string>()),
                             j.at("degree_identity").get<bool>()};
}

}  // namespace fsplit
