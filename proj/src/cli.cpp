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

#include "fsplit/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "CLI11.hpp"

#include "fsplit/elliptic.hpp"
#include "fsplit/fedder.hpp"
#include "fsplit/fibration.hpp"
#include "fsplit/gsplit.hpp"
#include "fsplit/json_io.hpp"
#include "fsplit/kappa.hpp"

namespace fsplit {
namespace {

struct Options {
  std::uint64_t p = 0;
  std::string lambda;
  unsigned e = 1;
  unsigned emax = 2;
  std::string poly;
  std::string vars;
  bool json = false;
  bool strict = false;
  bool timings = false;
  bool certificates = false;
  std::string range;
  std::uint64_t pmax = 31;
  std::string case_id;
  std::string out;
  std::string divisor;
  std::string cover = "square";
  std::string registry;
  unsigned threads = 0;
  std::size_t budget = 4096;
  std::uint64_t bigraded_pmax = 13;
  std::int64_t mmax = 20;
  unsigned genus = 0;
  std::int64_t deg_m = 0;
  std::int64_t deg_k = 0;
  std::int64_t deg_c = 0;
  std::string slope = "0";
  std::string zero = "unspecified";
  std::string ruled;
};

struct Outcome {
  Json inputs = Json::object();
  Json result;
  bool unknown = false;
  bool mismatch = false;
  std::optional<std::string> csv;
};

Budgets MakeBudgets(const Options& o) { return Budgets{o.emax, o.budget, o.bigraded_pmax}; }

std::vector<std::string> SplitList(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, sep)) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// "x,y;l,m" -> variables and group sizes.
std::pair<std::vector<std::string>, std::vector<std::size_t>> ParseVarGroups(const std::string& text) {
  std::vector<std::string> vars;
  std::vector<std::size_t> sizes;
  for (const auto& group : SplitList(text, ';')) {
    auto names = SplitList(group, ',');
    if (names.empty()) throw std::invalid_argument("empty variable group");
    sizes.push_back(names.size());
    vars.insert(vars.end(), names.begin(), names.end());
  }
  if (vars.empty()) throw std::invalid_argument("--vars is required");
  return {vars, sizes};
}

std::uint64_t RequirePrime(const Options& o) {
  if (o.p == 0) throw std::invalid_argument("--p is required");
  RequireOddPrime(o.p);
  return o.p;
}

ExtFieldElement ParseLambda(const Options& o) {
  if (o.lambda.empty()) throw std::invalid_argument("--lambda is required");
  const P1Point point = P1Point::Parse(o.lambda, o.p);
  if (point.IsInfinity()) throw std::invalid_argument("lambda must be finite");
  return point.value();
}

MPoly ParsePolyOption(const Options& o, const std::vector<std::string>& vars) {
  if (o.poly.empty()) throw std::invalid_argument("--poly is required");
  return ParsePoly(o.poly, vars, o.p);
}

std::pair<std::uint64_t, std::uint64_t> ParseRange(const std::string& text, std::uint64_t pmax) {
  if (text.empty()) return {3, pmax};
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw std::invalid_argument("--range expects a..b");
  try {
    std::size_t used = 0;
    const std::string lo_text = text.substr(0, dots);
    const std::string hi_text = text.substr(dots + 2);
    const auto lo = std::stoull(lo_text, &used);
    if (used != lo_text.size()) throw std::invalid_argument("bad range");
    const auto hi = std::stoull(hi_text, &used);
    if (used != hi_text.size()) throw std::invalid_argument("bad range");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw std::invalid_argument("--range expects a..b with nonnegative integers");
  }
}

Outcome CmdHasse(const Options& o) {
  Outcome out;
  const std::uint64_t p = RequirePrime(o);
  out.inputs = {{"p", p}};
  const auto table = HasseTable(p);
  if (!o.lambda.empty()) {
    const ExtFieldElement lambda = ParseLambda(o);
    out.inputs["lambda"] = lambda.ToString();
    const LegendreCurve curve(lambda);
    const ExtFieldElement closed = HasseClosed(lambda);
    const ExtFieldElement coeff = HasseCoeff(lambda);
    out.result = {{"lambda", lambda.ToString()},
                  {"hasse_closed", closed.ToString()},
                  {"hasse_coeff", coeff.ToString()},
                  {"agree", closed == coeff},
                  {"ordinary", !closed.IsZero()},
                  {"count", lambda.InBaseField() ? Json(CountPoints(curve)) : Json(nullptr)},
                  {"supersingular_by_count",
                   lambda.InBaseField() && p >= 5 ? Json(IsSupersingularByCount(curve)) : Json(nullptr)}};
  } else {
    Json rows = Json::array();
    for (const auto& row : table) {
      rows.push_back({{"lambda", row.lambda}, {"hasse", row.hasse}, {"count", row.count}, {"ordinary", row.ordinary}});
    }
    out.result = {{"rows", rows}};
  }
  std::ostringstream csv;
  WriteHasseCsv(csv, table);
  out.csv = csv.str();
  return out;
}

Outcome CmdSupersingular(const Options& o) {
  Outcome out;
  out.inputs = {{"p", RequirePrime(o)}};
  out.result = ToJson(ComputeSupersingularReport(o.p));
  return out;
}

Outcome CmdFdisc(const Options& o) {
  Outcome out;
  out.inputs = {{"p", RequirePrime(o)}};
  out.result = ToJson(FDiscriminantLegendre(o.p));
  const KgfrVerdict kgfr = IsKgfrLegendre(o.p, MakeBudgets(o));
  out.result["kgfr"] = {{"fiber_gfs", kgfr.fiber_gfs},
                        {"base_gfr", ToString(kgfr.base_gfr.status)},
                        {"overall", ToString(kgfr.overall)}};
  out.unknown = kgfr.overall == KgfrStatus::kUnknown;
  return out;
}

Outcome CmdFedderNu(const Options& o) {
  Outcome out;
  RequirePrime(o);
  const auto [vars, sizes] = ParseVarGroups(o.vars);
  const MPoly f = ParsePolyOption(o, vars);
  out.inputs = {{"p", o.p}, {"poly", FormatPoly(f, vars)}, {"vars", vars}, {"e", o.e}};
  const std::uint64_t nu = Nu(f, o.e);
  const std::uint64_t nu_bisect = NuBisect(f, o.e);
  out.result = {{"q", IntPow(o.p, o.e)}, {"nu", nu}, {"nu_bisect", nu_bisect}, {"agree", nu == nu_bisect}};
  return out;
}

Outcome CmdFpt(const Options& o) {
  Outcome out;
  RequirePrime(o);
  const auto [vars, sizes] = ParseVarGroups(o.vars);
  const MPoly f = ParsePolyOption(o, vars);
  out.inputs = {{"p", o.p}, {"poly", FormatPoly(f, vars)}, {"vars", vars}, {"emax", o.emax}};
  out.result = ToJson(FptBounds(f, o.emax), vars);
  Json pure = Json::array();
  for (unsigned e = 1; e <= o.emax; ++e) pure.push_back(IsFPurePair(f, ZpRational(1), e));
  out.result["fpure_at_1"] = pure;
  return out;
}

P1Divisor ParseDivisorOption(const Options& o) { return P1Divisor::Parse(o.divisor, o.p); }

Outcome CmdGfsP1(const Options& o, bool level_given) {
  Outcome out;
  RequirePrime(o);
  const P1Divisor b = ParseDivisorOption(o);
  out.inputs = {{"p", o.p}, {"divisor", b.ToString()}, {"emax", o.emax}};
  const GfsVerdict verdict = GfsP1(b, o.emax);
  out.result = ToJson(verdict);
  out.result["degree"] = ToJson(b.Degree());
  if (level_given) {
    out.inputs["e"] = o.e;
    out.result["level"] = ToJson(GfsP1Level(b, o.e));
  }
  out.unknown = verdict.status == VerdictStatus::kUnknown;
  return out;
}

Outcome CmdGfrP1(const Options& o) {
  Outcome out;
  RequirePrime(o);
  const P1Divisor b = ParseDivisorOption(o);
  out.inputs = {{"p", o.p}, {"divisor", b.ToString()}};
  const GfrVerdict verdict = GfrP1Bounded(b, o.emax, o.budget);
  out.result = ToJson(verdict);
  out.result["certificate_count"] = verdict.certificates.size();
  if (!o.certificates) out.result.erase("certificates");
  out.unknown = verdict.status == VerdictStatus::kUnknown;
  return out;
}

Outcome CmdGfsCy(const Options& o) {
  Outcome out;
  RequirePrime(o);
  const auto [vars, sizes] = ParseVarGroups(o.vars);
  const MPoly f = ParsePolyOption(o, vars);
  out.inputs = {{"p", o.p}, {"poly", FormatPoly(f, vars)}, {"vars", vars}};
  out.result = {{"split", GfsCyHypersurface(f)}};
  return out;
}

Outcome CmdGfsBigraded(const Options& o) {
  Outcome out;
  RequirePrime(o);
  auto [vars, sizes] = ParseVarGroups(o.vars.empty() ? "x,y,z;l,m" : o.vars);
  if (sizes.size() != 2) throw std::invalid_argument("--vars needs two groups separated by ';'");
  const MPoly f = o.poly.empty() && o.vars.empty() ? LegendreSurfaceEquation(o.p) : ParsePolyOption(o, vars);
  out.inputs = {{"p", o.p}, {"poly", FormatPoly(f, vars)}, {"vars", vars}, {"groups", sizes}};
  const BigradedResult result = GfsBigradedHypersurface(f, sizes);
  const std::vector<std::string> second(vars.begin() + static_cast<std::ptrdiff_t>(sizes[0]), vars.end());
  out.result = ToJson(result, second);
  return out;
}

Outcome CmdCoverCheck(const Options& o) {
  Outcome out;
  RequirePrime(o);
  CoverMap cover;
  P1Divisor target(o.p);
  if (o.cover == "square") {
    cover.kind = CoverKind::kSquare;
    target = ParseDivisorOption(o);
  } else if (o.cover == "legendre") {
    cover.kind = CoverKind::kLegendre;
    cover.lambda = ParseLambda(o);
    target = o.divisor.empty() ? P1Divisor::Parse("1/2@0,1/2@1,1/2@" + cover.lambda->ToString() + ",1/2@inf", o.p)
                               : ParseDivisorOption(o);
  } else {
    throw std::invalid_argument("--cover must be square or legendre");
  }
  out.inputs = {{"p", o.p}, {"cover", o.cover}, {"divisor", target.ToString()}, {"e", o.e}};
  if (cover.lambda) out.inputs["lambda"] = cover.lambda->ToString();
  out.result = ToJson(PushforwardSplittingCheck(cover, target, o.e));
  return out;
}

Outcome CmdKgfr(const Options& o) {
  Outcome out;
  out.inputs = {{"p", RequirePrime(o)}};
  const KgfrVerdict verdict = IsKgfrLegendre(o.p, MakeBudgets(o));
  out.result = ToJson(verdict);
  if (!o.certificates) out.result["base_gfr"].erase("certificates");
  out.unknown = verdict.overall == KgfrStatus::kUnknown;
  return out;
}

Outcome CmdScan(const Options& o) {
  Outcome out;
  const auto [lo, hi] = ParseRange(o.range, o.pmax);
  out.inputs = {{"range", {lo, hi}}};
  const unsigned threads = o.threads > 0 ? o.threads : std::max(1u, std::thread::hardware_concurrency());
  const ScanReport report = PrimeScan(lo, hi, MakeBudgets(o), threads);
  out.result = ToJson(report);
  out.unknown = report.unknown > 0;
  std::ostringstream csv;
  csv << "p,fiber_gfs,base_gfr,overall\n";
  for (const auto& row : report.rows) {
    csv << row.prime << ',' << (row.fiber_gfs ? "true" : "false") << ',' << ToString(row.base_gfr.status) << ','
        << ToString(row.overall) << '\n';
  }
  out.csv = csv.str();
  return out;
}

DegreeZeroKind ParseZeroKind(const std::string& text) {
  if (text == "unspecified") return DegreeZeroKind::kUnspecified;
  if (text == "generic") return DegreeZeroKind::kGeneric;
  if (text == "trivial") return DegreeZeroKind::kTrivial;
  throw std::invalid_argument("--zero must be unspecified, generic or trivial");
}

Outcome CmdKappa(const Options& o) {
  Outcome out;
  DegreeLadder ladder;
  if (!o.ruled.empty()) {
    const auto parts = SplitList(o.ruled, ',');
    if (parts.size() != 2) throw std::invalid_argument("--ruled expects g,d");
    const auto g = std::stoll(parts[0]);
    const auto d = std::stoll(parts[1]);
    if (g < 2) throw std::invalid_argument("ruled case needs g >= 2");
    ladder = RuledAnticanonicalLadder(static_cast<unsigned>(g), d);
    out.inputs = {{"ruled", {g, d}}, {"mmax", o.mmax}};
    out.result = ToJson(KappaEstimate(ladder, o.mmax));
    out.result["k_max"] = RuledKMax(static_cast<unsigned>(g), d, o.mmax);
    out.result["fixed_part_bound"] = ToJson(ZpRational(RuledFixedPartBound(static_cast<unsigned>(g), d, o.mmax)));
  } else {
    ladder.genus = o.genus;
    ladder.k_slope = ZpRational::Parse(o.slope).value();
    ladder.deg_m = o.deg_m;
    ladder.deg_k = o.deg_k;
    ladder.deg_c = o.deg_c;
    ladder.zero_kind = ParseZeroKind(o.zero);
    out.inputs = {{"genus", o.genus}, {"slope", o.slope}, {"deg_m", o.deg_m}, {"deg_k", o.deg_k},
                  {"deg_c", o.deg_c}, {"zero", o.zero}, {"mmax", o.mmax}};
    out.result = ToJson(KappaEstimate(ladder, o.mmax));
  }
  out.unknown = !out.result["certified"].get<bool>();
  return out;
}

std::string Summarize(const SuperadditivityReport& r) {
  std::string s = "inequality ";
  s += r.inconclusive ? "inconclusive" : (r.inequality_holds ? "holds" : "fails");
  if (r.expected) s += r.mismatches.empty() ? " as expected" : " with mismatches";
  if (r.fixed_part_bound) s += r.fixed_part_flag ? ", hypothesis flag fired" : ", hypothesis flag not fired";
  if (r.equality) s += ", equality";
  return s;
}

Outcome CmdCatalog(const Options& o) {
  Outcome out;
  std::vector<CatalogEntry> registry;
  if (o.registry.empty()) {
    registry = DefaultCatalog();
  } else {
    std::ifstream in(o.registry);
    if (!in) throw std::invalid_argument("cannot open registry " + o.registry);
    registry = ParseCatalog(in);
  }
  std::vector<std::string> ids;
  if (!o.case_id.empty()) {
    ids.push_back(o.case_id);
  } else {
    for (const auto& entry : registry) ids.push_back(entry.case_id);
  }
  out.inputs = {{"cases", ids}, {"registry", o.registry.empty() ? "builtin" : o.registry}, {"mmax", o.mmax}};
  Json cases = Json::array();
  for (const auto& id : ids) {
    const SuperadditivityReport report = CheckSuperadditivity(id, registry, o.mmax);
    Json j = ToJson(report);
    j["summary"] = Summarize(report);
    cases.push_back(j);
    out.unknown = out.unknown || report.inconclusive;
    out.mismatch = out.mismatch || !report.mismatches.empty();
  }
  out.result = {{"cases", cases}};
  return out;
}

void Flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    if (j.empty()) rows.emplace_back(prefix, "{}");
    for (const auto& [key, value] : j.items()) Flatten(value, prefix.empty() ? key : prefix + "." + key, rows);
  } else if (j.is_array()) {
    const bool scalar = std::all_of(j.begin(), j.end(), [](const Json& x) { return x.is_primitive(); });
    if (scalar) {
      rows.emplace_back(prefix, j.dump());
      return;
    }
    for (std::size_t i = 0; i < j.size(); ++i) Flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
  } else if (j.is_string()) {
    rows.emplace_back(prefix, j.get<std::string>());
  } else {
    rows.emplace_back(prefix, j.dump());
  }
}

void PrintText(const Json& report, std::ostream& out) {
  std::vector<std::pair<std::string, std::string>> rows;
  Flatten(report, "", rows);
  std::size_t width = 0;
  for (const auto& row : rows) width = std::max(width, row.first.size());
  for (const auto& [key, value] : rows) out << key << std::string(width - key.size() + 2, ' ') << value << '\n';
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Frobenius splitting toolkit", "fsplit"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* sub) {
    sub->add_flag("--json", o.json, "Emit JSON");
    sub->add_flag("--strict", o.strict, "Exit 2 on unknown verdicts");
    sub->add_flag("--timings", o.timings, "Include wall-clock timings");
    sub->add_option("--emax", o.emax, "Largest Frobenius level tried")->capture_default_str();
    sub->add_option("--budget", o.budget, "Perturbation budget")->capture_default_str();
    sub->add_option("--bigraded-pmax", o.bigraded_pmax, "Largest prime for the bigraded test")->capture_default_str();
    sub->add_option("--out", o.out, "CSV output path");
  };
  auto add_p = [&o](CLI::App* sub) { sub->add_option("--p", o.p, "Odd prime"); };
  auto add_poly = [&o](CLI::App* sub) {
    sub->add_option("--poly", o.poly, "Polynomial text");
    sub->add_option("--vars", o.vars, "Variable names, e.g. x,y or x,y,z;l,m");
  };

  std::map<std::string, CLI::App*> subs;
  auto make = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub);
    subs[name] = sub;
    return sub;
  };

  CLI::App* hasse = make("hasse", "Hasse invariant of a Legendre curve or table over F_p");
  add_p(hasse);
  hasse->add_option("--lambda", o.lambda, "Curve parameter (a, a+bt, bt)");
  add_p(make("supersingular", "Supersingular polynomial and its roots"));
  add_p(make("fdisc", "Discriminant divisor of the Legendre family"));
  CLI::App* nu = make("fedder-nu", "nu_f(p^e) at the origin");
  add_p(nu);
  add_poly(nu);
  nu->add_option("--e", o.e, "Frobenius level")->capture_default_str();
  CLI::App* fpt = make("fpt", "F-pure threshold bounds from the nu sequence");
  add_p(fpt);
  add_poly(fpt);
  CLI::App* gfs = make("gfs-p1", "Global F-splitting of a couple on P^1");
  add_p(gfs);
  gfs->add_option("--divisor", o.divisor, "Boundary, e.g. 1/2@0,1/2@inf");
  CLI::Option* level_opt = gfs->add_option("--e", o.e, "Also report this single level");
  CLI::App* gfr = make("gfr-p1", "Bounded global F-regularity of a couple on P^1");
  add_p(gfr);
  gfr->add_option("--divisor", o.divisor, "Boundary, e.g. 1/2@0,1/2@inf");
  gfr->add_flag("--certificates", o.certificates, "List every perturbation certificate");
  CLI::App* cy = make("gfs-cy", "Splitting of a Calabi-Yau hypersurface");
  add_p(cy);
  add_poly(cy);
  CLI::App* big = make("gfs-bigraded", "Splitting of a hypersurface in a product of projective spaces");
  add_p(big);
  add_poly(big);
  CLI::App* cover = make("cover-check", "Trace and Cartier compatibility on a double cover of P^1");
  add_p(cover);
  cover->add_option("--cover", o.cover, "square or legendre")->capture_default_str();
  cover->add_option("--divisor", o.divisor, "Target boundary");
  cover->add_option("--lambda", o.lambda, "Legendre parameter");
  cover->add_option("--e", o.e, "Frobenius level")->capture_default_str();
  CLI::App* kgfr = make("kgfr", "K-global F-regularity of the Legendre family");
  add_p(kgfr);
  kgfr->add_flag("--certificates", o.certificates, "List every perturbation certificate");
  CLI::App* scan = make("scan", "KGFR scan over a range of primes");
  scan->add_option("--range", o.range, "Prime range a..b");
  scan->add_option("--pmax", o.pmax, "Upper end when --range is absent")->capture_default_str();
  scan->add_option("--threads", o.threads, "Worker threads (0 = hardware)")->capture_default_str();
  CLI::App* kappa = make("kappa", "Iitaka dimension from a degree ladder");
  kappa->add_option("--ruled", o.ruled, "Ruled surface anticanonical ladder g,d");
  kappa->add_option("--genus", o.genus, "Curve genus")->capture_default_str();
  kappa->add_option("--deg-m", o.deg_m, "Degree slope in m")->capture_default_str();
  kappa->add_option("--deg-k", o.deg_k, "Degree slope in k")->capture_default_str();
  kappa->add_option("--deg-c", o.deg_c, "Degree offset")->capture_default_str();
  kappa->add_option("--slope", o.slope, "k ranges over 0..floor(slope m)")->capture_default_str();
  kappa->add_option("--zero", o.zero, "Degree-0 bundle: unspecified, generic, trivial")->capture_default_str();
  kappa->add_option("--mmax", o.mmax, "Largest multiple")->capture_default_str();
  CLI::App* catalog = make("catalog", "Superadditivity checks on the catalog");
  catalog->add_option("--case", o.case_id, "Case id, e.g. ruled:g=2,d=3");
  catalog->add_option("--registry", o.registry, "Catalog file overriding the built-in one");
  catalog->add_option("--mmax", o.mmax, "Largest multiple")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  std::string name;
  for (const auto& [key, sub] : subs) {
    if (sub->parsed()) name = key;
  }

  const auto start = std::chrono::steady_clock::now();
  Outcome outcome;
  try {
    if (name == "hasse") outcome = CmdHasse(o);
    else if (name == "supersingular") outcome = CmdSupersingular(o);
    else if (name == "fdisc") outcome = CmdFdisc(o);
    else if (name == "fedder-nu") outcome = CmdFedderNu(o);
    else if (name == "fpt") outcome = CmdFpt(o);
    else if (name == "gfs-p1") outcome = CmdGfsP1(o, level_opt->count() > 0);
    else if (name == "gfr-p1") outcome = CmdGfrP1(o);
    else if (name == "gfs-cy") outcome = CmdGfsCy(o);
    else if (name == "gfs-bigraded") outcome = CmdGfsBigraded(o);
    else if (name == "cover-check") outcome = CmdCoverCheck(o);
    else if (name == "kgfr") outcome = CmdKgfr(o);
    else if (name == "scan") outcome = CmdScan(o);
    else if (name == "kappa") outcome = CmdKappa(o);
    else if (name == "catalog") outcome = CmdCatalog(o);
    else throw std::invalid_argument("unknown subcommand");
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInputError;
  }
  const double elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  Json report = {{"schema_version", kSchemaVersion},
                 {"command", name},
                 {"inputs", outcome.inputs},
                 {"budgets", ToJson(MakeBudgets(o))},
                 {"result", outcome.result}};
  if (o.timings) report["timings_ms"] = {{"total", elapsed}};

  if (!o.out.empty()) {
    if (!outcome.csv) {
      err << "error: --out is not supported for " << name << '\n';
      return kExitInputError;
    }
    std::ofstream file(o.out);
    if (!file) {
      err << "error: cannot write " << o.out << '\n';
      return kExitInputError;
    }
    file << *outcome.csv;
  }

  if (o.json) {
    out << report.dump(2) << '\n';
  } else {
    PrintText(report, out);
  }
  if (outcome.mismatch) return kExitCatalogMismatch;
  if (o.strict && outcome.unknown) return kExitUnknownStrict;
  return kExitOk;
}

}  // namespace fsplit
