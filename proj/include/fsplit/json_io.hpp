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

#ifndef FSPLIT_JSON_IO_HPP_
#define FSPLIT_JSON_IO_HPP_

#include <string>
#include <vector>

#include "json.hpp"

#include "fsplit/elliptic.hpp"
#include "fsplit/fedder.hpp"
#include "fsplit/fibration.hpp"
#include "fsplit/gsplit.hpp"
#include "fsplit/kappa.hpp"

// JSON encodings of every report. Objects keep insertion order.
namespace fsplit {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

Json ToJson(const ZpRational& x);
Json ToJson(const P1Divisor& divisor);
Json ToJson(const SplittingCertificate& cert);
Json ToJson(const LevelResult& level);
Json ToJson(const GfsVerdict& verdict);
Json ToJson(const GfrVerdict& verdict);
Json ToJson(const SupersingularReport& report);
Json ToJson(const FDiscriminantReport& report);
Json ToJson(const KgfrVerdict& verdict);
Json ToJson(const ScanReport& report);
Json ToJson(const CbfCheck& check);
Json ToJson(const Q0S0Result& result);
Json ToJson(const CoverCheckResult& result);
Json ToJson(const BigradedResult& result, const std::vector<std::string>& second_group_vars);
Json ToJson(const NuSequence& seq, const std::vector<std::string>& vars);
Json ToJson(const H0Interval& h);
Json ToJson(const KappaResult& result);
Json ToJson(const CatalogEntry& entry);
Json ToJson(const SuperadditivityReport& report);
Json ToJson(const Budgets& budgets);

// Inverses used for round-trip checks.
P1Divisor DivisorFromJson(const Json& j, std::uint64_t p);
FDiscriminantReport FDiscriminantFromJson(const Json& j);

}  // namespace fsplit

#endif  // FSPLIT_JSON_IO_HPP_
