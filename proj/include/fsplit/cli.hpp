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

#ifndef FSPLIT_CLI_HPP_
#define FSPLIT_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace fsplit {

enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 1,
  kExitUnknownStrict = 2,
  kExitCatalogMismatch = 3,
};

// Entry point of the fsplit executable. args excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fsplit

#endif  // FSPLIT_CLI_HPP_
