// Copyright 2026 The AMDiRE Toolchain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef AMDIRE_CLI_H_
#define AMDIRE_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace amdire {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFindings = 1;
inline constexpr int kExitUsage = 2;

struct RunOptions {
  // Colour is used only when the output stream is a terminal and
  // AMDIRE_NO_COLOR is not set to 1.
  bool out_is_terminal = false;
};

// Runs one CLI invocation. `args` excludes the program name. Reports and
// diagnostics go to `out`; usage errors and progress notes to `err`.
//
//   init    [PATH] [--name NAME] [--profile bis|embedded|both]
//   check   [PATH] [--format human|json]
//   tailor  [PATH]
//   trace   [PATH] --from KIND --to KIND [--format table|json]
//   render  [PATH] --artefact context|requirements|system
//           [--format markdown|ardl] [--out FILE]
//   stats   [PATH]
//
// Exit codes: 0 success, 1 error-severity findings (check, tailor), 2 usage
// or I/O failure.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, const RunOptions& options = {});

}  // namespace amdire

#endif  // AMDIRE_CLI_H_
