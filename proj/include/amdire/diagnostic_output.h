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

#ifndef AMDIRE_DIAGNOSTIC_OUTPUT_H_
#define AMDIRE_DIAGNOSTIC_OUTPUT_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "amdire/diagnostic.h"

namespace amdire {

enum class OutputFormat : uint8_t { kHuman, kJson };

std::optional<OutputFormat> OutputFormatFromName(std::string_view name);

struct EmitOptions {
  bool color = false;  // human format only
  // Rules switched off in the manifest; listed in the report header.
  std::vector<std::string> rules_off;
};

inline constexpr int kJsonSchemaVersion = 1;

// Human format, one finding per line followed by its related notes:
//
//   file:line:col: severity[CODE] message
//     file:line:col: note: text
//
// and a closing summary line. JSON format:
//
//   {"version": 1, "summary": {"error": N, "warning": N, "info": N},
//    "rules_off": [...], "diagnostics": [{"code", "severity", "message",
//    "file", "line", "col", "end_line", "end_col",
//    "related": [{"file", "line", "col", "note"}]}]}
//
// Diagnostics are emitted in the given order; callers pass sorted lists.
std::string EmitDiagnostics(const std::vector<Diagnostic>& diagnostics,
                            OutputFormat format, const EmitOptions& options = {});

}  // namespace amdire

#endif  // AMDIRE_DIAGNOSTIC_OUTPUT_H_
