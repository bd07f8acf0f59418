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

#ifndef AMDIRE_CONFIG_LINES_H_
#define AMDIRE_CONFIG_LINES_H_

#include <optional>
#include <string>
#include <vector>

#include "amdire/diagnostic.h"
#include "amdire/source.h"

namespace amdire {

// One `key [argument]: value` record of a manifest or tailoring file. A
// double-quoted value is unquoted (with `\"` and `\\` escapes).
struct ConfigLine {
  std::string key;
  std::optional<std::string> argument;
  std::string value;
  bool has_colon = false;
  bool quoted = false;
  Span line_span;
  Span key_span;
  Span value_span;
};

// Splits a configuration file into records. Blank lines and `#` comments are
// skipped; lines that do not fit the record shape yield AMD089.
std::vector<ConfigLine> SplitConfigLines(const SourceFile& source,
                                         std::vector<Diagnostic>& diagnostics);

}  // namespace amdire

#endif  // AMDIRE_CONFIG_LINES_H_
