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

#ifndef AMDIRE_DIAGNOSTIC_H_
#define AMDIRE_DIAGNOSTIC_H_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "amdire/catalog.h"
#include "amdire/source.h"

namespace amdire {

enum class Severity : uint8_t { kError, kWarning, kInfo };

std::string_view SeverityName(Severity severity);
std::optional<Severity> SeverityFromName(std::string_view name);

struct RelatedNote {
  Span span;
  std::string note;
  friend bool operator==(const RelatedNote&, const RelatedNote&) = default;
};

struct Diagnostic {
  std::string code;  // "ARD001", "AMD033", ...
  Severity severity = Severity::kError;
  std::string message;
  Span span;
  std::vector<RelatedNote> related;
  // Content item the finding belongs to, if any. Findings about a whole
  // artefact, a file, or the project configuration carry no item.
  std::optional<ItemId> item;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

// Orders by (file, line, column, code), then message for a total order.
bool DiagnosticLess(const Diagnostic& a, const Diagnostic& b);
void SortDiagnostics(std::vector<Diagnostic>& diagnostics);

size_t CountSeverity(const std::vector<Diagnostic>& diagnostics,
                     Severity severity);
inline bool HasErrors(const std::vector<Diagnostic>& diagnostics) {
  return CountSeverity(diagnostics, Severity::kError) > 0;
}

}  // namespace amdire

#endif  // AMDIRE_DIAGNOSTIC_H_
