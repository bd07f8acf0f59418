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

#include "amdire/diagnostic.h"

#include <algorithm>
#include <tuple>

namespace amdire {

std::string_view SeverityName(Severity severity) {
  switch (severity) {
    case Severity::kError:
      return "error";
    case Severity::kWarning:
      return "warning";
    case Severity::kInfo:
      return "info";
  }
  return "error";
}

std::optional<Severity> SeverityFromName(std::string_view name) {
  if (name == "error") return Severity::kError;
  if (name == "warning") return Severity::kWarning;
  if (name == "info") return Severity::kInfo;
  return std::nullopt;
}

bool Span::Contains(uint32_t line, uint32_t col) const {
  const auto pos = std::make_pair(line, col);
  return std::make_pair(start_line, start_col) <= pos &&
         pos < std::make_pair(end_line, end_col);
}

bool Span::Covers(const Span& other) const {
  return file == other.file &&
         std::make_pair(start_line, start_col) <=
             std::make_pair(other.start_line, other.start_col) &&
         std::make_pair(other.end_line, other.end_col) <=
             std::make_pair(end_line, end_col);
}

Span Join(const Span& a, const Span& b) {
  Span joined = a;
  if (std::make_pair(b.start_line, b.start_col) <
      std::make_pair(a.start_line, a.start_col)) {
    joined.start_line = b.start_line;
    joined.start_col = b.start_col;
    joined.begin_offset = b.begin_offset;
  }
  if (std::make_pair(b.end_line, b.end_col) >
      std::make_pair(a.end_line, a.end_col)) {
    joined.end_line = b.end_line;
    joined.end_col = b.end_col;
    joined.end_offset = b.end_offset;
  }
  return joined;
}

bool DiagnosticLess(const Diagnostic& a, const Diagnostic& b) {
  return std::tie(a.span.file, a.span.start_line, a.span.start_col, a.code,
                  a.message, a.span.end_line, a.span.end_col) <
         std::tie(b.span.file, b.span.start_line, b.span.start_col, b.code,
                  b.message, b.span.end_line, b.span.end_col);
}

void SortDiagnostics(std::vector<Diagnostic>& diagnostics) {
  std::stable_sort(diagnostics.begin(), diagnostics.end(), DiagnosticLess);
}

size_t CountSeverity(const std::vector<Diagnostic>& diagnostics,
                     Severity severity) {
  return static_cast<size_t>(
      std::count_if(diagnostics.begin(), diagnostics.end(),
                    [&](const Diagnostic& d) { return d.severity == severity; }));
}

}  // namespace amdire
