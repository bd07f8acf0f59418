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

#include "amdire/diagnostic_output.h"

#include "amdire/strings.h"
#include "json.hpp"

namespace amdire {

std::optional<OutputFormat> OutputFormatFromName(std::string_view name) {
  if (name == "human") return OutputFormat::kHuman;
  if (name == "json") return OutputFormat::kJson;
  return std::nullopt;
}

namespace {

constexpr std::string_view kReset = "\x1b[0m";
constexpr std::string_view kBold = "\x1b[1m";

std::string_view SeverityColor(Severity severity) {
  switch (severity) {
    case Severity::kError:
      return "\x1b[1;31m";
    case Severity::kWarning:
      return "\x1b[1;33m";
    case Severity::kInfo:
      return "\x1b[1;36m";
  }
  return "";
}

std::string Location(const Span& span) {
  return StrCat(span.file, ":", span.start_line, ":", span.start_col);
}

std::string Plural(size_t count, std::string_view noun) {
  return StrCat(count, " ", noun, count == 1 ? "" : "s");
}

std::string EmitHuman(const std::vector<Diagnostic>& diagnostics,
                      const EmitOptions& options) {
  std::string out;
  if (!options.rules_off.empty()) {
    StrAppend(&out, "rules off: ", StrJoin(options.rules_off, ", "), "\n");
  }
  for (const Diagnostic& diagnostic : diagnostics) {
    const std::string_view severity = SeverityName(diagnostic.severity);
    if (options.color) {
      StrAppend(&out, kBold, Location(diagnostic.span), ":", kReset, " ",
                SeverityColor(diagnostic.severity), severity, "[",
                diagnostic.code, "]", kReset, " ", diagnostic.message, "\n");
    } else {
      StrAppend(&out, Location(diagnostic.span), ": ", severity, "[",
                diagnostic.code, "] ", diagnostic.message, "\n");
    }
    for (const RelatedNote& note : diagnostic.related) {
      StrAppend(&out, "  ", Location(note.span), ": note: ", note.note, "\n");
    }
  }
  StrAppend(&out, Plural(CountSeverity(diagnostics, Severity::kError), "error"),
            ", ",
            Plural(CountSeverity(diagnostics, Severity::kWarning), "warning"),
            ", ", CountSeverity(diagnostics, Severity::kInfo), " info\n");
  return out;
}

std::string EmitJson(const std::vector<Diagnostic>& diagnostics,
                     const EmitOptions& options) {
  nlohmann::ordered_json doc;
  doc["version"] = kJsonSchemaVersion;
  doc["summary"] = {
      {"error", CountSeverity(diagnostics, Severity::kError)},
      {"warning", CountSeverity(diagnostics, Severity::kWarning)},
      {"info", CountSeverity(diagnostics, Severity::kInfo)},
  };
  doc["rules_off"] = options.rules_off;
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const Diagnostic& diagnostic : diagnostics) {
    nlohmann::ordered_json related = nlohmann::ordered_json::array();
    for (const RelatedNote& note : diagnostic.related) {
      related.push_back({{"file", note.span.file},
                         {"line", note.span.start_line},
                         {"col", note.span.start_col},
                         {"note", note.note}});
    }
    list.push_back({{"code", diagnostic.code},
                    {"severity", std::string(SeverityName(diagnostic.severity))},
                    {"message", diagnostic.message},
                    {"file", diagnostic.span.file},
                    {"line", diagnostic.span.start_line},
                    {"col", diagnostic.span.start_col},
                    {"end_line", diagnostic.span.end_line},
                    {"end_col", diagnostic.span.end_col},
                    {"related", std::move(related)}});
  }
  doc["diagnostics"] = std::move(list);
  return doc.dump(2) + "\n";
}

}  // namespace

std::string EmitDiagnostics(const std::vector<Diagnostic>& diagnostics,
                            OutputFormat format, const EmitOptions& options) {
  return format == OutputFormat::kJson ? EmitJson(diagnostics, options)
                                       : EmitHuman(diagnostics, options);
}

}  // namespace amdire
