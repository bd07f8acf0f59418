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

#include "amdire/project_config.h"

#include <algorithm>

#include "amdire/strings.h"
#include "amdire/config_lines.h"

namespace amdire {
namespace {

// AMD or ARD followed by three digits.
bool IsRuleCode(std::string_view text) {
  if (text.size() != 6) return false;
  if (text.substr(0, 3) != "AMD" && text.substr(0, 3) != "ARD") return false;
  return std::all_of(text.begin() + 3, text.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

bool IsIdentifier(std::string_view text) {
  if (text.empty()) return false;
  auto start = [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
  };
  if (!start(text[0])) return false;
  return std::all_of(text.begin() + 1, text.end(), [&](char c) {
    return start(c) || (c >= '0' && c <= '9') || c == '-';
  });
}

bool ProjectConfig::IsEnabled(ItemId item) const {
  for (const auto& items : enabled_items) {
    if (std::find(items.begin(), items.end(), item) != items.end()) return true;
  }
  return false;
}

bool ProjectConfig::IsRuleOff(const std::string& code) const {
  auto it = severity_overrides.find(code);
  return it != severity_overrides.end() && !it->second.has_value();
}

std::vector<std::string> ProjectConfig::RulesOff() const {
  std::vector<std::string> off;
  for (const auto& [code, severity] : severity_overrides) {
    if (!severity.has_value()) off.push_back(code);
  }
  return off;
}

ProjectConfig ProjectConfig::ForProfile(const Catalog& catalog,
                                        DomainProfile profile,
                                        std::string name) {
  ProjectConfig config;
  config.name = std::move(name);
  config.domain_profile = profile;
  for (ArtefactType type : kAllArtefactTypes) {
    config.enabled_items[Index(type)] = catalog.ContentItemsFor(type, profile);
  }
  return config;
}

void ApplySeverityOverrides(const ProjectConfig& config,
                            std::vector<Diagnostic>& diagnostics) {
  if (config.severity_overrides.empty()) return;
  std::vector<Diagnostic> kept;
  kept.reserve(diagnostics.size());
  for (Diagnostic& diagnostic : diagnostics) {
    auto it = config.severity_overrides.find(diagnostic.code);
    if (it == config.severity_overrides.end()) {
      kept.push_back(std::move(diagnostic));
      continue;
    }
    if (!it->second.has_value()) continue;
    diagnostic.severity = *it->second;
    kept.push_back(std::move(diagnostic));
  }
  diagnostics = std::move(kept);
}

ManifestResult ParseManifest(const SourceFile& source) {
  ManifestResult result;
  Manifest& manifest = result.manifest;
  manifest.path = source.path;
  manifest.domain_profile_span = Span{source.path, 1, 1, 1, 1, 0, 0};
  for (const ConfigLine& line : SplitConfigLines(source, result.diagnostics)) {
    if (line.key == "name") {
      if (!IsIdentifier(line.value)) {
        result.diagnostics.push_back(Diagnostic{
            "AMD089", Severity::kError,
            StrCat("project name '", line.value,
                         "' is not a valid identifier"),
            line.value_span, {}, std::nullopt});
        continue;
      }
      manifest.name = line.value;
    } else if (line.key == "domain-profile") {
      std::optional<DomainProfile> profile = DomainProfileFromName(line.value);
      if (!profile.has_value()) {
        result.diagnostics.push_back(Diagnostic{
            "AMD089", Severity::kError,
            StrCat("unknown domain profile '", line.value,
                         "'; expected bis, embedded, or both"),
            line.value_span, {}, std::nullopt});
        continue;
      }
      manifest.domain_profile = *profile;
      manifest.domain_profile_span = line.line_span;
    } else if (line.key == "alias" && line.argument.has_value()) {
      if (!IsIdentifier(*line.argument) || line.value.empty()) {
        result.diagnostics.push_back(Diagnostic{
            "AMD089", Severity::kError,
            StrCat("malformed alias declaration for '", *line.argument,
                         "'"),
            line.line_span, {}, std::nullopt});
        continue;
      }
      manifest.aliases.push_back(
          AliasEntry{*line.argument, line.value, line.line_span});
    } else if (line.key == "tailoring" && !line.argument.has_value()) {
      manifest.tailoring_files.push_back(
          AliasEntry{"", line.value, line.line_span});
    } else if (line.key == "rule" && line.argument.has_value()) {
      if (!IsRuleCode(*line.argument)) {
        result.diagnostics.push_back(Diagnostic{
            "AMD089", Severity::kError,
            StrCat("'", *line.argument, "' is not a rule code"),
            line.key_span, {}, std::nullopt});
      } else if (line.value == "off") {
        manifest.severity_overrides[*line.argument] = std::nullopt;
      } else if (std::optional<Severity> severity =
                     SeverityFromName(line.value)) {
        manifest.severity_overrides[*line.argument] = *severity;
      } else {
        result.diagnostics.push_back(Diagnostic{
            "AMD089", Severity::kError,
            StrCat("unknown severity '", line.value, "' for rule ",
                         *line.argument, "; expected error, warning, info, or off"),
            line.value_span, {}, std::nullopt});
      }
    } else {
      std::string key = line.argument.has_value()
                            ? StrCat(line.key, " ", *line.argument)
                            : line.key;
      result.diagnostics.push_back(
          Diagnostic{"AMD090", Severity::kWarning,
                     StrCat("unknown manifest key '", key, "'"),
                     line.key_span, {}, std::nullopt});
    }
  }
  return result;
}

}  // namespace amdire
