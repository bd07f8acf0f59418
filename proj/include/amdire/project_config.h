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

#ifndef AMDIRE_PROJECT_CONFIG_H_
#define AMDIRE_PROJECT_CONFIG_H_

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "amdire/catalog.h"
#include "amdire/diagnostic.h"
#include "amdire/source.h"

namespace amdire {

inline constexpr char kManifestFileName[] = "amdire-project.txt";

struct AliasEntry {
  std::string alias;
  std::string path;
  Span span;
};

// Contents of `amdire-project.txt`.
struct Manifest {
  std::string path;
  std::string name = "project";
  DomainProfile domain_profile = DomainProfile::kBoth;
  Span domain_profile_span;
  std::vector<AliasEntry> aliases;
  std::vector<AliasEntry> tailoring_files;  // alias field unused
  // nullopt means the rule is switched off.
  std::map<std::string, std::optional<Severity>> severity_overrides;
};

struct ManifestResult {
  Manifest manifest;
  std::vector<Diagnostic> diagnostics;
};

// Parses the line-oriented manifest. Blank lines and lines starting with '#'
// are ignored. Unknown keys yield AMD090 (warning); malformed lines AMD089.
ManifestResult ParseManifest(const SourceFile& source);

// A decision taken while tailoring, kept for the report.
struct TailoringDecision {
  std::string factor;  // situation factor name, or "profile"
  std::string value;
  ItemId item;
  std::string effect;  // "forced", "import-candidate", "disabled", ...
};

// Everything downstream analysis needs to know about the project setup.
struct ProjectConfig {
  std::string name = "project";
  DomainProfile domain_profile = DomainProfile::kBoth;
  // Enabled content items per artefact type, in catalog order.
  std::array<std::vector<ItemId>, 3> enabled_items;
  std::vector<ItemId> forced_items;
  std::vector<ItemId> import_candidates;
  std::vector<TailoringDecision> decisions;
  std::map<std::string, std::string> role_assignments;
  std::map<std::string, std::optional<Severity>> severity_overrides;

  bool IsEnabled(ItemId item) const;
  bool IsRuleOff(const std::string& code) const;
  std::vector<std::string> RulesOff() const;

  // Every item compatible with the profile enabled, no overrides.
  static ProjectConfig ForProfile(const Catalog& catalog, DomainProfile profile,
                                  std::string name = "project");
};

// Rewrites severities according to the overrides and drops findings of rules
// that are switched off.
void ApplySeverityOverrides(const ProjectConfig& config,
                            std::vector<Diagnostic>& diagnostics);

// True if `text` matches [A-Za-z_][A-Za-z0-9_-]*.
bool IsIdentifier(std::string_view text);

}  // namespace amdire

#endif  // AMDIRE_PROJECT_CONFIG_H_
