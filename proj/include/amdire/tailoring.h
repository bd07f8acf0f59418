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

#ifndef AMDIRE_TAILORING_H_
#define AMDIRE_TAILORING_H_

#include <array>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "amdire/catalog.h"
#include "amdire/diagnostic.h"
#include "amdire/project_config.h"
#include "amdire/source.h"

namespace amdire {

enum class TailoringLevel : uint8_t { kOrganisational, kProject };

std::string_view TailoringLevelName(TailoringLevel level);

struct SituationFactor {
  std::string name;
  std::string value;
  Span span;
};

struct DisabledItem {
  ItemId item;
  std::string justification;  // may be empty
  Span span;
};

// One `tailoring.txt` file.
//
//   level: org | project
//   domain-profile: bis | embedded | both
//   disable <Item>: "<justification>"
//   assign <Role>: "<name>"
//   factor <name>: <value>
//
// `disable` accepts an item name ("RiskList") or a qualified one
// ("system.DataModel"); an unqualified name that several artefact types share
// disables every match.
struct TailoringProfile {
  std::string path;
  TailoringLevel level = TailoringLevel::kProject;
  std::optional<DomainProfile> domain_profile;
  Span domain_profile_span;
  std::vector<DisabledItem> disabled_items;
  std::map<std::string, std::string> role_assignments;
  std::vector<SituationFactor> factors;
};

struct TailoringParseResult {
  TailoringProfile profile;
  std::vector<Diagnostic> diagnostics;
};

// Malformed lines, unknown items and unknown roles yield AMD089; unknown keys
// AMD090.
TailoringParseResult ParseTailoringFile(const SourceFile& source,
                                        const Catalog& catalog);

// Result of combining the organisational and project profiles.
struct EffectiveItems {
  DomainProfile domain_profile = DomainProfile::kBoth;
  // Enabled items per artefact type, in catalog order.
  std::array<std::vector<ItemId>, 3> items;
  // Items actually removed, with the profile entry that removed them.
  std::vector<DisabledItem> disabled;
  std::map<std::string, std::string> role_assignments;
  std::vector<Diagnostic> diagnostics;
};

// Starts from the items compatible with the domain profile and removes the
// disabled ones. The project level overrides the organisational level.
//
//   AMD085  core item disabled without justification (the item stays enabled)
//   AMD086  organisational and project levels name different domain profiles
//   AMD089  more than one profile for the same level
EffectiveItems ComputeEffectiveItems(const Catalog& catalog,
                                     DomainProfile default_profile,
                                     std::span<const TailoringProfile> profiles);

struct TailorResult {
  ProjectConfig config;
  std::vector<Diagnostic> diagnostics;
};

// Applies the situation-factor table and records each decision:
//
//   safety_critical=yes            forces RiskList and QualityRequirements
//   custom_development=no          forces ProcessRequirements
//   predecessor_system_exists=yes  marks DomainModel as an import candidate
//
// All three factors take yes/no. An unknown factor or value yields AMD087; a
// forced item that the profiles disabled is re-enabled with AMD088.
TailorResult StaticTailor(const Catalog& catalog, const EffectiveItems& effective,
                          std::span<const SituationFactor> situation,
                          std::string project_name = "project");

}  // namespace amdire

#endif  // AMDIRE_TAILORING_H_
