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

#include "amdire/tailoring.h"

#include <algorithm>

#include "amdire/config_lines.h"
#include "amdire/strings.h"

namespace amdire {

std::string_view TailoringLevelName(TailoringLevel level) {
  return level == TailoringLevel::kOrganisational ? "org" : "project";
}

namespace {

Diagnostic Error(std::string code, std::string message, Span span) {
  return Diagnostic{std::move(code), Severity::kError, std::move(message),
                    std::move(span), {}, std::nullopt};
}

struct FactorEffect {
  std::string_view factor;
  std::string_view value;
  std::string_view item;  // qualified item name
  std::string_view effect;
};

// The shipped situation table.
constexpr FactorEffect kFactorTable[] = {
    {"safety_critical", "yes", "requirements.RiskList", "forced"},
    {"safety_critical", "yes", "requirements.QualityRequirements", "forced"},
    {"custom_development", "no", "requirements.ProcessRequirements", "forced"},
    {"predecessor_system_exists", "yes", "context.DomainModel",
     "import-candidate"},
};

constexpr std::string_view kFactorNames[] = {
    "custom_development", "predecessor_system_exists", "safety_critical"};

bool IsCoreItem(const Catalog& catalog, ItemId item) {
  return !catalog.item(item).domain_stereotype.has_value();
}

}  // namespace

TailoringParseResult ParseTailoringFile(const SourceFile& source,
                                        const Catalog& catalog) {
  TailoringParseResult result;
  TailoringProfile& profile = result.profile;
  profile.path = source.path;
  for (const ConfigLine& line : SplitConfigLines(source, result.diagnostics)) {
    if (line.key == "level" && !line.argument.has_value()) {
      if (line.value == "org" || line.value == "organisational") {
        profile.level = TailoringLevel::kOrganisational;
      } else if (line.value == "project") {
        profile.level = TailoringLevel::kProject;
      } else {
        result.diagnostics.push_back(
            Error("AMD089",
                  StrCat("unknown tailoring level '", line.value,
                         "'; expected org or project"),
                  line.value_span));
      }
    } else if (line.key == "domain-profile" && !line.argument.has_value()) {
      std::optional<DomainProfile> domain = DomainProfileFromName(line.value);
      if (!domain.has_value()) {
        result.diagnostics.push_back(
            Error("AMD089",
                  StrCat("unknown domain profile '", line.value,
                         "'; expected bis, embedded, or both"),
                  line.value_span));
        continue;
      }
      profile.domain_profile = domain;
      profile.domain_profile_span = line.line_span;
    } else if (line.key == "disable" && line.argument.has_value()) {
      std::vector<ItemId> items = catalog.FindItemsByName(*line.argument);
      if (items.empty()) {
        result.diagnostics.push_back(Error(
            "AMD089", StrCat("unknown content item '", *line.argument, "'"),
            line.key_span));
        continue;
      }
      for (ItemId item : items) {
        profile.disabled_items.push_back(
            DisabledItem{item, line.value, line.line_span});
      }
    } else if (line.key == "assign" && line.argument.has_value()) {
      const auto& roles = catalog.roles();
      if (std::none_of(roles.begin(), roles.end(), [&](const RoleDef& role) {
            return role.id == *line.argument;
          })) {
        result.diagnostics.push_back(Error(
            "AMD089", StrCat("unknown role '", *line.argument, "'"),
            line.key_span));
        continue;
      }
      profile.role_assignments[*line.argument] = line.value;
    } else if (line.key == "factor" && line.argument.has_value()) {
      profile.factors.push_back(
          SituationFactor{*line.argument, line.value, line.line_span});
    } else {
      std::string key = line.argument.has_value()
                            ? StrCat(line.key, " ", *line.argument)
                            : line.key;
      result.diagnostics.push_back(
          Diagnostic{"AMD090", Severity::kWarning,
                     StrCat("unknown tailoring key '", key, "'"),
                     line.key_span, {}, std::nullopt});
    }
  }
  return result;
}

EffectiveItems ComputeEffectiveItems(const Catalog& catalog,
                                     DomainProfile default_profile,
                                     std::span<const TailoringProfile> profiles) {
  EffectiveItems result;
  const TailoringProfile* org = nullptr;
  const TailoringProfile* project = nullptr;
  for (const TailoringProfile& profile : profiles) {
    const TailoringProfile*& slot =
        profile.level == TailoringLevel::kOrganisational ? org : project;
    if (slot != nullptr) {
      result.diagnostics.push_back(Error(
          "AMD089",
          StrCat("more than one ", TailoringLevelName(profile.level),
                 "-level tailoring profile (first: ", slot->path, ")"),
          Span{profile.path, 1, 1, 1, 1, 0, 0}));
      continue;
    }
    slot = &profile;
  }

  result.domain_profile = default_profile;
  if (org != nullptr && org->domain_profile.has_value()) {
    result.domain_profile = *org->domain_profile;
  }
  if (project != nullptr && project->domain_profile.has_value()) {
    if (org != nullptr && org->domain_profile.has_value() &&
        *org->domain_profile != *project->domain_profile &&
        *org->domain_profile != DomainProfile::kBoth &&
        *project->domain_profile != DomainProfile::kBoth) {
      result.diagnostics.push_back(Diagnostic{
          "AMD086", Severity::kError,
          StrCat("project tailoring selects the '",
                 DomainProfileName(*project->domain_profile),
                 "' domain profile but the organisational profile selects '",
                 DomainProfileName(*org->domain_profile), "'"),
          project->domain_profile_span,
          {RelatedNote{org->domain_profile_span,
                       "organisational domain profile"}},
          std::nullopt});
    }
    result.domain_profile = *project->domain_profile;
  }

  for (ArtefactType type : kAllArtefactTypes) {
    result.items[Index(type)] =
        catalog.ContentItemsFor(type, result.domain_profile);
  }
  for (const TailoringProfile* profile : {org, project}) {
    if (profile == nullptr) continue;
    for (const auto& [role, person] : profile->role_assignments) {
      result.role_assignments[role] = person;
    }
    for (const DisabledItem& disabled : profile->disabled_items) {
      const ContentItemDef& item = catalog.item(disabled.item);
      std::vector<ItemId>& list = result.items[Index(item.artefact)];
      auto it = std::find(list.begin(), list.end(), disabled.item);
      if (it == list.end()) continue;
      if (IsCoreItem(catalog, disabled.item) &&
          StripWhitespace(disabled.justification).empty()) {
        result.diagnostics.push_back(Error(
            "AMD085",
            StrCat("core content item ", item.QualifiedName(),
                   " cannot be disabled without a justification; it stays "
                   "enabled"),
            disabled.span));
        continue;
      }
      list.erase(it);
      result.disabled.push_back(disabled);
    }
  }
  return result;
}

TailorResult StaticTailor(const Catalog& catalog, const EffectiveItems& effective,
                          std::span<const SituationFactor> situation,
                          std::string project_name) {
  TailorResult result;
  ProjectConfig& config = result.config;
  config.name = std::move(project_name);
  config.domain_profile = effective.domain_profile;
  config.enabled_items = effective.items;
  config.role_assignments = effective.role_assignments;
  for (const DisabledItem& disabled : effective.disabled) {
    config.decisions.push_back(TailoringDecision{
        "profile", disabled.justification, disabled.item, "disabled"});
  }

  for (const SituationFactor& factor : situation) {
    const bool known_name =
        std::find(std::begin(kFactorNames), std::end(kFactorNames),
                  factor.name) != std::end(kFactorNames);
    if (!known_name) {
      result.diagnostics.push_back(Error(
          "AMD087",
          StrCat("unknown situation factor '", factor.name,
                 "'; known factors: ", StrJoin(kFactorNames, ", ")),
          factor.span));
      continue;
    }
    if (factor.value != "yes" && factor.value != "no") {
      result.diagnostics.push_back(Error(
          "AMD087",
          StrCat("situation factor '", factor.name, "' takes yes or no, not '",
                 factor.value, "'"),
          factor.span));
      continue;
    }
    for (const FactorEffect& row : kFactorTable) {
      if (row.factor != factor.name || row.value != factor.value) continue;
      const ItemId item = catalog.FindItemsByName(row.item).front();
      const ContentItemDef& def = catalog.item(item);
      config.decisions.push_back(TailoringDecision{
          factor.name, factor.value, item, std::string(row.effect)});
      if (row.effect == "import-candidate") {
        if (std::find(config.import_candidates.begin(),
                      config.import_candidates.end(),
                      item) == config.import_candidates.end()) {
          config.import_candidates.push_back(item);
        }
        continue;
      }
      if (std::find(config.forced_items.begin(), config.forced_items.end(),
                    item) == config.forced_items.end()) {
        config.forced_items.push_back(item);
      }
      std::vector<ItemId>& list = config.enabled_items[Index(def.artefact)];
      if (std::find(list.begin(), list.end(), item) != list.end()) continue;
      auto disabled = std::find_if(
          effective.disabled.begin(), effective.disabled.end(),
          [&](const DisabledItem& entry) { return entry.item == item; });
      if (disabled == effective.disabled.end()) continue;  // profile mismatch
      result.diagnostics.push_back(Diagnostic{
          "AMD088", Severity::kError,
          StrCat(def.QualifiedName(), " is disabled but ", factor.name, "=",
                 factor.value, " makes it mandatory; it is re-enabled"),
          disabled->span,
          {RelatedNote{factor.span, "situation factor set here"}},
          std::nullopt});
      list.insert(std::lower_bound(list.begin(), list.end(), item), item);
      config.decisions.push_back(
          TailoringDecision{factor.name, factor.value, item, "re-enabled"});
    }
  }
  return result;
}

}  // namespace amdire
