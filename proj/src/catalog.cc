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

#include "amdire/catalog.h"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <utility>

#include "amdire/strings.h"

namespace amdire {
namespace {

constexpr std::array<std::string_view, 3> kShortNames = {"context",
                                                         "requirements",
                                                         "system"};

constexpr std::array<std::string_view, 11> kRelationKeywords = {
    "realises",  "refines",     "satisfies", "constrains",
    "issued-by", "composes",    "triggers",  "assessed-by",
    "caused-by", "demands",     "related-to"};

constexpr std::array<std::string_view, 11> kRelationNames = {
    "Realises", "Refines",    "Satisfies", "Constrains",
    "IssuedBy", "Composes",   "Triggers",  "AssessedBy",
    "CausedBy", "DemandsQualityAttribute", "RelatedTo"};

// ---------------------------------------------------------------------------
// Embedded metamodel data.
// ---------------------------------------------------------------------------

struct ConceptSpec {
  std::string_view kind;
  std::vector<AttributeDef> extra_attributes;
};

struct ItemSpec {
  std::string_view name;
  std::string_view display_name;
  std::optional<DomainStereotype> stereotype;
  std::vector<ConceptSpec> concepts;
};

struct ArtefactSpec {
  ArtefactType type;
  std::string_view id;
  std::string_view display_name;
  std::string_view role;
  std::string_view role_display_name;
  std::string_view milestone_prefix;
  std::vector<ItemSpec> items;
};

AttributeDef Text(std::string_view name) {
  return {std::string(name), AttributeType::kText};
}
AttributeDef Bool(std::string_view name) {
  return {std::string(name), AttributeType::kBoolean};
}
AttributeDef Int(std::string_view name) {
  return {std::string(name), AttributeType::kInteger};
}
AttributeDef Ref(std::string_view name) {
  return {std::string(name), AttributeType::kReference};
}

std::vector<ArtefactSpec> ArtefactSpecs() {
  constexpr auto kBis = DomainStereotype::kBusinessInformationSystems;
  return {
      {ArtefactType::kContext,
       "ContextSpecification",
       "Context Specification",
       "BusinessAnalyst",
       "Business Analyst",
       "CS",
       {
           {"ProjectScope",
            "Project Scope",
            std::nullopt,
            {{"ProblemDescription", {}}, {"StatementOfIntent", {}}}},
           {"ConstraintsAndRules",
            "Constraints and Rules",
            std::nullopt,
            {{"Constraint", {Text("source")}}, {"Rule", {Text("condition")}}}},
           {"StakeholderModel",
            "Stakeholder Model",
            std::nullopt,
            {{"Stakeholder", {Text("role"), Text("responsibility")}},
             {"UserGroup", {Text("proficiency")}},
             {"StakeholderRelationship", {Text("kind")}}}},
           {"BusinessCase",
            "Business Case",
            std::nullopt,
            {{"Cost", {Text("amount")}},
             {"Value", {Text("amount")}},
             {"Risk", {Text("probability"), Text("impact")}}}},
           {"ObjectivesAndGoals",
            "Objectives and Goals",
            std::nullopt,
            {{"BusinessGoal", {Int("priority")}},
             {"UsageGoal", {Int("priority")}},
             {"SystemGoal", {Int("priority")}},
             {"QualityAttribute", {}}}},
           {"DomainModel",
            "Domain Model",
            std::nullopt,
            {{"ExternalSystem", {Text("owner")}},
             {"Activity", {}},
             {"BusinessProcess", {}},
             {"BusinessTask", {}},
             {"ProcessStep", {Text("performer")}},
             {"BusinessObject", {}},
             {"BusinessRole", {}}}},
           {"Glossary",
            "Glossary",
            std::nullopt,
            {{"Term", {Text("abbreviation"), Text("synonyms")}}}},
       }},
      {ArtefactType::kRequirements,
       "RequirementsSpecification",
       "Requirements Specification",
       "RequirementsEngineer",
       "Requirements Engineer",
       "RS",
       {
           {"SystemVision",
            "System Vision",
            std::nullopt,
            {{"SystemUnderConsideration", {}},
             {"Feature", {Int("priority")}},
             {"SystemBoundary", {}}}},
           {"UsageModel",
            "Usage Model",
            std::nullopt,
            {{"UseCase", {Int("priority")}},
             {"Actor", {}},
             {"FunctionalScenario", {Text("precondition")}},
             {"GenericScenario", {}},
             {"ActorAction", {}},
             {"SystemAction", {}},
             {"Event", {}}}},
           {"ServiceModel",
            "Service Model",
            kBis,
            {{"Service", {}},
             {"CollaborationContract", {}},
             {"QualityOfService", {}},
             {"ServiceParameter", {Text("unit")}},
             {"ServiceLevel", {Text("value")}},
             {"IoRelation", {Text("input"), Text("output")}}}},
           {"DataModel", "Data Model", std::nullopt, {{"DataObject", {}}}},
           {"FunctionalHierarchy",
            "Functional Hierarchy",
            std::nullopt,
            {{"UserVisibleFunction", {}}, {"Mode", {}}, {"Interface", {}}}},
           {"QualityRequirements",
            "Quality Requirements",
            std::nullopt,
            {{"QualityRequirement", {}},
             {"Metric", {Text("unit"), Text("target")}},
             {"NormativeReference", {Text("document")}}}},
           {"DeploymentRequirements",
            "Deployment Requirements",
            std::nullopt,
            {{"DeploymentRequirement", {}}, {"TechnicalEnvironment", {}}}},
           {"SystemConstraints",
            "System Constraints",
            std::nullopt,
            {{"SystemConstraint", {Text("layer")}}}},
           {"ProcessRequirements",
            "Process Requirements",
            std::nullopt,
            {{"ProcessRequirement", {}},
             {"ToolRequirement", {Text("tool")}},
             {"ComplianceStandard", {Text("document")}},
             {"TimeSchedule", {Text("deadline")}}}},
           {"RiskList",
            "Risk List",
            std::nullopt,
            {{"RequirementsRisk", {Text("probability"), Text("impact")}},
             {"RiskFactor", {Int("weight")}},
             {"RiskTrend", {}}}},
       }},
      {ArtefactType::kSystem,
       "SystemSpecification",
       "System Specification",
       "SystemArchitect",
       "System Architect",
       "SS",
       {
           {"ArchitectureOverview",
            "Architecture Overview",
            std::nullopt,
            {{"ComponentOverview", {}}, {"MajorFunction", {}}}},
           {"FunctionModel",
            "Function Model",
            std::nullopt,
            {{"SystemFunction", {}},
             {"InternalFunction", {}},
             {"SystemInterface", {Bool("external")}}}},
           {"ComponentModel",
            "Component Model",
            std::nullopt,
            {{"Component", {Text("layer")}},
             {"Port", {Text("direction")}},
             {"Channel", {}},
             {"ComponentInterface", {}}}},
           {"BehaviourModel",
            "Behaviour Model",
            std::nullopt,
            {{"StateMachine", {}},
             {"State", {Bool("initial")}},
             {"StateTransition", {Ref("from"), Ref("to"), Text("guard")}},
             {"SystemEvent", {}}}},
           {"DataModel",
            "Data Model",
            std::nullopt,
            {{"DataElement", {}},
             {"DataType", {Text("representation")}},
             {"DataRelation", {}}}},
       }},
  };
}

struct RuleSpec {
  Relation relation;
  std::string_view source;
  std::vector<std::string_view> targets;
  Multiplicity multiplicity;
};

std::vector<RuleSpec> RuleSpecs() {
  using enum Relation;
  using enum Multiplicity;
  return {
      // Cross-level realisation, lower level to the adjacent higher one.
      {kRealises, "Actor", {"UserGroup", "ExternalSystem"}, kExactlyOne},
      {kRealises, "DataObject", {"BusinessObject"}, kAny},
      {kRealises, "ActorAction", {"ProcessStep"}, kAny},
      {kRealises, "SystemAction", {"ProcessStep"}, kAny},
      {kRealises,
       "SystemFunction",
       {"SystemAction", "UserVisibleFunction"},
       kAtLeastOne},
      {kRealises, "SystemInterface", {"Interface"}, kAny},
      {kRealises, "DataElement", {"DataObject"}, kExactlyOne},
      {kRealises, "State", {"Mode"}, kAtMostOne},

      // Hierarchies within a level.
      {kRefines, "BusinessGoal", {"BusinessGoal"}, kAny},
      {kRefines, "UsageGoal", {"UsageGoal"}, kAny},
      {kRefines, "SystemGoal", {"SystemGoal"}, kAny},
      {kRefines, "Feature", {"Feature"}, kAny},
      {kRefines, "BusinessTask", {"BusinessProcess"}, kAny},
      {kRefines, "ProcessStep", {"BusinessTask", "Activity"}, kAny},
      {kRefines,
       "UserVisibleFunction",
       {"SystemAction", "UserVisibleFunction"},
       kAny},
      {kRefines, "QualityRequirement", {"QualityAttribute"}, kAny},
      {kRefines, "Rule", {"Constraint"}, kAny},

      {kSatisfies, "GenericScenario", {"QualityRequirement"}, kAny},
      {kSatisfies, "BusinessGoal", {"StatementOfIntent"}, kAny},
      {kSatisfies, "UsageGoal", {"StatementOfIntent"}, kAny},
      {kSatisfies, "SystemGoal", {"StatementOfIntent"}, kAny},
      {kSatisfies, "Cost", {"StatementOfIntent"}, kAny},
      {kSatisfies, "Value", {"StatementOfIntent"}, kAny},
      {kSatisfies, "Risk", {"StatementOfIntent"}, kAny},

      {kConstrains,
       "Constraint",
       {"Constraint", "Rule", "BusinessProcess", "BusinessTask", "ProcessStep"},
       kAny},
      {kConstrains,
       "Rule",
       {"Constraint", "Rule", "BusinessProcess", "BusinessTask", "ProcessStep"},
       kAny},
      {kConstrains, "QualityRequirement", {"SystemAction"}, kAny},
      {kConstrains,
       "SystemConstraint",
       {"SystemAction", "UserVisibleFunction", "QualityRequirement"},
       kAny},
      {kConstrains, "DeploymentRequirement", {"TechnicalEnvironment"}, kAny},
      {kConstrains,
       "ProcessRequirement",
       {"TimeSchedule", "ToolRequirement", "ComplianceStandard"},
       kAny},

      {kIssuedBy, "BusinessGoal", {"Stakeholder", "UserGroup"}, kAtMostOne},
      {kIssuedBy, "UsageGoal", {"Stakeholder", "UserGroup"}, kAtMostOne},
      {kIssuedBy, "SystemGoal", {"Stakeholder", "UserGroup"}, kAtMostOne},

      {kComposes, "Component", {"Component"}, kAny},
      {kComposes, "BusinessProcess", {"BusinessTask", "ProcessStep"}, kAny},
      {kComposes, "BusinessTask", {"ProcessStep"}, kAny},
      {kComposes, "UseCase", {"FunctionalScenario"}, kAny},
      {kComposes, "FunctionalScenario", {"ActorAction", "SystemAction"}, kAny},
      {kComposes, "RiskTrend", {"RiskFactor"}, kAny},
      {kComposes, "StateMachine", {"State", "StateTransition"}, kAny},

      {kTriggers, "Event", {"FunctionalScenario", "UserVisibleFunction"}, kAny},
      {kTriggers, "SystemEvent", {"StateTransition"}, kAny},

      {kAssessedBy,
       "QualityRequirement",
       {"Metric", "NormativeReference"},
       kAtLeastOne},

      {kCausedBy, "RequirementsRisk", {"RiskFactor"}, kAtLeastOne},

      {kDemandsQualityAttribute, "SystemGoal", {"QualityAttribute"}, kAny},

      {kRelatedTo, "UsageGoal", {"BusinessGoal"}, kAtLeastOne},
      {kRelatedTo, "SystemGoal", {"UsageGoal"}, kAtLeastOne},
      {kRelatedTo, "GenericScenario", {"SystemGoal", "UsageGoal"}, kAny},
      {kRelatedTo, "ProblemDescription", {"StatementOfIntent"}, kAny},
      {kRelatedTo, "UserGroup", {"Stakeholder"}, kAny},
      {kRelatedTo, "Stakeholder", {"Stakeholder"}, kAny},
      {kRelatedTo,
       "StakeholderRelationship",
       {"Stakeholder", "UserGroup"},
       kAny},
      {kRelatedTo, "Cost", {"BusinessGoal"}, kAny},
      {kRelatedTo, "Value", {"BusinessGoal"}, kAny},
      {kRelatedTo, "Risk", {"BusinessGoal"}, kAny},
      {kRelatedTo,
       "BusinessObject",
       {"Activity", "BusinessProcess", "BusinessTask", "ProcessStep"},
       kAny},
      {kRelatedTo,
       "BusinessRole",
       {"Activity", "BusinessProcess", "BusinessTask", "ProcessStep"},
       kAny},
      {kRelatedTo, "ExternalSystem", {"ProcessStep", "BusinessTask"}, kAny},
      {kRelatedTo, "Term", {"Term"}, kAny},
      {kRelatedTo,
       "SystemUnderConsideration",
       {"Feature", "SystemBoundary"},
       kAny},
      {kRelatedTo, "SystemBoundary", {"Actor", "ExternalSystem"}, kAny},
      {kRelatedTo, "Feature", {"UseCase", "Service"}, kAny},
      {kRelatedTo, "UseCase", {"Feature", "BusinessTask"}, kAny},
      {kRelatedTo, "ActorAction", {"DataObject"}, kAny},
      {kRelatedTo, "SystemAction", {"DataObject"}, kAny},
      {kRelatedTo, "Service", {"UseCase", "UserVisibleFunction"}, kAny},
      {kRelatedTo, "CollaborationContract", {"Service"}, kAny},
      {kRelatedTo, "QualityOfService", {"Service", "ServiceParameter"}, kAny},
      {kRelatedTo, "ServiceParameter", {"Metric"}, kAny},
      {kRelatedTo, "ServiceLevel", {"ServiceParameter"}, kAny},
      {kRelatedTo, "IoRelation", {"Service", "DataObject"}, kAny},
      {kRelatedTo, "Interface", {"DataObject", "UserVisibleFunction"}, kAny},
      {kRelatedTo, "Mode", {"UserVisibleFunction"}, kAny},
      {kRelatedTo, "Metric", {"QualityAttribute"}, kAny},
      {kRelatedTo, "RequirementsRisk", {"QualityRequirement", "UseCase"}, kAny},
      {kRelatedTo, "ComplianceStandard", {"NormativeReference"}, kAny},
      {kRelatedTo, "ComponentOverview", {"Component"}, kAny},
      {kRelatedTo,
       "MajorFunction",
       {"UserVisibleFunction", "SystemFunction"},
       kAny},
      {kRelatedTo, "SystemFunction", {"Component", "SystemInterface"}, kAny},
      {kRelatedTo, "InternalFunction", {"Component", "SystemFunction"}, kAny},
      {kRelatedTo, "SystemInterface", {"Port"}, kAny},
      {kRelatedTo, "Component", {"SystemFunction", "DataElement"}, kAny},
      {kRelatedTo, "Port", {"Channel", "DataType"}, kAny},
      {kRelatedTo, "Channel", {"Port"}, kAny},
      {kRelatedTo, "ComponentInterface", {"Port"}, kAny},
      {kRelatedTo, "StateMachine", {"Component"}, kAny},
      {kRelatedTo, "DataElement", {"DataType", "Component"}, kAny},
      {kRelatedTo, "DataRelation", {"DataElement"}, kAny},
  };
}

}  // namespace

std::string_view ShortName(ArtefactType type) {
  return kShortNames[Index(type)];
}

std::optional<ArtefactType> ArtefactTypeFromShortName(std::string_view name) {
  for (ArtefactType type : kAllArtefactTypes) {
    if (ShortName(type) == name) return type;
  }
  return std::nullopt;
}

std::string_view RelationKeyword(Relation relation) {
  return kRelationKeywords[static_cast<size_t>(relation)];
}

std::optional<Relation> RelationFromKeyword(std::string_view keyword) {
  for (Relation relation : kAllRelations) {
    if (RelationKeyword(relation) == keyword) return relation;
  }
  return std::nullopt;
}

std::string_view RelationName(Relation relation) {
  return kRelationNames[static_cast<size_t>(relation)];
}

std::string_view MultiplicityName(Multiplicity multiplicity) {
  switch (multiplicity) {
    case Multiplicity::kExactlyOne:
      return "ExactlyOne";
    case Multiplicity::kAtMostOne:
      return "AtMostOne";
    case Multiplicity::kAtLeastOne:
      return "AtLeastOne";
    case Multiplicity::kAny:
      return "Any";
  }
  return "Any";
}

std::string_view DomainProfileName(DomainProfile profile) {
  switch (profile) {
    case DomainProfile::kBusinessInformationSystems:
      return "bis";
    case DomainProfile::kEmbeddedReactiveSystems:
      return "embedded";
    case DomainProfile::kBoth:
      return "both";
  }
  return "both";
}

std::optional<DomainProfile> DomainProfileFromName(std::string_view name) {
  if (name == "bis") return DomainProfile::kBusinessInformationSystems;
  if (name == "embedded") return DomainProfile::kEmbeddedReactiveSystems;
  if (name == "both") return DomainProfile::kBoth;
  return std::nullopt;
}

std::string_view AttributeTypeName(AttributeType type) {
  switch (type) {
    case AttributeType::kText:
      return "text";
    case AttributeType::kBoolean:
      return "boolean";
    case AttributeType::kInteger:
      return "integer";
    case AttributeType::kReference:
      return "reference";
  }
  return "text";
}

std::string KebabCase(std::string_view camel) {
  std::string out;
  out.reserve(camel.size() + 4);
  for (size_t i = 0; i < camel.size(); ++i) {
    const char c = camel[i];
    if (std::isupper(static_cast<unsigned char>(c))) {
      if (i > 0) out.push_back('-');
      out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    } else {
      out.push_back(c);
    }
  }
  return out;
}

std::string ContentItemDef::QualifiedName() const {
  return StrCat(ShortName(artefact), ".", name);
}

const AttributeDef* ConceptDef::FindAttribute(std::string_view name) const {
  for (const AttributeDef& attribute : attributes) {
    if (attribute.name == name) return &attribute;
  }
  return nullptr;
}

Catalog BuildCatalog() {
  Catalog catalog;
  for (const ArtefactSpec& spec : ArtefactSpecs()) {
    ArtefactTypeDef def;
    def.type = spec.type;
    def.id = std::string(spec.id);
    def.display_name = std::string(spec.display_name);
    def.keyword = KebabCase(spec.id);
    def.owning_role = std::string(spec.role);
    def.milestones = {StrCat(spec.milestone_prefix, "-M1"),
                      StrCat(spec.milestone_prefix, "-M2")};
    for (const ItemSpec& item_spec : spec.items) {
      ContentItemDef item;
      item.id = ItemId{static_cast<uint16_t>(catalog.items_.size())};
      item.name = std::string(item_spec.name);
      item.display_name = std::string(item_spec.display_name);
      item.keyword = KebabCase(item_spec.name);
      item.artefact = spec.type;
      item.domain_stereotype = item_spec.stereotype;
      item.mandatory = true;
      for (const ConceptSpec& concept_spec : item_spec.concepts) {
        ConceptDef concept_def;
        concept_def.kind = std::string(concept_spec.kind);
        concept_def.keyword = KebabCase(concept_spec.kind);
        concept_def.home_item = item.id;
        concept_def.attributes.push_back(Text("description"));
        for (const AttributeDef& extra : concept_spec.extra_attributes) {
          concept_def.attributes.push_back(extra);
        }
        item.concept_kinds.push_back(concept_def.kind);
        catalog.concepts_.push_back(std::move(concept_def));
      }
      def.content_items.push_back(item.id);
      catalog.items_.push_back(std::move(item));
    }
    catalog.roles_.push_back(RoleDef{std::string(spec.role),
                                     std::string(spec.role_display_name),
                                     spec.type});
    catalog.milestones_.push_back(MilestoneDef{def.milestones[0], spec.type,
                                               MilestoneKind::kFirstItemDefined,
                                               def.content_items.front()});
    catalog.milestones_.push_back(MilestoneDef{def.milestones[1], spec.type,
                                               MilestoneKind::kFinalised,
                                               std::nullopt});
    catalog.artefact_types_.push_back(std::move(def));
  }
  for (const RuleSpec& spec : RuleSpecs()) {
    RelationRule rule;
    rule.relation = spec.relation;
    rule.source_kind = std::string(spec.source);
    for (std::string_view target : spec.targets) {
      rule.target_kinds.emplace_back(target);
    }
    rule.multiplicity = spec.multiplicity;
    catalog.rules_.push_back(std::move(rule));
  }
  catalog.BuildIndexes();
  return catalog;
}

void Catalog::BuildIndexes() {
  concept_by_kind_.clear();
  concept_by_keyword_.clear();
  for (size_t i = 0; i < concepts_.size(); ++i) {
    concept_by_kind_.emplace(concepts_[i].kind, i);
    concept_by_keyword_.emplace(concepts_[i].keyword, i);
  }
}

const Catalog& LoadCatalog() {
  static const Catalog* const catalog = [] {
    auto* built = new Catalog(BuildCatalog());
    if (absl::Status status = built->SelfCheck(); !status.ok()) {
      std::fprintf(stderr, "fatal: embedded catalog is inconsistent: %s\n",
                   std::string(status.message()).c_str());
      std::abort();
    }
    return built;
  }();
  return *catalog;
}

std::optional<ArtefactType> Catalog::ArtefactFromKeyword(
    std::string_view keyword) const {
  for (const ArtefactTypeDef& def : artefact_types_) {
    if (def.keyword == keyword) return def.type;
  }
  return std::nullopt;
}

std::optional<ItemId> Catalog::FindItem(ArtefactType artefact,
                                        std::string_view name) const {
  for (ItemId id : artefact_types_[Index(artefact)].content_items) {
    if (items_[id.value].name == name) return id;
  }
  return std::nullopt;
}

std::optional<ItemId> Catalog::FindItemByKeyword(
    ArtefactType artefact, std::string_view keyword) const {
  for (ItemId id : artefact_types_[Index(artefact)].content_items) {
    if (items_[id.value].keyword == keyword) return id;
  }
  return std::nullopt;
}

std::vector<ItemId> Catalog::FindItemsByName(std::string_view name) const {
  std::vector<ItemId> found;
  if (size_t dot = name.find('.'); dot != std::string_view::npos) {
    std::optional<ArtefactType> artefact =
        ArtefactTypeFromShortName(name.substr(0, dot));
    if (!artefact.has_value()) return found;
    if (std::optional<ItemId> id = FindItem(*artefact, name.substr(dot + 1))) {
      found.push_back(*id);
    }
    return found;
  }
  for (const ContentItemDef& item : items_) {
    if (item.name == name) found.push_back(item.id);
  }
  return found;
}

bool Catalog::IsItemKeyword(std::string_view keyword) const {
  return std::any_of(items_.begin(), items_.end(),
                     [&](const ContentItemDef& item) {
                       return item.keyword == keyword;
                     });
}

const ConceptDef* Catalog::FindConcept(std::string_view kind) const {
  auto it = concept_by_kind_.find(std::string(kind));
  return it == concept_by_kind_.end() ? nullptr : &concepts_[it->second];
}

const ConceptDef* Catalog::FindConceptByKeyword(std::string_view keyword) const {
  auto it = concept_by_keyword_.find(std::string(keyword));
  return it == concept_by_keyword_.end() ? nullptr : &concepts_[it->second];
}

absl::StatusOr<RelationVerdict> Catalog::CheckRelationAllowed(
    std::string_view source_kind, Relation relation,
    std::string_view target_kind) const {
  if (FindConcept(source_kind) == nullptr) {
    return absl::NotFoundError(StrCat("unknown kind '", source_kind, "'"));
  }
  if (FindConcept(target_kind) == nullptr) {
    return absl::NotFoundError(StrCat("unknown kind '", target_kind, "'"));
  }
  for (const RelationRule* rule : RulesFor(source_kind, relation)) {
    if (std::find(rule->target_kinds.begin(), rule->target_kinds.end(),
                  target_kind) != rule->target_kinds.end()) {
      return RelationVerdict{true, rule->multiplicity};
    }
  }
  return RelationVerdict{false, std::nullopt};
}

std::vector<const RelationRule*> Catalog::RulesFor(std::string_view source_kind,
                                                   Relation relation) const {
  std::vector<const RelationRule*> found;
  for (const RelationRule& rule : rules_) {
    if (rule.relation == relation && rule.source_kind == source_kind) {
      found.push_back(&rule);
    }
  }
  return found;
}

std::vector<std::string> Catalog::AllowedTargets(std::string_view source_kind,
                                                 Relation relation) const {
  std::vector<std::string> targets;
  for (const RelationRule* rule : RulesFor(source_kind, relation)) {
    for (const std::string& target : rule->target_kinds) {
      if (std::find(targets.begin(), targets.end(), target) == targets.end()) {
        targets.push_back(target);
      }
    }
  }
  return targets;
}

std::vector<ItemId> Catalog::ContentItemsFor(ArtefactType artefact,
                                             DomainProfile profile) const {
  std::vector<ItemId> result;
  for (ItemId id : artefact_types_[Index(artefact)].content_items) {
    const ContentItemDef& item = items_[id.value];
    if (item.domain_stereotype.has_value() && profile != DomainProfile::kBoth) {
      const bool is_bis = profile == DomainProfile::kBusinessInformationSystems;
      const bool wants_bis = *item.domain_stereotype ==
                             DomainStereotype::kBusinessInformationSystems;
      if (is_bis != wants_bis) continue;
    }
    result.push_back(id);
  }
  return result;
}

const MilestoneDef& Catalog::milestone(ArtefactType artefact,
                                       MilestoneKind kind) const {
  for (const MilestoneDef& def : milestones_) {
    if (def.artefact == artefact && def.kind == kind) return def;
  }
  // SelfCheck guarantees one milestone of each kind per artefact type.
  std::abort();
}

absl::Status Catalog::SelfCheck() const {
  if (artefact_types_.size() != 3) {
    return absl::InternalError("expected exactly three artefact types");
  }
  for (size_t i = 0; i < artefact_types_.size(); ++i) {
    if (Index(artefact_types_[i].type) != i) {
      return absl::InternalError("artefact types out of level order");
    }
  }
  if (roles_.size() != 3) {
    return absl::InternalError("expected exactly three roles");
  }
  if (milestones_.size() != 6) {
    return absl::InternalError("expected exactly six milestones");
  }
  std::set<std::string> kinds;
  for (const ConceptDef& concept_def : concepts_) {
    if (!kinds.insert(concept_def.kind).second) {
      return absl::InternalError(
          StrCat("duplicate concept kind ", concept_def.kind));
    }
    if (concept_def.home_item.value >= items_.size()) {
      return absl::InternalError(StrCat(
          "concept ", concept_def.kind, " references a missing home item"));
    }
    const ContentItemDef& home = items_[concept_def.home_item.value];
    if (std::find(home.concept_kinds.begin(), home.concept_kinds.end(),
                  concept_def.kind) == home.concept_kinds.end()) {
      return absl::InternalError(StrCat(
          "home item ", home.name, " does not list ", concept_def.kind));
    }
    if (IsItemKeyword(concept_def.keyword) ||
        ArtefactFromKeyword(concept_def.keyword).has_value() ||
        RelationFromKeyword(concept_def.keyword).has_value()) {
      return absl::InternalError(
          StrCat("keyword clash for kind ", concept_def.kind));
    }
  }
  for (const RelationRule& rule : rules_) {
    const ConceptDef* source = FindConcept(rule.source_kind);
    if (source == nullptr) {
      return absl::InternalError(
          StrCat("relation rule references unknown kind ",
                       rule.source_kind));
    }
    for (const std::string& target_kind : rule.target_kinds) {
      const ConceptDef* target = FindConcept(target_kind);
      if (target == nullptr) {
        return absl::InternalError(StrCat(
            "relation rule references unknown kind ", target_kind));
      }
      if (rule.relation == Relation::kRealises) {
        const size_t source_level = Index(item(source->home_item).artefact);
        const size_t target_level = Index(item(target->home_item).artefact);
        if (source_level != target_level + 1) {
          return absl::InternalError(StrCat(
              "realisation ", rule.source_kind, " -> ", target_kind,
              " does not point to the adjacent higher level"));
        }
      }
    }
  }
  for (const MilestoneDef& def : milestones_) {
    if (def.kind == MilestoneKind::kFirstItemDefined &&
        (!def.trigger_item.has_value() ||
         item(*def.trigger_item).artefact != def.artefact)) {
      return absl::InternalError(
          StrCat("milestone ", def.id, " has no valid trigger item"));
    }
  }
  return absl::OkStatus();
}

}  // namespace amdire
