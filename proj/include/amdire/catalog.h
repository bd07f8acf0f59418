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

#ifndef AMDIRE_CATALOG_H_
#define AMDIRE_CATALOG_H_

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"

namespace amdire {

// The three artefact types double as abstraction levels. Declaration order is
// refinement order: Context is the highest level, System the lowest.
enum class ArtefactType : uint8_t { kContext = 0, kRequirements = 1, kSystem = 2 };

inline constexpr std::array<ArtefactType, 3> kAllArtefactTypes = {
    ArtefactType::kContext, ArtefactType::kRequirements, ArtefactType::kSystem};

inline constexpr size_t Index(ArtefactType type) {
  return static_cast<size_t>(type);
}

// Short name used in the CLI and as the default file alias.
std::string_view ShortName(ArtefactType type);
std::optional<ArtefactType> ArtefactTypeFromShortName(std::string_view name);

enum class Relation : uint8_t {
  kRealises,
  kRefines,
  kSatisfies,
  kConstrains,
  kIssuedBy,
  kComposes,
  kTriggers,
  kAssessedBy,
  kCausedBy,
  kDemandsQualityAttribute,
  kRelatedTo,
};

inline constexpr std::array<Relation, 11> kAllRelations = {
    Relation::kRealises,   Relation::kRefines,
    Relation::kSatisfies,  Relation::kConstrains,
    Relation::kIssuedBy,   Relation::kComposes,
    Relation::kTriggers,   Relation::kAssessedBy,
    Relation::kCausedBy,   Relation::kDemandsQualityAttribute,
    Relation::kRelatedTo,
};

// ARDL keyword ("realises", "issued-by", "demands", ...).
std::string_view RelationKeyword(Relation relation);
std::optional<Relation> RelationFromKeyword(std::string_view keyword);
// Enumerator name ("Realises", "IssuedBy", ...).
std::string_view RelationName(Relation relation);

enum class Multiplicity : uint8_t { kExactlyOne, kAtMostOne, kAtLeastOne, kAny };
std::string_view MultiplicityName(Multiplicity multiplicity);

enum class DomainStereotype : uint8_t {
  kBusinessInformationSystems,
  kEmbeddedReactiveSystems,
};

enum class DomainProfile : uint8_t {
  kBusinessInformationSystems,
  kEmbeddedReactiveSystems,
  kBoth,
};

// "bis" | "embedded" | "both".
std::string_view DomainProfileName(DomainProfile profile);
std::optional<DomainProfile> DomainProfileFromName(std::string_view name);

enum class AttributeType : uint8_t { kText, kBoolean, kInteger, kReference };
std::string_view AttributeTypeName(AttributeType type);

// Index of a content item in the catalog. Item names are not unique across
// artefact types (both the requirements and the system specification own a
// "DataModel"), so items are identified by position.
struct ItemId {
  uint16_t value = 0;
  friend auto operator<=>(const ItemId&, const ItemId&) = default;
};

struct ArtefactTypeDef {
  ArtefactType type;
  std::string id;            // "RequirementsSpecification"
  std::string display_name;  // "Requirements Specification"
  std::string keyword;       // "requirements-specification"
  std::vector<ItemId> content_items;
  std::string owning_role;
  // First-item milestone, then finalisation milestone.
  std::array<std::string, 2> milestones;
};

struct ContentItemDef {
  ItemId id;
  std::string name;          // "SystemVision"
  std::string display_name;  // "System Vision"
  std::string keyword;       // "system-vision"
  ArtefactType artefact;
  std::optional<DomainStereotype> domain_stereotype;
  bool mandatory = true;
  std::vector<std::string> concept_kinds;

  // "requirements.DataModel"; unique across the catalog.
  std::string QualifiedName() const;
};

struct AttributeDef {
  std::string name;
  AttributeType type;
};

struct ConceptDef {
  std::string kind;     // "UserGroup"
  std::string keyword;  // "user-group"
  ItemId home_item;
  std::vector<AttributeDef> attributes;

  const AttributeDef* FindAttribute(std::string_view name) const;
};

struct RelationRule {
  Relation relation;
  std::string source_kind;
  std::vector<std::string> target_kinds;
  Multiplicity multiplicity;
};

struct RoleDef {
  std::string id;
  std::string display_name;
  ArtefactType responsible_for;
};

enum class MilestoneKind : uint8_t { kFirstItemDefined, kFinalised };

struct MilestoneDef {
  std::string id;  // "RS-M1"
  ArtefactType artefact;
  MilestoneKind kind;
  std::optional<ItemId> trigger_item;
};

struct RelationVerdict {
  bool allowed = false;
  std::optional<Multiplicity> multiplicity;
};

// The AMDiRE metamodel: artefact types, content items, concept kinds, and
// the relation rules between kinds. Immutable once built.
class Catalog {
 public:
  Catalog() = default;

  const std::vector<ArtefactTypeDef>& artefact_types() const {
    return artefact_types_;
  }
  const std::vector<ContentItemDef>& items() const { return items_; }
  const std::vector<ConceptDef>& concepts() const { return concepts_; }
  const std::vector<RelationRule>& relation_rules() const { return rules_; }
  const std::vector<RoleDef>& roles() const { return roles_; }
  const std::vector<MilestoneDef>& milestones() const { return milestones_; }

  const ArtefactTypeDef& artefact(ArtefactType type) const {
    return artefact_types_[Index(type)];
  }
  const ContentItemDef& item(ItemId id) const { return items_[id.value]; }

  std::optional<ArtefactType> ArtefactFromKeyword(std::string_view keyword) const;
  std::optional<ItemId> FindItem(ArtefactType artefact,
                                 std::string_view name) const;
  std::optional<ItemId> FindItemByKeyword(ArtefactType artefact,
                                          std::string_view keyword) const;
  // Accepts "RiskList" or "requirements.DataModel". An unqualified name that
  // exists in more than one artefact type yields every match.
  std::vector<ItemId> FindItemsByName(std::string_view name) const;
  bool IsItemKeyword(std::string_view keyword) const;

  const ConceptDef* FindConcept(std::string_view kind) const;
  const ConceptDef* FindConceptByKeyword(std::string_view keyword) const;

  // Pure lookup against the relation rule table. Unknown kinds are an error.
  absl::StatusOr<RelationVerdict> CheckRelationAllowed(
      std::string_view source_kind, Relation relation,
      std::string_view target_kind) const;

  // Rules with the given source kind and relation (usually zero or one).
  std::vector<const RelationRule*> RulesFor(std::string_view source_kind,
                                            Relation relation) const;
  // Every kind reachable from source_kind by a single relation.
  std::vector<std::string> AllowedTargets(std::string_view source_kind,
                                          Relation relation) const;

  // Items of the artefact type whose domain stereotype is compatible with the
  // profile, in catalog order.
  std::vector<ItemId> ContentItemsFor(ArtefactType artefact,
                                      DomainProfile profile) const;

  const MilestoneDef& milestone(ArtefactType artefact,
                                MilestoneKind kind) const;

  // Verifies internal reference integrity and the structural invariants of
  // the metamodel.
  absl::Status SelfCheck() const;

 private:
  friend Catalog BuildCatalog();
  void BuildIndexes();

  std::vector<ArtefactTypeDef> artefact_types_;
  std::vector<ContentItemDef> items_;
  std::vector<ConceptDef> concepts_;
  std::vector<RelationRule> rules_;
  std::vector<RoleDef> roles_;
  std::vector<MilestoneDef> milestones_;

  std::unordered_map<std::string, size_t> concept_by_kind_;
  std::unordered_map<std::string, size_t> concept_by_keyword_;
};

// Builds a fresh copy of the embedded AMDiRE catalog.
Catalog BuildCatalog();

// The process-wide catalog. Built and self-checked on first use; a failing
// self-check aborts, since it can only result from a defect in the embedded
// data.
const Catalog& LoadCatalog();

// "UserGroup" -> "user-group".
std::string KebabCase(std::string_view camel);

}  // namespace amdire

#endif  // AMDIRE_CATALOG_H_
