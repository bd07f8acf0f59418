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

#include <set>
#include <string>

#include "gtest/gtest.h"

namespace amdire {
namespace {

TEST(CatalogTest, HasThreeArtefactTypesInLevelOrder) {
  const Catalog& catalog = LoadCatalog();
  ASSERT_EQ(catalog.artefact_types().size(), 3u);
  EXPECT_EQ(catalog.artefact_types()[0].id, "ContextSpecification");
  EXPECT_EQ(catalog.artefact_types()[1].id, "RequirementsSpecification");
  EXPECT_EQ(catalog.artefact_types()[2].id, "SystemSpecification");
  for (const ArtefactTypeDef& type : catalog.artefact_types()) {
    EXPECT_FALSE(type.owning_role.empty()) << type.id;
    EXPECT_EQ(type.milestones.size(), 2u);
  }
}

TEST(CatalogTest, ContentItemCountsPerArtefactType) {
  const Catalog& catalog = LoadCatalog();
  EXPECT_EQ(catalog.artefact(ArtefactType::kContext).content_items.size(), 7u);
  EXPECT_EQ(catalog.artefact(ArtefactType::kRequirements).content_items.size(),
            10u);
  EXPECT_EQ(catalog.artefact(ArtefactType::kSystem).content_items.size(), 5u);
  EXPECT_EQ(catalog.items().size(), 22u);
}

TEST(CatalogTest, ContentItemNamesInOrder) {
  const Catalog& catalog = LoadCatalog();
  auto names = [&](ArtefactType type) {
    std::vector<std::string> out;
    for (ItemId id : catalog.artefact(type).content_items) {
      out.push_back(catalog.item(id).name);
    }
    return out;
  };
  EXPECT_EQ(names(ArtefactType::kContext),
            (std::vector<std::string>{"ProjectScope", "ConstraintsAndRules",
                                      "StakeholderModel", "BusinessCase",
                                      "ObjectivesAndGoals", "DomainModel",
                                      "Glossary"}));
  EXPECT_EQ(names(ArtefactType::kRequirements),
            (std::vector<std::string>{
                "SystemVision", "UsageModel", "ServiceModel", "DataModel",
                "FunctionalHierarchy", "QualityRequirements",
                "DeploymentRequirements", "SystemConstraints",
                "ProcessRequirements", "RiskList"}));
  EXPECT_EQ(names(ArtefactType::kSystem),
            (std::vector<std::string>{"ArchitectureOverview", "FunctionModel",
                                      "ComponentModel", "BehaviourModel",
                                      "DataModel"}));
}

TEST(CatalogTest, ServiceModelIsTheOnlyStereotypedItem) {
  const Catalog& catalog = LoadCatalog();
  for (const ContentItemDef& item : catalog.items()) {
    if (item.QualifiedName() == "requirements.ServiceModel") {
      EXPECT_EQ(item.domain_stereotype,
                DomainStereotype::kBusinessInformationSystems);
    } else {
      EXPECT_FALSE(item.domain_stereotype.has_value()) << item.name;
    }
  }
}

TEST(CatalogTest, ConceptKindsHaveUniqueHomes) {
  const Catalog& catalog = LoadCatalog();
  EXPECT_GE(catalog.concepts().size(), 70u);
  std::set<std::string> kinds;
  std::set<std::string> keywords;
  for (const ConceptDef& concept_def : catalog.concepts()) {
    EXPECT_TRUE(kinds.insert(concept_def.kind).second) << concept_def.kind;
    EXPECT_TRUE(keywords.insert(concept_def.keyword).second);
    const ContentItemDef& home = catalog.item(concept_def.home_item);
    EXPECT_NE(std::find(home.concept_kinds.begin(), home.concept_kinds.end(),
                        concept_def.kind),
              home.concept_kinds.end());
    EXPECT_NE(concept_def.FindAttribute("description"), nullptr);
  }
}

TEST(CatalogTest, RolesAndMilestones) {
  const Catalog& catalog = LoadCatalog();
  EXPECT_EQ(catalog.roles().size(), 3u);
  ASSERT_EQ(catalog.milestones().size(), 6u);
  const MilestoneDef& rs_m1 =
      catalog.milestone(ArtefactType::kRequirements, MilestoneKind::kFirstItemDefined);
  EXPECT_EQ(rs_m1.id, "RS-M1");
  ASSERT_TRUE(rs_m1.trigger_item.has_value());
  EXPECT_EQ(catalog.item(*rs_m1.trigger_item).name, "SystemVision");
  EXPECT_EQ(catalog.milestone(ArtefactType::kSystem, MilestoneKind::kFinalised).id,
            "SS-M2");
}

TEST(CatalogTest, CheckRelationAllowed) {
  const Catalog& catalog = LoadCatalog();
  absl::StatusOr<RelationVerdict> verdict =
      catalog.CheckRelationAllowed("Actor", Relation::kRealises, "UserGroup");
  ASSERT_TRUE(verdict.ok());
  EXPECT_TRUE(verdict->allowed);
  EXPECT_EQ(verdict->multiplicity, Multiplicity::kExactlyOne);

  verdict = catalog.CheckRelationAllowed("Actor", Relation::kRealises, "Actor");
  ASSERT_TRUE(verdict.ok());
  EXPECT_FALSE(verdict->allowed);

  verdict = catalog.CheckRelationAllowed("SystemFunction", Relation::kRealises,
                                         "Component");
  ASSERT_TRUE(verdict.ok());
  EXPECT_FALSE(verdict->allowed);

  EXPECT_FALSE(
      catalog.CheckRelationAllowed("Cashier", Relation::kRealises, "Actor").ok());
}

TEST(CatalogTest, RealisationFamiliesAreCovered) {
  const Catalog& catalog = LoadCatalog();
  const std::vector<std::pair<std::string, std::string>> families = {
      {"Actor", "UserGroup"},           {"Actor", "ExternalSystem"},
      {"DataObject", "BusinessObject"}, {"SystemAction", "ProcessStep"},
      {"ActorAction", "ProcessStep"},   {"SystemFunction", "SystemAction"},
      {"SystemFunction", "UserVisibleFunction"},
      {"DataElement", "DataObject"},    {"State", "Mode"},
  };
  for (const auto& [source, target] : families) {
    absl::StatusOr<RelationVerdict> verdict =
        catalog.CheckRelationAllowed(source, Relation::kRealises, target);
    ASSERT_TRUE(verdict.ok());
    EXPECT_TRUE(verdict->allowed) << source << " -> " << target;
  }
}

TEST(CatalogTest, RealisesPointsOneLevelUp) {
  const Catalog& catalog = LoadCatalog();
  for (const RelationRule& rule : catalog.relation_rules()) {
    if (rule.relation != Relation::kRealises) continue;
    const ConceptDef* source = catalog.FindConcept(rule.source_kind);
    ASSERT_NE(source, nullptr);
    const size_t source_level =
        Index(catalog.item(source->home_item).artefact);
    for (const std::string& target_kind : rule.target_kinds) {
      const ConceptDef* target = catalog.FindConcept(target_kind);
      ASSERT_NE(target, nullptr);
      EXPECT_EQ(Index(catalog.item(target->home_item).artefact) + 1,
                source_level)
          << rule.source_kind << " realises " << target_kind;
    }
  }
}

TEST(CatalogTest, ContentItemsForProfile) {
  const Catalog& catalog = LoadCatalog();
  const std::vector<ItemId> embedded = catalog.ContentItemsFor(
      ArtefactType::kRequirements, DomainProfile::kEmbeddedReactiveSystems);
  EXPECT_EQ(embedded.size(), 9u);
  for (ItemId id : embedded) EXPECT_NE(catalog.item(id).name, "ServiceModel");
  EXPECT_EQ(catalog
                .ContentItemsFor(ArtefactType::kRequirements,
                                 DomainProfile::kBusinessInformationSystems)
                .size(),
            10u);
  EXPECT_EQ(
      catalog.ContentItemsFor(ArtefactType::kContext, DomainProfile::kBoth).size(),
      7u);
}

TEST(CatalogTest, LookupsByNameAndKeyword) {
  const Catalog& catalog = LoadCatalog();
  EXPECT_EQ(catalog.FindItemsByName("DataModel").size(), 2u);
  EXPECT_EQ(catalog.FindItemsByName("requirements.DataModel").size(), 1u);
  EXPECT_TRUE(catalog.FindItemsByName("Nothing").empty());
  ASSERT_NE(catalog.FindConceptByKeyword("user-group"), nullptr);
  EXPECT_EQ(catalog.FindConceptByKeyword("user-group")->kind, "UserGroup");
  EXPECT_EQ(catalog.ArtefactFromKeyword("system-specification"),
            ArtefactType::kSystem);
  EXPECT_TRUE(catalog.IsItemKeyword("risk-list"));
  EXPECT_EQ(KebabCase("SystemUnderConsideration"), "system-under-consideration");
}

TEST(CatalogTest, AllowedTargets) {
  const Catalog& catalog = LoadCatalog();
  std::vector<std::string> targets =
      catalog.AllowedTargets("Actor", Relation::kRealises);
  std::sort(targets.begin(), targets.end());
  EXPECT_EQ(targets, (std::vector<std::string>{"ExternalSystem", "UserGroup"}));
  EXPECT_TRUE(catalog.AllowedTargets("Term", Relation::kRealises).empty());
}

TEST(CatalogTest, SelfCheckPasses) {
  EXPECT_TRUE(LoadCatalog().SelfCheck().ok());
}

TEST(CatalogTest, KeywordsRoundTrip) {
  for (Relation relation : kAllRelations) {
    EXPECT_EQ(RelationFromKeyword(RelationKeyword(relation)), relation);
  }
  for (ArtefactType type : kAllArtefactTypes) {
    EXPECT_EQ(ArtefactTypeFromShortName(ShortName(type)), type);
  }
  EXPECT_EQ(DomainProfileFromName("embedded"),
            DomainProfile::kEmbeddedReactiveSystems);
  EXPECT_FALSE(DomainProfileFromName("mainframe").has_value());
}

}  // namespace
}  // namespace amdire
