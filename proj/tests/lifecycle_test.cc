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

#include "amdire/lifecycle.h"

#include <map>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "testing.h"

namespace amdire {
namespace {

std::map<std::string, const MilestoneStatus*> ById(
    const std::vector<MilestoneStatus>& statuses) {
  std::map<std::string, const MilestoneStatus*> out;
  for (const MilestoneStatus& status : statuses) out[status.milestone] = &status;
  return out;
}

std::vector<MilestoneStatus> Milestones(const Analysis& analysis) {
  return ComputeMilestones(analysis.graph, LoadCatalog(), analysis.config,
                           analysis.diagnostics);
}

TEST(LifecycleTest, EmptyProjectReachesNothing) {
  const ProjectConfig config =
      ProjectConfig::ForProfile(LoadCatalog(), DomainProfile::kBoth);
  std::vector<MilestoneStatus> statuses =
      ComputeMilestones(ModelGraph(), LoadCatalog(), config);
  ASSERT_EQ(statuses.size(), 6u);
  for (const MilestoneStatus& status : statuses) {
    EXPECT_FALSE(status.reached) << status.milestone;
    EXPECT_FALSE(status.blocking.empty());
  }
}

TEST(LifecycleTest, AgreedAtmReachesEverything) {
  std::vector<MilestoneStatus> statuses =
      Milestones(fixtures::AnalyzeFixture("atm"));
  ASSERT_EQ(statuses.size(), 6u);
  for (const MilestoneStatus& status : statuses) {
    EXPECT_TRUE(status.reached) << status.milestone;
    EXPECT_TRUE(status.blocking.empty());
  }
}

TEST(LifecycleTest, OnlySystemVisionAgreed) {
  ProjectSources sources = fixtures::Load("atm");
  fixtures::ReplaceAll(sources, "status: agreed", "status: draft");
  for (const std::string& name :
       fixtures::ElementsInBlock(sources, "requirements", "system-vision")) {
    fixtures::SetStatus(sources, "requirements", name, "agreed");
  }
  Analysis analysis = fixtures::AnalyzeSources(sources);
  ASSERT_TRUE(analysis.diagnostics.empty());
  auto statuses = Milestones(analysis);
  auto by_id = ById(statuses);
  EXPECT_TRUE(by_id.at("RS-M1")->reached);
  const MilestoneStatus& final_status = *by_id.at("RS-M2");
  EXPECT_FALSE(final_status.reached);
  ASSERT_EQ(final_status.blocking.size(), 9u);
  EXPECT_NE(final_status.blocking[0].reason.find("Usage Model"),
            std::string::npos)
      << final_status.blocking[0].reason;
  EXPECT_NE(final_status.blocking[0].reason.find("not yet agreed"),
            std::string::npos);
  EXPECT_FALSE(by_id.at("CS-M1")->reached);
  EXPECT_FALSE(by_id.at("SS-M1")->reached);
}

TEST(LifecycleTest, DefinedIsNotEnoughForFirstItem) {
  ProjectSources sources = fixtures::Load("atm");
  fixtures::SetStatus(sources, "requirements", "Transaction", "defined");
  auto statuses = Milestones(fixtures::AnalyzeSources(sources));
  auto by_id = ById(statuses);
  EXPECT_FALSE(by_id.at("RS-M1")->reached);
  EXPECT_FALSE(by_id.at("RS-M2")->reached);
  EXPECT_TRUE(by_id.at("CS-M2")->reached);
}

TEST(LifecycleTest, ErrorsInTriggerItemBlockFirstMilestone) {
  ProjectSources sources = fixtures::Load("atm");
  fixtures::ReplaceOnce(sources, "requirements", "priority: 1", "priority: \"x\"");
  auto statuses = Milestones(fixtures::AnalyzeSources(sources));
  auto by_id = ById(statuses);
  EXPECT_FALSE(by_id.at("RS-M1")->reached);
  ASSERT_FALSE(by_id.at("RS-M1")->blocking.empty());
  EXPECT_NE(by_id.at("RS-M1")->blocking[0].reason.find("error"),
            std::string::npos);
}

TEST(LifecycleTest, ErrorsElsewhereOnlyBlockFinalisation) {
  ProjectSources sources = fixtures::Load("atm");
  fixtures::ReplaceOnce(sources, "system",
                        "      realises requirements.WithdrawCash\n", "");
  auto statuses = Milestones(fixtures::AnalyzeSources(sources));
  auto by_id = ById(statuses);
  EXPECT_TRUE(by_id.at("SS-M1")->reached);
  EXPECT_FALSE(by_id.at("SS-M2")->reached);
  EXPECT_TRUE(by_id.at("RS-M2")->reached);
}

TEST(LifecycleTest, DisabledItemsDoNotBlockFinalisation) {
  ProjectSources sources = fixtures::Load("atm");
  sources.tailoring.push_back(SourceFile{
      "tailoring.txt", "disable RiskList: \"risks tracked centrally\"\n", {}});
  fixtures::SetStatus(sources, "requirements", "NoTestUsers", "draft");
  auto statuses = Milestones(fixtures::AnalyzeSources(sources));
  EXPECT_TRUE(ById(statuses).at("RS-M2")->reached);
}

TEST(CompletenessTest, EmptyArtefact) {
  const ProjectConfig config =
      ProjectConfig::ForProfile(LoadCatalog(), DomainProfile::kBoth);
  Completeness completeness =
      ComputeCompleteness(ModelGraph(), config, {}, ArtefactType::kSystem);
  EXPECT_EQ(completeness.ratio, 0.0);
  EXPECT_EQ(completeness.items.size(), 5u);
}

TEST(CompletenessTest, AllItemsComplete) {
  Analysis analysis = fixtures::AnalyzeFixture("atm");
  for (ArtefactType type : kAllArtefactTypes) {
    Completeness completeness = ComputeCompleteness(
        analysis.graph, analysis.config, analysis.diagnostics, type);
    EXPECT_EQ(completeness.ratio, 1.0);
  }
}

TEST(CompletenessTest, HalfOfTheRequirementsItems) {
  ProjectSources sources = fixtures::MakeProject(
      "domain-profile: bis\n",
      {{"requirements",
        "requirements-specification \"R\" {\n"
        "  system-vision {\n    feature F \"f\" {}\n  }\n"
        "  functional-hierarchy {\n    mode M \"m\" {}\n  }\n"
        "  deployment-requirements {\n    technical-environment E \"e\" {}\n  }\n"
        "  system-constraints {\n    system-constraint C \"c\" {}\n  }\n"
        "  process-requirements {\n    time-schedule T \"t\" {}\n  }\n"
        "  risk-list {}\n"
        "}\n"}});
  Analysis analysis = fixtures::AnalyzeSources(sources);
  Completeness completeness =
      ComputeCompleteness(analysis.graph, analysis.config, analysis.diagnostics,
                          ArtefactType::kRequirements);
  EXPECT_EQ(completeness.items.size(), 10u);
  EXPECT_EQ(completeness.complete_items, 5u);
  EXPECT_DOUBLE_EQ(completeness.ratio, 0.5);
}

}  // namespace
}  // namespace amdire
