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

#include "amdire/cli.h"

#include <stdlib.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "amdire/pipeline.h"
#include "gtest/gtest.h"
#include "json.hpp"
#include "testing.h"

namespace amdire {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome RunCli(std::vector<std::string> args, bool terminal = false) {
  std::ostringstream out;
  std::ostringstream err;
  RunOptions options;
  options.out_is_terminal = terminal;
  const int code = Run(args, out, err, options);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    std::string pattern =
        (fs::temp_directory_path() / "amdire-cli-XXXXXX").string();
    ASSERT_NE(mkdtemp(pattern.data()), nullptr);
    dir_ = pattern;
  }
  void TearDown() override { fs::remove_all(dir_); }

  // Copies the ATM fixture into the scratch directory.
  std::string CopyAtm() {
    const fs::path target = dir_ / "atm";
    fs::copy(fixtures::TestdataDir() / "atm", target);
    return target.string();
  }

  static void Edit(const fs::path& file, std::string_view from,
                   std::string_view to) {
    std::string content = *ReadTextFile(file);
    const size_t at = content.find(from);
    ASSERT_NE(at, std::string::npos) << from;
    content.replace(at, from.size(), to);
    ASSERT_TRUE(WriteTextFile(file, content).ok());
  }

  fs::path dir_;
};

TEST_F(CliTest, CheckCleanAtm) {
  Outcome outcome = RunCli({"check", CopyAtm()});
  EXPECT_EQ(outcome.code, kExitOk) << outcome.out << outcome.err;
  EXPECT_EQ(outcome.out, "0 errors, 0 warnings, 0 info\n");
}

TEST_F(CliTest, CheckReportsDeletedRealisation) {
  const std::string root = CopyAtm();
  Edit(fs::path(root) / "system.ardl",
       "      realises requirements.WithdrawCash\n", "");
  Outcome outcome = RunCli({"check", root});
  EXPECT_EQ(outcome.code, kExitFindings);
  EXPECT_EQ(outcome.out,
            "system.ardl:14:5: error[AMD033] SystemFunction 'Withdrawal' does "
            "not realise a SystemAction or UserVisibleFunction\n"
            "1 error, 0 warnings, 0 info\n");

  Outcome json = RunCli({"check", root, "--format", "json"});
  EXPECT_EQ(json.code, kExitFindings);
  nlohmann::json doc = nlohmann::json::parse(json.out);
  ASSERT_EQ(doc["diagnostics"].size(), 1u);
  EXPECT_EQ(doc["diagnostics"][0]["code"], "AMD033");
}

TEST_F(CliTest, InitThenCheckFindsEmptyItems) {
  const std::string root = (dir_ / "fresh").string();
  Outcome init = RunCli({"init", root, "--name", "demo"});
  ASSERT_EQ(init.code, kExitOk) << init.err;
  EXPECT_TRUE(fs::exists(fs::path(root) / "amdire-project.txt"));
  EXPECT_TRUE(fs::exists(fs::path(root) / "requirements.ardl"));

  Outcome check = RunCli({"check", root});
  EXPECT_EQ(check.code, kExitFindings);
  EXPECT_NE(check.out.find("22 errors"), std::string::npos) << check.out;

  Outcome again = RunCli({"init", root});
  EXPECT_EQ(again.code, kExitUsage);
}

TEST_F(CliTest, InitEmbeddedOmitsServiceModel) {
  const std::string root = (dir_ / "embedded").string();
  ASSERT_EQ(RunCli({"init", root, "--profile", "embedded"}).code, kExitOk);
  const std::string requirements =
      *ReadTextFile(fs::path(root) / "requirements.ardl");
  EXPECT_EQ(requirements.find("service-model"), std::string::npos);
  EXPECT_NE(requirements.find("system-vision {}"), std::string::npos);
  Outcome check = RunCli({"check", root});
  EXPECT_NE(check.out.find("21 errors"), std::string::npos) << check.out;
}

TEST_F(CliTest, StatsOnFreshProject) {
  const std::string root = (dir_ / "fresh").string();
  ASSERT_EQ(RunCli({"init", root}).code, kExitOk);
  Outcome stats = RunCli({"stats", root});
  EXPECT_EQ(stats.code, kExitOk);
  EXPECT_NE(stats.out.find("artefact types: 3\n"), std::string::npos);
  EXPECT_NE(stats.out.find("elements: 0 "), std::string::npos) << stats.out;
  EXPECT_NE(stats.out.find("RS-M1: not reached"), std::string::npos);
}

TEST_F(CliTest, TailorListsItems) {
  const std::string root = CopyAtm();
  std::ofstream(fs::path(root) / "tailoring.txt")
      << "domain-profile: embedded\n"
         "disable ServiceModel: \"not a business system\"\n"
         "factor custom_development: no\n"
         "assign RequirementsEngineer: Alex\n";
  Outcome outcome = RunCli({"tailor", root});
  EXPECT_EQ(outcome.code, kExitOk) << outcome.out;
  EXPECT_NE(outcome.out.find("Requirements Specification (9 items)"),
            std::string::npos)
      << outcome.out;
  EXPECT_NE(outcome.out.find("  ProcessRequirements [mandatory]\n"),
            std::string::npos);
  EXPECT_NE(outcome.out.find("RequirementsEngineer: Alex"), std::string::npos);
  EXPECT_EQ(outcome.out.find("ServiceModel"), std::string::npos);
}

TEST_F(CliTest, TailorReportsConflicts) {
  const std::string root = CopyAtm();
  std::ofstream(fs::path(root) / "tailoring.txt")
      << "disable RiskList: \"managed centrally\"\n"
         "factor safety_critical: yes\n";
  Outcome outcome = RunCli({"tailor", root});
  EXPECT_EQ(outcome.code, kExitFindings);
  EXPECT_NE(outcome.out.find("error[AMD088]"), std::string::npos) << outcome.out;
  EXPECT_NE(outcome.out.find("requirements.RiskList re-enabled"),
            std::string::npos);
}

TEST_F(CliTest, Trace) {
  const std::string root = CopyAtm();
  Outcome table =
      RunCli({"trace", root, "--from", "DataElement", "--to", "DataObject"});
  EXPECT_EQ(table.code, kExitOk);
  EXPECT_NE(table.out.find("coverage: 2/2 rows covered (100.0%)"),
            std::string::npos);

  Outcome bad = RunCli({"trace", root, "--from", "Actor", "--to", "Component"});
  EXPECT_EQ(bad.code, kExitUsage);
  EXPECT_NE(bad.err.find("UserGroup"), std::string::npos) << bad.err;

  Outcome missing = RunCli({"trace", root, "--from", "Actor"});
  EXPECT_EQ(missing.code, kExitUsage);
}

TEST_F(CliTest, RenderToFile) {
  const std::string root = CopyAtm();
  const std::string target = (dir_ / "out" / "requirements.md").string();
  Outcome outcome = RunCli({"render", root, "--artefact", "requirements",
                            "--out", target});
  EXPECT_EQ(outcome.code, kExitOk) << outcome.err;
  EXPECT_TRUE(outcome.out.empty());
  const std::string body = *ReadTextFile(target);
  EXPECT_NE(body.find("## System Vision"), std::string::npos);

  Outcome ardl = RunCli(
      {"render", root, "--artefact", "system", "--format", "ardl"});
  EXPECT_EQ(ardl.code, kExitOk);
  EXPECT_EQ(ardl.out.rfind("system-specification \"ATM\" {\n", 0), 0u);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(RunCli({}).code, kExitUsage);
  EXPECT_EQ(RunCli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(RunCli({"check", CopyAtm(), "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(RunCli({"render", dir_.string() + "/atm"}).code, kExitUsage);
  Outcome missing = RunCli({"check", (dir_ / "nowhere").string()});
  EXPECT_EQ(missing.code, kExitUsage);
  EXPECT_NE(missing.err.find("amdire-project.txt"), std::string::npos);
}

TEST_F(CliTest, Help) {
  Outcome outcome = RunCli({"--help"});
  EXPECT_EQ(outcome.code, kExitOk);
  EXPECT_NE(outcome.out.find("check"), std::string::npos);
}

TEST_F(CliTest, ColorFollowsTerminalAndEnvironment) {
  const std::string root = CopyAtm();
  Edit(fs::path(root) / "system.ardl",
       "      realises requirements.WithdrawCash\n", "");
  unsetenv("AMDIRE_NO_COLOR");
  EXPECT_NE(RunCli({"check", root}, true).out.find('\x1b'), std::string::npos);
  EXPECT_EQ(RunCli({"check", root}, false).out.find('\x1b'), std::string::npos);
  setenv("AMDIRE_NO_COLOR", "1", 1);
  EXPECT_EQ(RunCli({"check", root}, true).out.find('\x1b'), std::string::npos);
  unsetenv("AMDIRE_NO_COLOR");
}

}  // namespace
}  // namespace amdire
