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

#include <regex>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "json.hpp"
#include "testing.h"

namespace amdire {
namespace {

Diagnostic Make(std::string code, Severity severity, std::string file,
                uint32_t line, uint32_t col) {
  Diagnostic diagnostic;
  diagnostic.code = std::move(code);
  diagnostic.severity = severity;
  diagnostic.message = "message for " + diagnostic.code;
  diagnostic.span = Span{std::move(file), line, col, line, col + 4, 0, 0};
  return diagnostic;
}

TEST(DiagnosticOutputTest, HumanLinePattern) {
  std::vector<Diagnostic> diagnostics = {
      Make("AMD033", Severity::kError, "system.ardl", 14, 5)};
  const std::string out = EmitDiagnostics(diagnostics, OutputFormat::kHuman);
  const std::regex line(
      "^[^:\\n]+:[0-9]+:[0-9]+: (error|warning|info)\\[AMD[0-9]{3}\\] .+$");
  const std::string first = out.substr(0, out.find('\n'));
  EXPECT_TRUE(std::regex_match(first, line)) << first;
  EXPECT_EQ(first, "system.ardl:14:5: error[AMD033] message for AMD033");
  EXPECT_NE(out.find("\n1 error, 0 warnings, 0 info\n"), std::string::npos);
}

TEST(DiagnosticOutputTest, HumanRelatedNotesAndRulesOff) {
  Diagnostic diagnostic = Make("AMD002", Severity::kError, "c.ardl", 4, 5);
  diagnostic.related.push_back(
      RelatedNote{Span{"c.ardl", 3, 5, 3, 9, 0, 0}, "previously declared here"});
  EmitOptions options;
  options.rules_off = {"AMD061"};
  const std::string out =
      EmitDiagnostics({diagnostic}, OutputFormat::kHuman, options);
  EXPECT_EQ(out,
            "rules off: AMD061\n"
            "c.ardl:4:5: error[AMD002] message for AMD002\n"
            "  c.ardl:3:5: note: previously declared here\n"
            "1 error, 0 warnings, 0 info\n");
}

TEST(DiagnosticOutputTest, ColorOnlyOnRequest) {
  std::vector<Diagnostic> diagnostics = {
      Make("AMD033", Severity::kError, "s.ardl", 1, 1)};
  EXPECT_EQ(EmitDiagnostics(diagnostics, OutputFormat::kHuman).find('\x1b'),
            std::string::npos);
  EmitOptions options;
  options.color = true;
  EXPECT_NE(EmitDiagnostics(diagnostics, OutputFormat::kHuman, options).find('\x1b'),
            std::string::npos);
}

TEST(DiagnosticOutputTest, EmptyJson) {
  const std::string out = EmitDiagnostics({}, OutputFormat::kJson);
  nlohmann::json json = nlohmann::json::parse(out);
  EXPECT_EQ(json["version"], kJsonSchemaVersion);
  EXPECT_EQ(json["summary"],
            nlohmann::json::parse(R"({"error":0,"warning":0,"info":0})"));
  EXPECT_TRUE(json["diagnostics"].empty());
}

TEST(DiagnosticOutputTest, JsonKeepsValidatorOrder) {
  std::vector<Diagnostic> diagnostics = {
      Make("AMD061", Severity::kWarning, "requirements.ardl", 9, 1),
      Make("AMD033", Severity::kError, "system.ardl", 14, 5),
      Make("AMD020", Severity::kError, "context.ardl", 1, 1),
      Make("AMD091", Severity::kInfo, "context.ardl", 7, 3),
  };
  SortDiagnostics(diagnostics);
  nlohmann::json json =
      nlohmann::json::parse(EmitDiagnostics(diagnostics, OutputFormat::kJson));
  ASSERT_EQ(json["diagnostics"].size(), diagnostics.size());
  for (size_t i = 0; i < diagnostics.size(); ++i) {
    EXPECT_EQ(json["diagnostics"][i]["code"], diagnostics[i].code);
    EXPECT_EQ(json["diagnostics"][i]["line"], diagnostics[i].span.start_line);
  }
  EXPECT_EQ(json["summary"]["error"], 2);
  EXPECT_EQ(json["summary"]["warning"], 1);
  EXPECT_EQ(json["summary"]["info"], 1);
}

TEST(DiagnosticOutputTest, JsonFieldOrderIsFixed) {
  const std::string out = EmitDiagnostics(
      {Make("AMD033", Severity::kError, "s.ardl", 2, 3)}, OutputFormat::kJson);
  const std::vector<std::string> keys = {
      "\"version\"", "\"summary\"", "\"rules_off\"", "\"diagnostics\"",
      "\"code\"",    "\"severity\"", "\"message\"",  "\"file\"",
      "\"line\"",    "\"col\"",      "\"end_line\"", "\"end_col\"",
      "\"related\""};
  size_t at = 0;
  for (const std::string& key : keys) {
    size_t next = out.find(key, at);
    ASSERT_NE(next, std::string::npos) << key;
    at = next;
  }
}

TEST(DiagnosticOutputTest, FormatNames) {
  EXPECT_EQ(OutputFormatFromName("json"), OutputFormat::kJson);
  EXPECT_EQ(OutputFormatFromName("human"), OutputFormat::kHuman);
  EXPECT_FALSE(OutputFormatFromName("xml").has_value());
}

}  // namespace
}  // namespace amdire
