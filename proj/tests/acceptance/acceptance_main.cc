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

// Acceptance runner. Prints one PASS or FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <stdlib.h>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "amdire/catalog.h"
#include "amdire/cli.h"
#include "amdire/lifecycle.h"
#include "amdire/model_graph.h"
#include "amdire/parser.h"
#include "amdire/pipeline.h"
#include "amdire/render.h"
#include "amdire/strings.h"
#include "testing.h"

namespace amdire {
namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

// Outcome of one criterion: whether it held and a short account of why.
struct Verdict {
  bool pass = true;
  std::string detail;

  void Require(bool condition, std::string_view failure) {
    if (condition) return;
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += failure;
  }
};

double SecondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct CliOutcome {
  int code;
  std::string out;
};

CliOutcome RunCli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = Run(args, out, err);
  return {code, out.str()};
}

// A scratch copy of a fixture, removed on destruction.
class ScratchProject {
 public:
  explicit ScratchProject(std::string_view fixture) {
    std::string pattern =
        (fs::temp_directory_path() / "amdire-acceptance-XXXXXX").string();
    if (mkdtemp(pattern.data()) == nullptr) {
      throw std::runtime_error("cannot create scratch directory");
    }
    dir_ = pattern;
    root_ = dir_ / "project";
    fs::copy(fixtures::TestdataDir() / fixture, root_);
  }
  ~ScratchProject() { fs::remove_all(dir_); }

  std::string root() const { return root_.string(); }
  void Write(std::string_view file, const std::string& content) const {
    if (!WriteTextFile(root_ / file, content).ok()) {
      throw std::runtime_error(StrCat("cannot write ", file));
    }
  }
  std::string Read(std::string_view file) const {
    return *ReadTextFile(root_ / file);
  }

 private:
  fs::path dir_;
  fs::path root_;
};

ItemId Item(std::string_view qualified) {
  std::vector<ItemId> found = LoadCatalog().FindItemsByName(qualified);
  if (found.size() != 1) throw std::runtime_error(StrCat("no item ", qualified));
  return found.front();
}

// Removes the item block that starts with `opening` up to its closing brace
// at the same indentation.
void RemoveBlock(ProjectSources& sources, std::string_view alias,
                 std::string_view opening) {
  std::string& content = fixtures::FindArtefact(sources, alias).source.content;
  const size_t begin = content.find(opening);
  if (begin == std::string::npos) throw std::runtime_error("no such block");
  const size_t line_start = content.rfind('\n', begin) + 1;
  const std::string closing =
      StrCat("\n", content.substr(line_start, begin - line_start), "}\n");
  const size_t end = content.find(closing, begin);
  content.erase(line_start, end + closing.size() - line_start);
}

Verdict CatalogCriterion() {
  Verdict verdict;
  const Clock::time_point start = Clock::now();
  const Catalog catalog = BuildCatalog();
  const bool self_check = catalog.SelfCheck().ok();
  const double seconds = SecondsSince(start);
  verdict.Require(self_check, "self-check failed");
  verdict.Require(catalog.artefact_types().size() == 3, "expected 3 artefact types");
  std::vector<size_t> items;
  for (const ArtefactTypeDef& type : catalog.artefact_types()) {
    items.push_back(type.content_items.size());
  }
  verdict.Require(items == std::vector<size_t>{7, 10, 5},
                  "expected 7/10/5 content items");
  verdict.Require(catalog.concepts().size() >= 70, "fewer than 70 concept kinds");
  verdict.Require(catalog.roles().size() == 3, "expected 3 roles");
  verdict.Require(catalog.milestones().size() == 6, "expected 6 milestones");
  const std::vector<std::pair<std::string, std::string>> families = {
      {"Actor", "UserGroup"},           {"Actor", "ExternalSystem"},
      {"DataObject", "BusinessObject"}, {"SystemAction", "ProcessStep"},
      {"ActorAction", "ProcessStep"},   {"SystemFunction", "SystemAction"},
      {"SystemFunction", "UserVisibleFunction"},
      {"DataElement", "DataObject"},    {"State", "Mode"},
  };
  for (const auto& [source, target] : families) {
    absl::StatusOr<RelationVerdict> allowed =
        catalog.CheckRelationAllowed(source, Relation::kRealises, target);
    verdict.Require(allowed.ok() && allowed->allowed,
                    StrCat(source, " may not realise ", target));
  }
  verdict.Require(seconds < 1.0, "catalog load took 1 s or more");
  verdict.detail = StrCat(catalog.concepts().size(), " kinds, ",
                          catalog.relation_rules().size(), " relation rules, ",
                          std::to_string(static_cast<int>(seconds * 1000)),
                          " ms", verdict.detail.empty() ? "" : "; ",
                          verdict.detail);
  return verdict;
}

Verdict AtmCleanCriterion() {
  Verdict verdict;
  Analysis analysis = fixtures::AnalyzeFixture("atm");
  const std::vector<Diagnostic> errors = fixtures::Errors(analysis.diagnostics);
  verdict.Require(errors.empty(), fixtures::Describe(errors));
  // The example content the fixture is built around.
  const std::vector<std::pair<std::string, std::string>> expected = {
      {"Feature", "Withdrawal"},
      {"Feature", "Transaction"},
      {"BusinessGoal", "higher customer satisfaction"},
      {"UsageGoal", "visually handicapped should be able to use ATM"},
      {"SystemGoal", "high protection against fraud"},
      {"FunctionalScenario", "WithdrawScenario"},
  };
  for (const auto& [kind, label] : expected) {
    const bool found = std::any_of(
        analysis.graph.elements().begin(), analysis.graph.elements().end(),
        [&](const ModelElement& element) {
          return element.kind == kind &&
                 (element.name == label || element.title == label);
        });
    verdict.Require(found, StrCat("no ", kind, " '", label, "'"));
  }
  if (verdict.pass) {
    verdict.detail = StrCat(analysis.graph.size(), " elements, ",
                            analysis.graph.edges().size(), " edges, 0 errors");
  }
  return verdict;
}

Verdict MutationCriterion() {
  Verdict verdict;
  const Clock::time_point start = Clock::now();
  const ProjectSources sources = fixtures::Load("atm");
  const std::vector<fixtures::ClauseSite> sites =
      fixtures::FindClauses(sources, "realises");
  size_t detected = 0;
  for (const fixtures::ClauseSite& site : sites) {
    size_t deleted_at = 0;
    ProjectSources mutated = fixtures::DeleteClause(sources, site, &deleted_at);
    const std::string& file = mutated.artefacts[site.artefact].source.path;
    const std::vector<Diagnostic> errors =
        fixtures::Errors(fixtures::AnalyzeSources(mutated).diagnostics);
    const bool hit = std::any_of(
        errors.begin(), errors.end(), [&](const Diagnostic& diagnostic) {
          return diagnostic.span.file == file &&
                 diagnostic.span.begin_offset <= deleted_at &&
                 deleted_at <= diagnostic.span.end_offset;
        });
    if (hit) {
      ++detected;
    } else {
      verdict.Require(false, StrCat("undetected: ", site.element, " ", site.text));
    }
  }
  const double seconds = SecondsSince(start);
  verdict.Require(!sites.empty(), "no realises clauses in the fixture");
  verdict.Require(seconds < 10.0, "mutation suite took 10 s or more");
  verdict.detail = StrCat(detected, "/", sites.size(), " detected in ",
                          std::to_string(static_cast<int>(seconds * 1000)),
                          " ms", verdict.detail.empty() ? "" : "; ",
                          verdict.detail);
  return verdict;
}

Verdict RoundTripCriterion() {
  Verdict verdict;
  ProjectSources sources = fixtures::Load("atm");
  Analysis original = fixtures::AnalyzeSources(sources);
  for (ArtefactSource& artefact : sources.artefacts) {
    const ArtefactType type =
        *LoadCatalog().ArtefactFromKeyword(Parse(artefact.source).root.keyword);
    artefact.source.content =
        RenderSpec(original.graph, LoadCatalog(), original.config, type,
                   RenderFormat::kArdl)
            .body;
  }
  Analysis reparsed = fixtures::AnalyzeSources(sources);
  std::string difference;
  verdict.Require(Isomorphic(original.graph, reparsed.graph, &difference),
                  StrCat("not isomorphic: ", difference));
  for (const ArtefactSource& artefact : sources.artefacts) {
    const std::string twice = FormatArdl(Parse(artefact.source).root);
    verdict.Require(twice == artefact.source.content,
                    StrCat(artefact.source.path, " is not byte-idempotent"));
  }
  if (verdict.pass) verdict.detail = "isomorphic and byte-idempotent";
  return verdict;
}

Verdict TailoringCriterion() {
  Verdict verdict;
  const ItemId service_model = Item("requirements.ServiceModel");

  // Embedded profile: ServiceModel is out of scope and never reported.
  {
    ProjectSources sources = fixtures::Load("atm");
    sources.tailoring.push_back(
        SourceFile{"tailoring.txt", "domain-profile: embedded\n", {}});
    Analysis analysis = fixtures::AnalyzeSources(sources);
    verdict.Require(!analysis.config.IsEnabled(service_model),
                    "ServiceModel enabled under embedded");
    for (const Diagnostic& diagnostic : analysis.diagnostics) {
      verdict.Require(diagnostic.item != std::optional<ItemId>(service_model),
                      StrCat("ServiceModel-scoped ", diagnostic.code,
                             " under embedded"));
    }
    ScratchProject project("atm");
    project.Write("tailoring.txt", "domain-profile: embedded\n");
    CliOutcome tailor = RunCli({"tailor", project.root()});
    verdict.Require(
        tailor.out.find("Requirements Specification (9 items)") !=
            std::string::npos,
        "tailor does not list 9 requirements items under embedded");
    verdict.Require(tailor.out.find("ServiceModel") == std::string::npos,
                    "tailor lists ServiceModel under embedded");
  }

  // BIS profile with the ServiceModel block removed: exactly one AMD020.
  {
    ProjectSources sources = fixtures::Load("atm");
    sources.tailoring.push_back(
        SourceFile{"tailoring.txt", "domain-profile: bis\n", {}});
    RemoveBlock(sources, "requirements", "service-model {");
    Analysis analysis = fixtures::AnalyzeSources(sources);
    size_t missing = 0;
    for (const Diagnostic& diagnostic : analysis.diagnostics) {
      if (diagnostic.code == "AMD020" &&
          diagnostic.item == std::optional<ItemId>(service_model)) {
        ++missing;
      }
    }
    verdict.Require(missing == 1,
                    StrCat("expected one AMD020 for ServiceModel, got ", missing));
  }

  // A safety-critical project cannot drop its risk list.
  {
    ProjectSources sources = fixtures::Load("atm");
    sources.tailoring.push_back(SourceFile{
        "tailoring.txt",
        "disable RiskList: \"managed centrally\"\nfactor safety_critical: yes\n",
        {}});
    Analysis analysis = fixtures::AnalyzeSources(sources);
    verdict.Require(fixtures::CountCode(analysis.diagnostics, "AMD088") == 1,
                    "expected AMD088 for disabled RiskList");
    verdict.Require(analysis.config.IsEnabled(Item("requirements.RiskList")),
                    "RiskList not re-enabled");
  }
  if (verdict.pass) {
    verdict.detail = "embedded silences ServiceModel, BIS gap reported once, "
                     "AMD088 raised";
  }
  return verdict;
}

Verdict MilestoneCriterion() {
  Verdict verdict;
  ProjectSources sources = fixtures::Load("atm");
  const std::vector<std::string> vision =
      fixtures::ElementsInBlock(sources, "requirements", "system-vision");
  for (const std::string& name : vision) {
    fixtures::SetStatus(sources, "requirements", name, "draft");
  }
  auto rs = [&]() {
    Analysis analysis = fixtures::AnalyzeSources(sources);
    std::vector<MilestoneStatus> statuses =
        ComputeMilestones(analysis.graph, LoadCatalog(), analysis.config,
                          analysis.diagnostics);
    std::pair<bool, bool> result{false, false};
    for (const MilestoneStatus& status : statuses) {
      if (status.artefact != ArtefactType::kRequirements) continue;
      if (status.kind == MilestoneKind::kFirstItemDefined) {
        result.first = status.reached;
      } else {
        result.second = status.reached;
      }
    }
    return result;
  };
  auto [first, finalised] = rs();
  verdict.Require(!first && !finalised, "RS milestones reached with a draft vision");
  for (size_t i = 0; i < vision.size(); ++i) {
    fixtures::SetStatus(sources, "requirements", vision[i], "agreed");
    std::tie(first, finalised) = rs();
    const bool last = i + 1 == vision.size();
    verdict.Require(first == last,
                    StrCat("RS-M1 ", first ? "reached" : "not reached",
                           " after promoting ", vision[i]));
    verdict.Require(!finalised || first, "RS-M2 reached before RS-M1");
  }
  verdict.Require(vision.size() >= 2, "system vision too small for a ladder");
  if (verdict.pass) {
    verdict.detail = StrCat("RS-M1 flips on promotion ", vision.size(), " of ",
                            vision.size(), "; RS-M2 ",
                            finalised ? "reached" : "not reached", " at the end");
  }
  return verdict;
}

Verdict DeterminismCriterion() {
  Verdict verdict;
  ScratchProject project("atm");
  const CliOutcome first = RunCli({"check", project.root(), "--format", "json"});
  const CliOutcome second = RunCli({"check", project.root(), "--format", "json"});
  verdict.Require(first.code == second.code && first.out == second.out,
                  "consecutive runs differ");

  // Reverse the alias lines so the files load in the opposite order.
  std::string manifest = project.Read(kManifestFileName);
  std::vector<std::string_view> lines = Split(manifest, '\n');
  std::vector<size_t> alias_lines;
  for (size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].starts_with("alias ")) alias_lines.push_back(i);
  }
  for (size_t i = 0, j = alias_lines.size(); i + 1 < j; ++i, --j) {
    std::swap(lines[alias_lines[i]], lines[alias_lines[j - 1]]);
  }
  project.Write(kManifestFileName, StrJoin(lines, "\n"));
  const CliOutcome permuted = RunCli({"check", project.root(), "--format", "json"});
  verdict.Require(alias_lines.size() == 3, "manifest has no alias lines");
  verdict.Require(permuted.out == first.out, "file order changes the output");

  // The same on a project with findings, permuting in memory.
  ProjectSources sources = fixtures::Load("atm");
  sources = fixtures::DeleteClause(
      sources, fixtures::FindClauses(sources, "realises").front(), nullptr);
  const std::vector<Diagnostic> reference =
      fixtures::AnalyzeSources(sources).diagnostics;
  std::reverse(sources.artefacts.begin(), sources.artefacts.end());
  verdict.Require(fixtures::AnalyzeSources(sources).diagnostics == reference,
                  "file order changes findings");
  if (verdict.pass) {
    verdict.detail = StrCat("identical across runs and orders (",
                            first.out.size(), " bytes)");
  }
  return verdict;
}

Verdict ScaleCriterion() {
  Verdict verdict;
  const ProjectSources sources = fixtures::SyntheticProject(1111, 3334);
  const Clock::time_point start = Clock::now();
  Analysis analysis = fixtures::AnalyzeSources(sources);
  const double seconds = SecondsSince(start);
  const size_t elements = analysis.graph.size();
  const size_t edges = analysis.graph.edges().size();
  verdict.Require(elements >= 10000, "fewer than 10k elements");
  verdict.Require(edges >= 20000, "fewer than 20k edges");
  std::vector<Diagnostic> errors = fixtures::Errors(analysis.diagnostics);
  if (!errors.empty()) {
    const size_t total = errors.size();
    errors.resize(1);
    verdict.Require(false, StrCat(total, " errors, first: ",
                                  fixtures::Describe(errors)));
  }
  verdict.Require(seconds < 2.0, "analysis took 2 s or more");
  verdict.detail = StrCat(elements, " elements, ", edges, " edges, ",
                          std::to_string(static_cast<int>(seconds * 1000)),
                          " ms", verdict.detail.empty() ? "" : "; ",
                          verdict.detail);
  return verdict;
}

int Main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"catalog", CatalogCriterion},
      {"atm-clean", AtmCleanCriterion},
      {"mutation-detection", MutationCriterion},
      {"round-trip", RoundTripCriterion},
      {"tailoring", TailoringCriterion},
      {"milestones", MilestoneCriterion},
      {"determinism", DeterminismCriterion},
      {"scale", ScaleCriterion},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Verdict verdict;
    try {
      verdict = check();
    } catch (const std::exception& error) {
      verdict = Verdict{false, StrCat("exception: ", error.what())};
    }
    if (!verdict.pass) ++failures;
    std::cout << (verdict.pass ? "PASS " : "FAIL ") << name << ": "
              << verdict.detail << "\n";
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size()
            << " criteria passed\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace amdire

int main() { return amdire::Main(); }
