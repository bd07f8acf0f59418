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

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>

#include "CLI11.hpp"
#include "amdire/catalog.h"
#include "amdire/diagnostic_output.h"
#include "amdire/lifecycle.h"
#include "amdire/pipeline.h"
#include "amdire/render.h"
#include "amdire/strings.h"
#include "amdire/trace_matrix.h"

namespace amdire {
namespace {

namespace fs = std::filesystem;

struct Flags {
  std::string path = ".";
  std::string format;
  std::string name;
  std::string profile = "both";
  std::string from;
  std::string to;
  std::string artefact;
  std::string out_file;
};

bool ColorEnabled(const RunOptions& options) {
  const char* no_color = std::getenv("AMDIRE_NO_COLOR");
  if (no_color != nullptr && std::string_view(no_color) == "1") return false;
  return options.out_is_terminal;
}

std::string Percent(double ratio) {
  char buffer[16];
  std::snprintf(buffer, sizeof(buffer), "%.1f%%", ratio * 100.0);
  return buffer;
}

// Project name from a directory: the last path component reduced to
// identifier characters.
std::string DefaultProjectName(const fs::path& root) {
  std::string base = fs::absolute(root).lexically_normal().filename().string();
  if (base.empty()) {
    base = fs::absolute(root).lexically_normal().parent_path().filename().string();
  }
  std::string name;
  for (char c : base) {
    const bool word = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                      (c >= '0' && c <= '9') || c == '_' || c == '-';
    name += word ? c : '_';
  }
  if (!IsIdentifier(name)) name = "project";
  return name;
}

class Command {
 public:
  Command(const Flags& flags, std::ostream& out, std::ostream& err,
          const RunOptions& options)
      : flags_(flags),
        out_(out),
        err_(err),
        options_(options),
        catalog_(LoadCatalog()) {}

  int Init() {
    const fs::path root(flags_.path);
    if (fs::exists(root / kManifestFileName)) {
      err_ << "error: " << (root / kManifestFileName).string()
           << " already exists\n";
      return kExitUsage;
    }
    std::string name = flags_.name.empty() ? DefaultProjectName(root) : flags_.name;
    if (!IsIdentifier(name)) {
      err_ << "error: project name '" << name << "' is not an identifier\n";
      return kExitUsage;
    }
    const DomainProfile profile = *DomainProfileFromName(flags_.profile);
    std::string manifest = StrCat("# AMDiRE project manifest\nname: ", name,
                                  "\ndomain-profile: ",
                                  DomainProfileName(profile), "\n");
    std::vector<std::pair<fs::path, std::string>> files;
    for (ArtefactType type : kAllArtefactTypes) {
      const std::string file_name = StrCat(ShortName(type), ".ardl");
      StrAppend(&manifest, "alias ", ShortName(type), ": ", file_name, "\n");
      SyntaxNode root_node;
      root_node.kind = NodeKind::kArtefactDecl;
      root_node.keyword = catalog_.artefact(type).keyword;
      root_node.title = name;
      for (ItemId item : catalog_.ContentItemsFor(type, profile)) {
        SyntaxNode block;
        block.kind = NodeKind::kContentItemBlock;
        block.keyword = catalog_.item(item).keyword;
        root_node.children.push_back(std::move(block));
      }
      files.emplace_back(root / file_name, FormatArdl(root_node));
    }
    files.emplace_back(root / kManifestFileName, manifest);
    for (const auto& [path, content] : files) {
      if (absl::Status status = WriteTextFile(path, content); !status.ok()) {
        err_ << "error: " << status.message() << "\n";
        return kExitUsage;
      }
      err_ << "created " << path.string() << "\n";
    }
    return kExitOk;
  }

  int Check() {
    if (!Load()) return kExitUsage;
    const OutputFormat format =
        *OutputFormatFromName(flags_.format.empty() ? "human" : flags_.format);
    EmitOptions emit;
    emit.color = format == OutputFormat::kHuman && ColorEnabled(options_);
    emit.rules_off = analysis_.config.RulesOff();
    out_ << EmitDiagnostics(analysis_.diagnostics, format, emit);
    return HasErrors(analysis_.diagnostics) ? kExitFindings : kExitOk;
  }

  int Tailor() {
    if (!Load()) return kExitUsage;
    const ProjectConfig& config = analysis_.config;
    out_ << "project: " << config.name << "\n";
    out_ << "domain profile: " << DomainProfileName(config.domain_profile)
         << "\n";
    for (ArtefactType type : kAllArtefactTypes) {
      const std::vector<ItemId>& items = config.enabled_items[Index(type)];
      out_ << "\n" << catalog_.artefact(type).display_name << " ("
           << items.size() << " items)\n";
      for (ItemId item : items) {
        out_ << "  " << catalog_.item(item).name;
        if (std::find(config.forced_items.begin(), config.forced_items.end(),
                      item) != config.forced_items.end()) {
          out_ << " [mandatory]";
        }
        if (std::find(config.import_candidates.begin(),
                      config.import_candidates.end(),
                      item) != config.import_candidates.end()) {
          out_ << " [import candidate]";
        }
        out_ << "\n";
      }
    }
    out_ << "\ndecisions:\n";
    if (config.decisions.empty()) out_ << "  (none)\n";
    for (const TailoringDecision& decision : config.decisions) {
      const std::string item = catalog_.item(decision.item).QualifiedName();
      if (decision.factor == "profile") {
        out_ << "  " << item << " disabled: \"" << decision.value << "\"\n";
      } else {
        out_ << "  " << decision.factor << "=" << decision.value << ": " << item
             << " " << decision.effect << "\n";
      }
    }
    if (!config.role_assignments.empty()) {
      out_ << "\nroles:\n";
      for (const auto& [role, person] : config.role_assignments) {
        out_ << "  " << role << ": " << person << "\n";
      }
    }
    std::vector<Diagnostic> tailoring;
    for (const Diagnostic& diagnostic : analysis_.diagnostics) {
      const std::string& code = diagnostic.code;
      if (code >= "AMD085" && code <= "AMD090") tailoring.push_back(diagnostic);
    }
    if (!tailoring.empty()) {
      out_ << "\n";
      EmitOptions emit;
      emit.color = ColorEnabled(options_);
      out_ << EmitDiagnostics(tailoring, OutputFormat::kHuman, emit);
    }
    return HasErrors(tailoring) ? kExitFindings : kExitOk;
  }

  int Trace() {
    if (!Load()) return kExitUsage;
    absl::StatusOr<TraceMatrix> matrix =
        BuildTraceMatrix(analysis_.graph, catalog_, flags_.from, flags_.to);
    if (!matrix.ok()) {
      err_ << "error: " << matrix.status().message() << "\n";
      return kExitUsage;
    }
    out_ << (flags_.format == "json"
                 ? FormatTraceJson(*matrix, analysis_.graph)
                 : FormatTraceTable(*matrix, analysis_.graph));
    return kExitOk;
  }

  int Render() {
    if (!Load()) return kExitUsage;
    const ArtefactType artefact = *ArtefactTypeFromShortName(flags_.artefact);
    const RenderFormat format =
        *RenderFormatFromName(flags_.format.empty() ? "markdown" : flags_.format);
    const std::vector<MilestoneStatus> milestones =
        ComputeMilestones(analysis_.graph, catalog_, analysis_.config,
                          analysis_.diagnostics);
    RenderedDocument document = RenderSpec(analysis_.graph, catalog_,
                                           analysis_.config, artefact, format,
                                           milestones);
    if (flags_.out_file.empty()) {
      out_ << document.body;
      return kExitOk;
    }
    if (absl::Status status = WriteTextFile(flags_.out_file, document.body);
        !status.ok()) {
      err_ << "error: " << status.message() << "\n";
      return kExitUsage;
    }
    err_ << "wrote " << flags_.out_file << "\n";
    return kExitOk;
  }

  int Stats() {
    if (!Load()) return kExitUsage;
    out_ << "catalog\n";
    out_ << "  artefact types: " << catalog_.artefact_types().size() << "\n";
    std::vector<std::string> per_type;
    for (const ArtefactTypeDef& def : catalog_.artefact_types()) {
      per_type.push_back(StrCat(ShortName(def.type), " ", def.content_items.size()));
    }
    out_ << "  content items: " << catalog_.items().size() << " ("
         << StrJoin(per_type, ", ") << ")\n";
    out_ << "  concept kinds: " << catalog_.concepts().size() << "\n";
    out_ << "  relation rules: " << catalog_.relation_rules().size() << "\n";
    out_ << "  roles: " << catalog_.roles().size() << "\n";
    out_ << "  milestones: " << catalog_.milestones().size() << "\n";

    const ModelGraph& graph = analysis_.graph;
    out_ << "project " << analysis_.config.name << "\n";
    out_ << "  domain profile: "
         << DomainProfileName(analysis_.config.domain_profile) << "\n";
    per_type.clear();
    for (ArtefactType type : kAllArtefactTypes) {
      per_type.push_back(StrCat(ShortName(type), " ", graph.Partition(type).size()));
    }
    out_ << "  elements: " << graph.size() << " (" << StrJoin(per_type, ", ")
         << ")\n";
    out_ << "  edges: " << graph.edges().size() << "\n";
    out_ << "  diagnostics: "
         << CountSeverity(analysis_.diagnostics, Severity::kError) << " error, "
         << CountSeverity(analysis_.diagnostics, Severity::kWarning)
         << " warning, " << CountSeverity(analysis_.diagnostics, Severity::kInfo)
         << " info\n";
    out_ << "  completeness:\n";
    for (ArtefactType type : kAllArtefactTypes) {
      Completeness completeness = ComputeCompleteness(
          graph, analysis_.config, analysis_.diagnostics, type);
      out_ << "    " << ShortName(type) << ": " << completeness.complete_items
           << "/" << completeness.items.size() << " items ("
           << Percent(completeness.ratio) << ")\n";
    }
    out_ << "  milestones:\n";
    for (const MilestoneStatus& status :
         ComputeMilestones(graph, catalog_, analysis_.config,
                           analysis_.diagnostics)) {
      out_ << "    " << status.milestone << ": "
           << (status.reached ? "reached" : "not reached") << "\n";
    }
    return kExitOk;
  }

 private:
  bool Load() {
    absl::StatusOr<ProjectSources> sources = LoadProject(flags_.path);
    if (!sources.ok()) {
      err_ << "error: " << sources.status().message() << "\n";
      return false;
    }
    analysis_ = Analyze(*sources, catalog_);
    return true;
  }

  const Flags& flags_;
  std::ostream& out_;
  std::ostream& err_;
  const RunOptions& options_;
  const Catalog& catalog_;
  Analysis analysis_;
};

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, const RunOptions& options) {
  Flags flags;
  CLI::App app("AMDiRE artefact model toolchain", "amdire");
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  auto add_path = [&](CLI::App* command) {
    command->add_option("path", flags.path, "Project directory")
        ->capture_default_str();
  };
  std::function<int()> action;

  CLI::App* init = app.add_subcommand("init", "Scaffold a new project");
  add_path(init);
  init->add_option("--name", flags.name, "Project name");
  init->add_option("--profile", flags.profile, "Domain profile")
      ->check(CLI::IsMember({"bis", "embedded", "both"}))
      ->capture_default_str();

  CLI::App* check = app.add_subcommand("check", "Parse, link, tailor, validate");
  add_path(check);
  check->add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember({"human", "json"}));

  CLI::App* tailor =
      app.add_subcommand("tailor", "Show effective content items and decisions");
  add_path(tailor);

  CLI::App* trace = app.add_subcommand("trace", "Print a traceability matrix");
  add_path(trace);
  trace->add_option("--from", flags.from, "Source concept kind")->required();
  trace->add_option("--to", flags.to, "Target concept kind")->required();
  trace->add_option("--format", flags.format, "Output format")
      ->check(CLI::IsMember({"table", "json"}));

  CLI::App* render = app.add_subcommand("render", "Render one artefact");
  add_path(render);
  render->add_option("--artefact", flags.artefact, "Artefact type")
      ->required()
      ->check(CLI::IsMember({"context", "requirements", "system"}));
  render->add_option("--format", flags.format, "Document format")
      ->check(CLI::IsMember({"markdown", "ardl"}));
  render->add_option("--out", flags.out_file, "Output file");

  CLI::App* stats = app.add_subcommand("stats", "Catalog and project counts");
  add_path(stats);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& error) {
    err << "error: " << error.what() << "\n\n";
    const std::vector<CLI::App*> selected = app.get_subcommands();
    err << (selected.empty() ? app.help() : selected.front()->help());
    return kExitUsage;
  }

  Command command(flags, out, err, options);
  if (init->parsed()) return command.Init();
  if (check->parsed()) return command.Check();
  if (tailor->parsed()) return command.Tailor();
  if (trace->parsed()) return command.Trace();
  if (render->parsed()) return command.Render();
  return command.Stats();
}

}  // namespace amdire
