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

#include "amdire/pipeline.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <tuple>

#include "absl/status/status.h"
#include "amdire/linker.h"
#include "amdire/parser.h"
#include "amdire/strings.h"
#include "amdire/validator.h"

namespace amdire {

absl::StatusOr<std::string> ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return absl::NotFoundError(StrCat("cannot read ", path.string()));
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

absl::Status WriteTextFile(const std::filesystem::path& path,
                           const std::string& content) {
  std::error_code error;
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path(), error);
    if (error) {
      return absl::InternalError(StrCat("cannot create ",
                                        path.parent_path().string(), ": ",
                                        error.message()));
    }
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  if (!out) return absl::InternalError(StrCat("cannot write ", path.string()));
  return absl::OkStatus();
}

absl::StatusOr<ProjectSources> LoadProject(const std::filesystem::path& root) {
  ProjectSources sources;
  absl::StatusOr<std::string> manifest_text = ReadTextFile(root / kManifestFileName);
  if (!manifest_text.ok()) {
    return absl::NotFoundError(StrCat("no ", kManifestFileName, " in ",
                                      root.string()));
  }
  sources.manifest = SourceFile{kManifestFileName, *std::move(manifest_text), {}};
  const Manifest manifest = ParseManifest(sources.manifest).manifest;

  std::vector<AliasEntry> aliases = manifest.aliases;
  if (aliases.empty()) {
    for (ArtefactType type : kAllArtefactTypes) {
      std::string alias(ShortName(type));
      std::string path = StrCat(alias, ".ardl");
      if (std::filesystem::exists(root / path)) {
        aliases.push_back(AliasEntry{alias, path, {}});
      }
    }
  }
  for (const AliasEntry& entry : aliases) {
    absl::StatusOr<std::string> text = ReadTextFile(root / entry.path);
    if (!text.ok()) return text.status();
    sources.artefacts.push_back(
        ArtefactSource{entry.alias, SourceFile{entry.path, *std::move(text), {}}});
  }

  std::vector<std::string> tailoring;
  for (const AliasEntry& entry : manifest.tailoring_files) {
    tailoring.push_back(entry.path);
  }
  if (tailoring.empty() && std::filesystem::exists(root / "tailoring.txt")) {
    tailoring.push_back("tailoring.txt");
  }
  for (const std::string& path : tailoring) {
    absl::StatusOr<std::string> text = ReadTextFile(root / path);
    if (!text.ok()) return text.status();
    sources.tailoring.push_back(SourceFile{path, *std::move(text), {}});
  }
  return sources;
}

Analysis Analyze(const ProjectSources& sources, const Catalog& catalog) {
  Analysis analysis;
  std::vector<Diagnostic> diagnostics;
  auto take = [&](std::vector<Diagnostic>& more) {
    diagnostics.insert(diagnostics.end(), std::make_move_iterator(more.begin()),
                       std::make_move_iterator(more.end()));
  };

  ManifestResult manifest = ParseManifest(sources.manifest);
  analysis.manifest = std::move(manifest.manifest);
  take(manifest.diagnostics);

  std::vector<TailoringProfile> profiles;
  for (const SourceFile& source : sources.tailoring) {
    TailoringParseResult parsed = ParseTailoringFile(source, catalog);
    take(parsed.diagnostics);
    profiles.push_back(std::move(parsed.profile));
  }
  std::sort(profiles.begin(), profiles.end(),
            [](const TailoringProfile& a, const TailoringProfile& b) {
              return std::tie(a.level, a.path) < std::tie(b.level, b.path);
            });
  analysis.effective = ComputeEffectiveItems(
      catalog, analysis.manifest.domain_profile, profiles);
  take(analysis.effective.diagnostics);
  std::vector<SituationFactor> situation;
  for (const TailoringProfile& profile : profiles) {
    situation.insert(situation.end(), profile.factors.begin(),
                     profile.factors.end());
  }
  TailorResult tailored = StaticTailor(catalog, analysis.effective, situation,
                                       analysis.manifest.name);
  take(tailored.diagnostics);
  analysis.config = std::move(tailored.config);
  analysis.config.severity_overrides = analysis.manifest.severity_overrides;

  std::vector<ParsedFile> parsed;
  for (const ArtefactSource& artefact : sources.artefacts) {
    ParseResult result = Parse(artefact.source);
    take(result.diagnostics);
    parsed.push_back(ParsedFile{artefact.alias, artefact.source.path,
                                std::move(result.root)});
  }
  LinkResult linked = Link(parsed, catalog, analysis.config);
  take(linked.diagnostics);
  analysis.graph = std::move(linked.graph);

  std::vector<Diagnostic> findings =
      Validate(analysis.graph, catalog, analysis.config);
  take(findings);

  std::erase_if(diagnostics, [&](const Diagnostic& diagnostic) {
    return diagnostic.item.has_value() &&
           !analysis.config.IsEnabled(*diagnostic.item);
  });
  ApplySeverityOverrides(analysis.config, diagnostics);
  SortDiagnostics(diagnostics);
  analysis.diagnostics = std::move(diagnostics);
  return analysis;
}

}  // namespace amdire
