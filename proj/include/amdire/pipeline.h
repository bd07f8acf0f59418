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

#ifndef AMDIRE_PIPELINE_H_
#define AMDIRE_PIPELINE_H_

#include <filesystem>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "amdire/catalog.h"
#include "amdire/diagnostic.h"
#include "amdire/model_graph.h"
#include "amdire/project_config.h"
#include "amdire/source.h"
#include "amdire/tailoring.h"

namespace amdire {

struct ArtefactSource {
  std::string alias;
  SourceFile source;
};

// All inputs of a project, read into memory. Paths are relative to the
// project directory so that diagnostics do not depend on where it lives.
struct ProjectSources {
  SourceFile manifest;
  std::vector<ArtefactSource> artefacts;
  std::vector<SourceFile> tailoring;
};

// Reads the manifest and every file it names. Without `alias` lines the
// files context.ardl, requirements.ardl and system.ardl are picked up if they
// exist; without `tailoring:` lines, tailoring.txt is. A missing manifest or
// a named file that cannot be read is an error.
absl::StatusOr<ProjectSources> LoadProject(const std::filesystem::path& root);

struct Analysis {
  Manifest manifest;
  EffectiveItems effective;
  ProjectConfig config;
  ModelGraph graph;
  // Every finding of the run: manifest, tailoring, parser, linker, validator.
  // Findings scoped to disabled items are dropped, severity overrides are
  // applied, and the list is sorted.
  std::vector<Diagnostic> diagnostics;
};

// Manifest, tailoring, parse, link, validate. Deterministic for a given set
// of sources regardless of their order.
Analysis Analyze(const ProjectSources& sources, const Catalog& catalog);

// Writes `content` to `path`, creating parent directories.
absl::Status WriteTextFile(const std::filesystem::path& path,
                           const std::string& content);

absl::StatusOr<std::string> ReadTextFile(const std::filesystem::path& path);

}  // namespace amdire

#endif  // AMDIRE_PIPELINE_H_
