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

#ifndef AMDIRE_LINKER_H_
#define AMDIRE_LINKER_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "amdire/catalog.h"
#include "amdire/diagnostic.h"
#include "amdire/model_graph.h"
#include "amdire/project_config.h"
#include "amdire/syntax.h"

namespace amdire {

// A parsed file together with the alias the manifest assigns to it.
struct ParsedFile {
  std::string alias;
  std::string path;
  SyntaxNode root;
};

struct LinkResult {
  ModelGraph graph;
  std::vector<Diagnostic> diagnostics;
};

// Builds the project-wide symbol table and the typed model graph. Input order
// does not matter. Problems never abort linking: the graph always contains
// every element that could be placed, and every relation that resolved.
//
//   AMD001  unresolved reference
//   AMD002  duplicate qualified name (reported at the second declaration)
//   AMD003  ambiguous reference
//   AMD004  duplicate relation
//   AMD011  second file for the same artefact type
//   AMD012  element kind does not belong to the enclosing content item
//   AMD013  content item does not belong to the artefact type
//   AMD014  invalid status value
LinkResult Link(std::span<const ParsedFile> files, const Catalog& catalog,
                const ProjectConfig& config);

enum class ResolveError : uint8_t { kNotFound, kAmbiguous };

struct ResolveResult {
  std::optional<ElementId> id;
  std::optional<ResolveError> error;
  std::vector<ElementId> candidates;  // set for kAmbiguous

  bool ok() const { return id.has_value(); }
};

// Looks up a qualified name. An exact match on the fully qualified name wins;
// otherwise the name is treated as a segment-wise suffix, which is ambiguous
// when more than one element matches.
ResolveResult Resolve(const ModelGraph& graph, std::string_view qualified_name);

}  // namespace amdire

#endif  // AMDIRE_LINKER_H_
