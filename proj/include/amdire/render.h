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

#ifndef AMDIRE_RENDER_H_
#define AMDIRE_RENDER_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "amdire/catalog.h"
#include "amdire/lifecycle.h"
#include "amdire/model_graph.h"
#include "amdire/project_config.h"
#include "amdire/syntax.h"

namespace amdire {

enum class RenderFormat : uint8_t { kMarkdown, kArdl };

std::string_view RenderFormatName(RenderFormat format);
std::optional<RenderFormat> RenderFormatFromName(std::string_view name);

struct RenderedDocument {
  ArtefactType artefact;
  RenderFormat format;
  std::string body;
};

// Canonical ARDL text for a syntax tree: two-space indentation, LF line
// endings, content-item blocks in catalog order (blocks of the same item are
// merged), and inside each element the status clause, attributes by name,
// one relation clause per relation kind in relation order, then nested
// elements in declaration order. An element without a status clause gets
// `status: draft`. Formatting the parse of canonical text reproduces it.
std::string FormatArdl(const SyntaxNode& root);

// Syntax tree of one artefact as linked into the graph. Relation targets are
// kept as written. Returns an empty header for artefact types without a file.
SyntaxNode ToSyntaxTree(const ModelGraph& graph, const Catalog& catalog,
                        ArtefactType artefact);

// Renders one artefact. Markdown output starts with a front-matter block
// (project, artefact, milestone status) followed by one section per enabled
// content item in catalog order; ARDL output is FormatArdl(ToSyntaxTree()).
RenderedDocument RenderSpec(const ModelGraph& graph, const Catalog& catalog,
                            const ProjectConfig& config, ArtefactType artefact,
                            RenderFormat format,
                            std::span<const MilestoneStatus> milestones = {});

}  // namespace amdire

#endif  // AMDIRE_RENDER_H_
