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

#ifndef AMDIRE_LIFECYCLE_H_
#define AMDIRE_LIFECYCLE_H_

#include <optional>
#include <string>
#include <vector>

#include "amdire/catalog.h"
#include "amdire/diagnostic.h"
#include "amdire/model_graph.h"
#include "amdire/project_config.h"

namespace amdire {

struct MilestoneBlocker {
  std::optional<ItemId> item;  // unset for artefact-wide reasons
  std::string reason;
};

struct MilestoneStatus {
  std::string milestone;  // "RS-M1"
  ArtefactType artefact;
  MilestoneKind kind;
  bool reached = false;
  std::vector<MilestoneBlocker> blocking;
};

// Status of all six milestones, in catalog order.
//
// FirstItemDefined is reached when the trigger item is enabled, present,
// non-empty, every element in it is `agreed`, and no error diagnostic is
// scoped to it. Finalised is reached when FirstItemDefined is, every enabled
// item is present and non-empty, every element in them is `agreed`,
// and the artefact has no error diagnostics.
//
// `diagnostics` is the full finding list of the project (parser, linker and
// validator); an error belongs to an artefact if it is scoped to one of its
// items or located in its file.
std::vector<MilestoneStatus> ComputeMilestones(
    const ModelGraph& graph, const Catalog& catalog, const ProjectConfig& config,
    const std::vector<Diagnostic>& diagnostics);

// Runs the validator itself; for graphs without parser or linker findings.
std::vector<MilestoneStatus> ComputeMilestones(const ModelGraph& graph,
                                               const Catalog& catalog,
                                               const ProjectConfig& config);

struct ItemCompleteness {
  ItemId item;
  bool present = false;
  bool non_empty = false;
  bool error_free = false;

  bool complete() const { return present && non_empty && error_free; }
};

struct Completeness {
  ArtefactType artefact;
  double ratio = 1.0;  // complete / enabled; 1.0 when nothing is enabled
  size_t complete_items = 0;
  std::vector<ItemCompleteness> items;  // enabled items, catalog order
};

Completeness ComputeCompleteness(const ModelGraph& graph,
                                 const ProjectConfig& config,
                                 const std::vector<Diagnostic>& diagnostics,
                                 ArtefactType artefact);

}  // namespace amdire

#endif  // AMDIRE_LIFECYCLE_H_
