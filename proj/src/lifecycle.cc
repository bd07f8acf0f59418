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

#include <algorithm>

#include "amdire/strings.h"
#include "amdire/validator.h"

namespace amdire {
namespace {

bool IsError(const Diagnostic& diagnostic) {
  return diagnostic.severity == Severity::kError;
}

size_t ItemErrors(const std::vector<Diagnostic>& diagnostics, ItemId item) {
  return std::count_if(diagnostics.begin(), diagnostics.end(),
                       [&](const Diagnostic& diagnostic) {
                         return IsError(diagnostic) && diagnostic.item == item;
                       });
}

// Errors located in the file that no content item owns.
size_t FileLevelErrors(const std::vector<Diagnostic>& diagnostics,
                       const ArtefactFile& file) {
  return std::count_if(
      diagnostics.begin(), diagnostics.end(), [&](const Diagnostic& diagnostic) {
        return IsError(diagnostic) && !diagnostic.item.has_value() &&
               diagnostic.span.file == file.path;
      });
}

// Every element in the block, nested ones included.
std::vector<ElementId> BlockElements(const ModelGraph& graph,
                                     const ItemBlock& block) {
  std::vector<ElementId> all;
  std::vector<ElementId> pending(block.elements.rbegin(), block.elements.rend());
  while (!pending.empty()) {
    ElementId id = pending.back();
    pending.pop_back();
    all.push_back(id);
    const std::vector<ElementId>& children = graph.element(id).children;
    pending.insert(pending.end(), children.rbegin(), children.rend());
  }
  return all;
}

// Names of elements below `agreed`, for blocker messages.
std::vector<std::string> Unagreed(const ModelGraph& graph,
                                  const ItemBlock& block) {
  std::vector<std::string> names;
  for (ElementId id : BlockElements(graph, block)) {
    const ModelElement& element = graph.element(id);
    if (element.status != Status::kAgreed) {
      names.push_back(StrCat(element.name, " (", StatusName(element.status), ")"));
    }
  }
  return names;
}

std::string ListNames(const std::vector<std::string>& names) {
  constexpr size_t kShown = 5;
  if (names.size() <= kShown) return StrJoin(names, ", ");
  std::vector<std::string> head(names.begin(), names.begin() + kShown);
  return StrCat(StrJoin(head, ", "), " and ", names.size() - kShown, " more");
}

// Appends blockers for one item; returns true if the item is fully agreed.
bool CheckItem(const ModelGraph& graph, const Catalog& catalog,
               const ArtefactFile* file,
               const std::vector<Diagnostic>& diagnostics, ItemId item,
               std::vector<MilestoneBlocker>& blocking) {
  const ContentItemDef& def = catalog.item(item);
  const ItemBlock* block = file != nullptr ? file->FindBlock(item) : nullptr;
  if (block == nullptr) {
    blocking.push_back({item, StrCat(def.display_name, " is missing")});
    return false;
  }
  if (block->elements.empty()) {
    blocking.push_back({item, StrCat(def.display_name, " is empty")});
    return false;
  }
  bool ok = true;
  std::vector<std::string> unagreed = Unagreed(graph, *block);
  if (!unagreed.empty()) {
    blocking.push_back({item, StrCat(def.display_name, " has elements not yet "
                                     "agreed: ", ListNames(unagreed))});
    ok = false;
  }
  if (size_t errors = ItemErrors(diagnostics, item); errors > 0) {
    blocking.push_back(
        {item, StrCat(def.display_name, " has ", errors, " error(s)")});
    ok = false;
  }
  return ok;
}

}  // namespace

std::vector<MilestoneStatus> ComputeMilestones(
    const ModelGraph& graph, const Catalog& catalog, const ProjectConfig& config,
    const std::vector<Diagnostic>& diagnostics) {
  std::vector<MilestoneStatus> statuses;
  for (ArtefactType artefact : kAllArtefactTypes) {
    const std::optional<ArtefactFile>& file = graph.File(artefact);
    const ArtefactFile* file_ptr = file.has_value() ? &*file : nullptr;

    const MilestoneDef& first =
        catalog.milestone(artefact, MilestoneKind::kFirstItemDefined);
    MilestoneStatus first_status{first.id, artefact, first.kind, false, {}};
    const ItemId trigger = *first.trigger_item;
    if (file_ptr == nullptr) {
      first_status.blocking.push_back(
          {std::nullopt, StrCat(catalog.artefact(artefact).display_name,
                                " has no file")});
    } else if (!config.IsEnabled(trigger)) {
      first_status.blocking.push_back(
          {trigger, StrCat(catalog.item(trigger).display_name,
                           " is disabled by tailoring")});
    } else {
      first_status.reached = CheckItem(graph, catalog, file_ptr, diagnostics,
                                       trigger, first_status.blocking);
    }

    const MilestoneDef& final_def =
        catalog.milestone(artefact, MilestoneKind::kFinalised);
    MilestoneStatus final_status{final_def.id, artefact, final_def.kind, false,
                                 {}};
    if (file_ptr == nullptr) {
      final_status.blocking.push_back(
          {std::nullopt, StrCat(catalog.artefact(artefact).display_name,
                                " has no file")});
    } else {
      bool ok = true;
      for (ItemId item : config.enabled_items[Index(artefact)]) {
        ok &= CheckItem(graph, catalog, file_ptr, diagnostics, item,
                        final_status.blocking);
      }
      if (size_t errors = FileLevelErrors(diagnostics, *file_ptr); errors > 0) {
        final_status.blocking.push_back(
            {std::nullopt, StrCat(catalog.artefact(artefact).display_name,
                                  " has ", errors, " artefact-level error(s)")});
        ok = false;
      }
      if (!first_status.reached) {
        final_status.blocking.push_back(
            {std::nullopt, StrCat(first.id, " is not reached")});
        ok = false;
      }
      final_status.reached = ok;
    }
    statuses.push_back(std::move(first_status));
    statuses.push_back(std::move(final_status));
  }
  return statuses;
}

std::vector<MilestoneStatus> ComputeMilestones(const ModelGraph& graph,
                                               const Catalog& catalog,
                                               const ProjectConfig& config) {
  return ComputeMilestones(graph, catalog, config,
                           Validate(graph, catalog, config));
}

Completeness ComputeCompleteness(const ModelGraph& graph,
                                 const ProjectConfig& config,
                                 const std::vector<Diagnostic>& diagnostics,
                                 ArtefactType artefact) {
  Completeness result;
  result.artefact = artefact;
  const std::optional<ArtefactFile>& file = graph.File(artefact);
  for (ItemId item : config.enabled_items[Index(artefact)]) {
    ItemCompleteness entry;
    entry.item = item;
    const ItemBlock* block = file.has_value() ? file->FindBlock(item) : nullptr;
    entry.present = block != nullptr;
    entry.non_empty = block != nullptr && !block->elements.empty();
    entry.error_free = ItemErrors(diagnostics, item) == 0;
    if (entry.complete()) ++result.complete_items;
    result.items.push_back(entry);
  }
  if (!result.items.empty()) {
    result.ratio = static_cast<double>(result.complete_items) /
                   static_cast<double>(result.items.size());
  }
  return result;
}

}  // namespace amdire
