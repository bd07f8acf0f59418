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

#include "amdire/model_graph.h"

#include <algorithm>
#include <set>
#include <tuple>

#include "amdire/strings.h"

namespace amdire {

std::string_view StatusName(Status status) {
  switch (status) {
    case Status::kDraft:
      return "draft";
    case Status::kDefined:
      return "defined";
    case Status::kAgreed:
      return "agreed";
  }
  return "draft";
}

std::optional<Status> StatusFromName(std::string_view name) {
  if (name == "draft") return Status::kDraft;
  if (name == "defined") return Status::kDefined;
  if (name == "agreed") return Status::kAgreed;
  return std::nullopt;
}

const ItemBlock* ArtefactFile::FindBlock(ItemId item) const {
  for (const ItemBlock& block : blocks) {
    if (block.item == item) return &block;
  }
  return nullptr;
}

std::optional<ElementId> ModelGraph::FindByQualifiedName(
    std::string_view name) const {
  auto it = by_qualified_name_.find(std::string(name));
  if (it == by_qualified_name_.end()) return std::nullopt;
  return it->second;
}

std::vector<ElementId> ModelGraph::FindBySuffix(std::string_view dotted) const {
  std::vector<std::string_view> wanted = Split(dotted, '.');
  std::vector<ElementId> found;
  if (wanted.empty() || wanted.back().empty()) return found;
  auto it = by_name_.find(std::string(wanted.back()));
  if (it == by_name_.end()) return found;
  for (ElementId id : it->second) {
    std::vector<std::string_view> have =
        Split(elements_[id.value].qualified_name, '.');
    if (have.size() < wanted.size()) continue;
    if (std::equal(wanted.rbegin(), wanted.rend(), have.rbegin())) {
      found.push_back(id);
    }
  }
  return found;
}

std::vector<ElementId> ModelGraph::Targets(
    ElementId source, Relation relation,
    const std::vector<std::string>& kinds) const {
  std::vector<ElementId> targets;
  for (size_t index : outgoing_[source.value]) {
    const ModelEdge& edge = edges_[index];
    if (edge.relation != relation) continue;
    if (!kinds.empty() &&
        std::find(kinds.begin(), kinds.end(), elements_[edge.target.value].kind) ==
            kinds.end()) {
      continue;
    }
    targets.push_back(edge.target);
  }
  return targets;
}

std::vector<ElementId> ModelGraph::Sources(
    ElementId target, Relation relation,
    const std::vector<std::string>& kinds) const {
  std::vector<ElementId> sources;
  for (size_t index : incoming_[target.value]) {
    const ModelEdge& edge = edges_[index];
    if (edge.relation != relation) continue;
    if (!kinds.empty() &&
        std::find(kinds.begin(), kinds.end(), elements_[edge.source.value].kind) ==
            kinds.end()) {
      continue;
    }
    sources.push_back(edge.source);
  }
  return sources;
}

std::vector<ElementId> ModelGraph::ElementsOfKind(std::string_view kind) const {
  std::vector<ElementId> found;
  for (const ModelElement& element : elements_) {
    if (element.kind == kind) found.push_back(element.id);
  }
  return found;
}

std::vector<ElementId> ModelGraph::ElementsInItem(ItemId item) const {
  std::vector<ElementId> found;
  for (const ModelElement& element : elements_) {
    if (element.home_item == item) found.push_back(element.id);
  }
  return found;
}

ElementId GraphBuilder::AddElement(ModelElement element) {
  ElementId id{static_cast<uint32_t>(graph_.elements_.size())};
  element.id = id;
  graph_.partitions_[Index(element.artefact)].push_back(id);
  graph_.by_qualified_name_.emplace(element.qualified_name, id);
  graph_.by_name_[element.name].push_back(id);
  graph_.elements_.push_back(std::move(element));
  return id;
}

void GraphBuilder::Finish() {
  graph_.outgoing_.assign(graph_.elements_.size(), {});
  graph_.incoming_.assign(graph_.elements_.size(), {});
  for (size_t i = 0; i < graph_.edges_.size(); ++i) {
    graph_.outgoing_[graph_.edges_[i].source.value].push_back(i);
    graph_.incoming_[graph_.edges_[i].target.value].push_back(i);
  }
}

namespace {

using EdgeKey = std::tuple<std::string, Relation, std::string>;

std::set<EdgeKey> EdgeKeys(const ModelGraph& graph) {
  std::set<EdgeKey> keys;
  for (const ModelEdge& edge : graph.edges()) {
    keys.emplace(graph.element(edge.source).qualified_name, edge.relation,
                 graph.element(edge.target).qualified_name);
  }
  return keys;
}

}  // namespace

bool Isomorphic(const ModelGraph& a, const ModelGraph& b,
                std::string* difference) {
  auto fail = [&](std::string why) {
    if (difference != nullptr) *difference = std::move(why);
    return false;
  };
  if (a.size() != b.size()) {
    return fail(StrCat("element count ", a.size(), " vs ", b.size()));
  }
  for (const ModelElement& left : a.elements()) {
    std::optional<ElementId> match = b.FindByQualifiedName(left.qualified_name);
    if (!match.has_value()) {
      return fail(StrCat("missing element ", left.qualified_name));
    }
    const ModelElement& right = b.element(*match);
    if (left.kind != right.kind || left.title != right.title ||
        left.status != right.status || left.attributes != right.attributes ||
        left.home_item != right.home_item || left.artefact != right.artefact) {
      return fail(StrCat("element differs: ", left.qualified_name));
    }
    const bool left_root = !left.parent.has_value();
    const bool right_root = !right.parent.has_value();
    if (left_root != right_root ||
        (!left_root && a.element(*left.parent).qualified_name !=
                           b.element(*right.parent).qualified_name)) {
      return fail(StrCat("containment differs: ", left.qualified_name));
    }
  }
  if (EdgeKeys(a) != EdgeKeys(b)) return fail("edge sets differ");
  return true;
}

}  // namespace amdire
