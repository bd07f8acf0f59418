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

#ifndef AMDIRE_MODEL_GRAPH_H_
#define AMDIRE_MODEL_GRAPH_H_

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "amdire/catalog.h"
#include "amdire/source.h"
#include "amdire/syntax.h"

namespace amdire {

struct ElementId {
  uint32_t value = 0;
  friend auto operator<=>(const ElementId&, const ElementId&) = default;
};

enum class Status : uint8_t { kDraft = 0, kDefined = 1, kAgreed = 2 };

std::string_view StatusName(Status status);
std::optional<Status> StatusFromName(std::string_view name);

struct AttributeValue {
  ValueKind kind = ValueKind::kString;
  std::string text;
  Span span;

  friend bool operator==(const AttributeValue& a, const AttributeValue& b) {
    return a.kind == b.kind && a.text == b.text;
  }
};

// A relation clause target as written, with its resolution (if any).
struct RelationRef {
  Relation relation;
  std::string target_text;
  Span clause_span;
  Span target_span;
  std::optional<ElementId> target;
};

struct ModelElement {
  ElementId id;
  std::string kind;
  std::string name;
  std::string qualified_name;  // "<project>.<alias>.<parents...>.<name>"
  std::optional<std::string> title;
  std::map<std::string, AttributeValue> attributes;
  Status status = Status::kDraft;
  ItemId home_item;
  ArtefactType artefact = ArtefactType::kContext;
  Span span;
  std::optional<ElementId> parent;
  std::vector<ElementId> children;
  std::vector<RelationRef> relations;  // declaration order
};

struct ModelEdge {
  ElementId source;
  Relation relation;
  ElementId target;
  Span span;
};

// A content-item block present in an artefact file.
struct ItemBlock {
  ItemId item;
  Span span;
  std::vector<ElementId> elements;  // top-level elements, declaration order
};

// Per-artefact information about the declaring file.
struct ArtefactFile {
  std::string path;
  std::string alias;
  std::optional<std::string> title;
  Span header_span;
  std::vector<ItemBlock> blocks;  // catalog order, one per item

  const ItemBlock* FindBlock(ItemId item) const;
};

// The linked, typed model of a project. Built by the linker, immutable
// afterwards.
class ModelGraph {
 public:
  ModelGraph() = default;

  const std::vector<ModelElement>& elements() const { return elements_; }
  const std::vector<ModelEdge>& edges() const { return edges_; }
  const ModelElement& element(ElementId id) const {
    return elements_[id.value];
  }
  size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }

  const std::vector<ElementId>& Partition(ArtefactType type) const {
    return partitions_[Index(type)];
  }
  const std::optional<ArtefactFile>& File(ArtefactType type) const {
    return files_[Index(type)];
  }

  std::optional<ElementId> FindByQualifiedName(std::string_view name) const;
  // Elements whose qualified name ends with the given dotted suffix, compared
  // segment-wise.
  std::vector<ElementId> FindBySuffix(std::string_view dotted) const;

  const std::vector<size_t>& OutgoingEdges(ElementId id) const {
    return outgoing_[id.value];
  }
  const std::vector<size_t>& IncomingEdges(ElementId id) const {
    return incoming_[id.value];
  }

  // Elements with a `relation` edge from `source` to an element of one of
  // `kinds` (all kinds when empty).
  std::vector<ElementId> Targets(ElementId source, Relation relation,
                                 const std::vector<std::string>& kinds = {}) const;
  std::vector<ElementId> Sources(ElementId target, Relation relation,
                                 const std::vector<std::string>& kinds = {}) const;

  // All elements of one kind, id order.
  std::vector<ElementId> ElementsOfKind(std::string_view kind) const;

  // Elements (at any depth) declared inside the item's block.
  std::vector<ElementId> ElementsInItem(ItemId item) const;

 private:
  friend class GraphBuilder;

  std::vector<ModelElement> elements_;
  std::vector<ModelEdge> edges_;
  std::array<std::vector<ElementId>, 3> partitions_;
  std::array<std::optional<ArtefactFile>, 3> files_;
  std::unordered_map<std::string, ElementId> by_qualified_name_;
  std::unordered_map<std::string, std::vector<ElementId>> by_name_;
  std::vector<std::vector<size_t>> outgoing_;
  std::vector<std::vector<size_t>> incoming_;
};

// Mutating access used while linking.
class GraphBuilder {
 public:
  explicit GraphBuilder(ModelGraph& graph) : graph_(graph) {}

  ElementId AddElement(ModelElement element);
  ModelElement& element(ElementId id) { return graph_.elements_[id.value]; }
  std::optional<ArtefactFile>& File(ArtefactType type) {
    return graph_.files_[Index(type)];
  }
  void AddEdge(ModelEdge edge) { graph_.edges_.push_back(std::move(edge)); }
  // Builds adjacency indices; call once all elements and edges are added.
  void Finish();

 private:
  ModelGraph& graph_;
};

// Structural comparison of two graphs, ignoring spans and element ids: the
// same qualified names with the same kinds, titles, statuses, attributes,
// containment, and the same set of (source, relation, target) triples.
bool Isomorphic(const ModelGraph& a, const ModelGraph& b,
                std::string* difference = nullptr);

}  // namespace amdire

#endif  // AMDIRE_MODEL_GRAPH_H_
