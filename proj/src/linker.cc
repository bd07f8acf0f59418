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

#include "amdire/linker.h"

#include <algorithm>
#include <set>
#include <tuple>

#include "amdire/strings.h"

namespace amdire {

ResolveResult Resolve(const ModelGraph& graph, std::string_view qualified_name) {
  ResolveResult result;
  if (std::optional<ElementId> exact = graph.FindByQualifiedName(qualified_name)) {
    result.id = exact;
    return result;
  }
  std::vector<ElementId> matches = graph.FindBySuffix(qualified_name);
  if (matches.size() == 1) {
    result.id = matches.front();
  } else if (matches.empty()) {
    result.error = ResolveError::kNotFound;
  } else {
    result.error = ResolveError::kAmbiguous;
    result.candidates = std::move(matches);
  }
  return result;
}

namespace {

class Linker {
 public:
  Linker(const Catalog& catalog, const ProjectConfig& config)
      : catalog_(catalog), config_(config), builder_(result_.graph) {}

  LinkResult Run(std::span<const ParsedFile> files) {
    std::vector<const ParsedFile*> ordered;
    for (const ParsedFile& file : files) ordered.push_back(&file);
    std::sort(ordered.begin(), ordered.end(),
              [](const ParsedFile* a, const ParsedFile* b) {
                return std::tie(a->alias, a->path) < std::tie(b->alias, b->path);
              });
    for (const ParsedFile* file : ordered) DeclareFile(*file);
    ResolveReferences();
    builder_.Finish();
    return std::move(result_);
  }

 private:
  void Report(std::string code, Severity severity, std::string message,
              Span span, std::optional<ItemId> item,
              std::vector<RelatedNote> related = {}) {
    result_.diagnostics.push_back(Diagnostic{std::move(code), severity,
                                             std::move(message), std::move(span),
                                             std::move(related), item});
  }

  void DeclareFile(const ParsedFile& file) {
    const SyntaxNode& root = file.root;
    std::optional<ArtefactType> artefact = catalog_.ArtefactFromKeyword(root.keyword);
    if (!artefact.has_value()) return;  // the parser already reported it
    std::optional<ArtefactFile>& slot = builder_.File(*artefact);
    if (slot.has_value()) {
      Report("AMD011", Severity::kError,
             StrCat("a second ", catalog_.artefact(*artefact).display_name,
                          " is declared; only one file per artefact type is "
                          "allowed (first: ",
                          slot->path, ")"),
             root.span, std::nullopt,
             {RelatedNote{slot->header_span, "first declared here"}});
      return;
    }
    ArtefactFile record;
    record.path = file.path;
    record.alias = file.alias;
    record.title = root.title;
    record.header_span = root.span;
    slot = std::move(record);

    const std::string prefix = StrCat(config_.name, ".", file.alias);
    for (const SyntaxNode& block_node : root.children) {
      if (block_node.kind != NodeKind::kContentItemBlock) continue;
      std::optional<ItemId> item =
          catalog_.FindItemByKeyword(*artefact, block_node.keyword);
      if (!item.has_value()) {
        Report("AMD013", Severity::kError,
               StrCat("content item '", block_node.keyword,
                            "' does not belong to the ",
                            catalog_.artefact(*artefact).display_name),
               block_node.span, std::nullopt);
        continue;
      }
      ItemBlock* block = FindOrAddBlock(*builder_.File(*artefact), *item,
                                        block_node.span);
      for (const SyntaxNode& child : block_node.children) {
        if (child.kind != NodeKind::kElementDecl) continue;
        if (std::optional<ElementId> id =
                DeclareElement(child, *artefact, *item, prefix, std::nullopt)) {
          block->elements.push_back(*id);
        }
      }
    }
  }

  static ItemBlock* FindOrAddBlock(ArtefactFile& file, ItemId item,
                                   const Span& span) {
    for (ItemBlock& block : file.blocks) {
      if (block.item == item) return &block;
    }
    auto it = std::lower_bound(
        file.blocks.begin(), file.blocks.end(), item,
        [](const ItemBlock& block, ItemId id) { return block.item < id; });
    it = file.blocks.insert(it, ItemBlock{item, span, {}});
    return &*it;
  }

  std::optional<ElementId> DeclareElement(const SyntaxNode& node,
                                          ArtefactType artefact, ItemId item,
                                          const std::string& scope,
                                          std::optional<ElementId> parent) {
    const ConceptDef* concept_def = catalog_.FindConceptByKeyword(node.keyword);
    if (concept_def == nullptr || !node.identifier.has_value()) return std::nullopt;
    if (concept_def->home_item != item) {
      const ContentItemDef& home = catalog_.item(concept_def->home_item);
      Report("AMD012", Severity::kError,
             StrCat(concept_def->kind, " '", *node.identifier,
                          "' cannot be declared in ",
                          catalog_.item(item).display_name, "; it belongs to ",
                          home.display_name, " of the ",
                          catalog_.artefact(home.artefact).display_name),
             node.span, item);
      return std::nullopt;
    }
    std::string qualified = StrCat(scope, ".", *node.identifier);
    if (std::optional<ElementId> existing =
            result_.graph.FindByQualifiedName(qualified)) {
      Report("AMD002", Severity::kError,
             StrCat("duplicate declaration of '", qualified, "'"),
             node.span, item,
             {RelatedNote{result_.graph.element(*existing).span,
                          "previously declared here"}});
      return std::nullopt;
    }

    ModelElement element;
    element.kind = concept_def->kind;
    element.name = *node.identifier;
    element.qualified_name = qualified;
    element.title = node.title;
    element.home_item = item;
    element.artefact = artefact;
    element.span = node.span;
    element.parent = parent;
    for (const SyntaxNode& child : node.children) {
      switch (child.kind) {
        case NodeKind::kStatusClause: {
          std::optional<Status> status =
              child.value_kind == ValueKind::kName ? StatusFromName(child.value)
                                                   : std::nullopt;
          if (!status.has_value()) {
            Report("AMD014", Severity::kError,
                   StrCat("invalid status '", child.value, "' on ",
                                element.kind, " '", element.name,
                                "'; expected draft, defined, or agreed"),
                   child.span, item);
          } else {
            element.status = *status;
          }
          break;
        }
        case NodeKind::kAttributeAssign:
          element.attributes[*child.identifier] =
              AttributeValue{child.value_kind, child.value, child.span};
          break;
        case NodeKind::kRelationClause: {
          std::optional<Relation> relation =
              RelationFromKeyword(*child.relation_name);
          if (!relation.has_value()) break;
          for (const QualifiedName& target : child.targets) {
            element.relations.push_back(RelationRef{
                *relation, target.ToString(), child.span, target.span, {}});
          }
          break;
        }
        default:
          break;
      }
    }
    ElementId id = builder_.AddElement(std::move(element));
    for (const SyntaxNode& child : node.children) {
      if (child.kind != NodeKind::kElementDecl) continue;
      if (std::optional<ElementId> child_id =
              DeclareElement(child, artefact, item, qualified, id)) {
        builder_.element(id).children.push_back(*child_id);
      }
    }
    return id;
  }

  void ResolveReferences() {
    std::set<std::tuple<uint32_t, Relation, uint32_t>> seen;
    const size_t count = result_.graph.size();
    for (uint32_t i = 0; i < count; ++i) {
      ModelElement& element = builder_.element(ElementId{i});
      for (RelationRef& ref : element.relations) {
        ResolveResult resolved = Resolve(result_.graph, ref.target_text);
        if (resolved.error == ResolveError::kNotFound) {
          Report("AMD001", Severity::kError,
                 StrCat("unresolved reference '", ref.target_text,
                              "' in ", RelationKeyword(ref.relation),
                              " clause of ", element.kind, " '", element.name,
                              "'"),
                 ref.clause_span, element.home_item);
          continue;
        }
        if (resolved.error == ResolveError::kAmbiguous) {
          std::vector<RelatedNote> notes;
          std::vector<std::string> names;
          for (ElementId candidate : resolved.candidates) {
            const ModelElement& other = result_.graph.element(candidate);
            names.push_back(other.qualified_name);
            notes.push_back(RelatedNote{
                other.span, StrCat("candidate ", other.kind, " '",
                                         other.qualified_name, "'")});
          }
          Report("AMD003", Severity::kError,
                 StrCat("ambiguous reference '", ref.target_text,
                              "'; candidates: ", StrJoin(names, ", ")),
                 ref.clause_span, element.home_item, std::move(notes));
          continue;
        }
        ref.target = resolved.id;
        if (!seen.emplace(i, ref.relation, resolved.id->value).second) {
          Report("AMD004", Severity::kWarning,
                 StrCat("duplicate ", RelationKeyword(ref.relation),
                              " relation from '", element.name, "' to '",
                              ref.target_text, "'"),
                 ref.clause_span, element.home_item);
          continue;
        }
        builder_.AddEdge(
            ModelEdge{ElementId{i}, ref.relation, *resolved.id, ref.clause_span});
      }
    }
  }

  const Catalog& catalog_;
  const ProjectConfig& config_;
  LinkResult result_;
  GraphBuilder builder_;
};

}  // namespace

LinkResult Link(std::span<const ParsedFile> files, const Catalog& catalog,
                const ProjectConfig& config) {
  return Linker(catalog, config).Run(files);
}

}  // namespace amdire
