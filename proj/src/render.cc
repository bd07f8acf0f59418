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

#include "amdire/render.h"

#include <algorithm>
#include <map>

#include "amdire/lexer.h"
#include "amdire/strings.h"

namespace amdire {

std::string_view RenderFormatName(RenderFormat format) {
  return format == RenderFormat::kMarkdown ? "markdown" : "ardl";
}

std::optional<RenderFormat> RenderFormatFromName(std::string_view name) {
  if (name == "markdown" || name == "md") return RenderFormat::kMarkdown;
  if (name == "ardl") return RenderFormat::kArdl;
  return std::nullopt;
}

namespace {

void Indent(std::string& out, int depth) { out.append(2 * depth, ' '); }

std::string FormatValue(ValueKind kind, const std::string& value) {
  return kind == ValueKind::kString ? QuoteString(value) : value;
}

void FormatElement(const SyntaxNode& node, int depth, std::string& out) {
  Indent(out, depth);
  StrAppend(&out, node.keyword, " ", node.identifier.value_or("_"));
  if (node.title.has_value()) StrAppend(&out, " ", QuoteString(*node.title));
  out += " {\n";

  const SyntaxNode* status = nullptr;
  std::map<std::string, const SyntaxNode*> attributes;
  std::map<Relation, std::vector<std::string>> relations;
  for (const SyntaxNode& child : node.children) {
    switch (child.kind) {
      case NodeKind::kStatusClause:
        status = &child;
        break;
      case NodeKind::kAttributeAssign:
        attributes[*child.identifier] = &child;
        break;
      case NodeKind::kRelationClause:
        if (std::optional<Relation> relation =
                RelationFromKeyword(child.relation_name.value_or(""))) {
          for (const QualifiedName& target : child.targets) {
            relations[*relation].push_back(target.ToString());
          }
        }
        break;
      default:
        break;
    }
  }
  Indent(out, depth + 1);
  StrAppend(&out, "status: ",
            status != nullptr ? FormatValue(status->value_kind, status->value)
                              : std::string("draft"),
            "\n");
  for (const auto& [name, attribute] : attributes) {
    Indent(out, depth + 1);
    StrAppend(&out, name, ": ",
              FormatValue(attribute->value_kind, attribute->value), "\n");
  }
  for (const auto& [relation, targets] : relations) {
    Indent(out, depth + 1);
    StrAppend(&out, RelationKeyword(relation), " ", StrJoin(targets, ", "),
              "\n");
  }
  for (const SyntaxNode& child : node.children) {
    if (child.kind == NodeKind::kElementDecl) {
      FormatElement(child, depth + 1, out);
    }
  }
  Indent(out, depth);
  out += "}\n";
}

}  // namespace

std::string FormatArdl(const SyntaxNode& root) {
  const Catalog& catalog = LoadCatalog();
  std::string out = StrCat(root.keyword, " ",
                           QuoteString(root.title.value_or("")), " {");
  std::optional<ArtefactType> artefact =
      catalog.ArtefactFromKeyword(root.keyword);

  // Merge blocks of the same item and order them by catalog position; blocks
  // the catalog does not know go last, in source order.
  std::map<ItemId, std::vector<const SyntaxNode*>> known;
  std::vector<std::string> unknown_order;
  std::map<std::string, std::vector<const SyntaxNode*>> unknown;
  for (const SyntaxNode& block : root.children) {
    if (block.kind != NodeKind::kContentItemBlock) continue;
    std::optional<ItemId> item =
        artefact.has_value() ? catalog.FindItemByKeyword(*artefact, block.keyword)
                             : std::nullopt;
    if (item.has_value()) {
      known[*item].push_back(&block);
    } else {
      if (!unknown.contains(block.keyword)) unknown_order.push_back(block.keyword);
      unknown[block.keyword].push_back(&block);
    }
  }
  std::vector<std::pair<std::string, std::vector<const SyntaxNode*>>> blocks;
  for (const auto& [item, nodes] : known) {
    blocks.emplace_back(catalog.item(item).keyword, nodes);
  }
  for (const std::string& keyword : unknown_order) {
    blocks.emplace_back(keyword, unknown[keyword]);
  }
  if (blocks.empty()) return out + "}\n";

  out += "\n";
  for (const auto& [keyword, nodes] : blocks) {
    std::vector<const SyntaxNode*> elements;
    for (const SyntaxNode* node : nodes) {
      for (const SyntaxNode& child : node->children) {
        if (child.kind == NodeKind::kElementDecl) elements.push_back(&child);
      }
    }
    Indent(out, 1);
    if (elements.empty()) {
      StrAppend(&out, keyword, " {}\n");
      continue;
    }
    StrAppend(&out, keyword, " {\n");
    for (const SyntaxNode* element : elements) FormatElement(*element, 2, out);
    Indent(out, 1);
    out += "}\n";
  }
  out += "}\n";
  return out;
}

namespace {

SyntaxNode ElementNode(const ModelGraph& graph, const Catalog& catalog,
                       const ModelElement& element) {
  SyntaxNode node;
  node.kind = NodeKind::kElementDecl;
  node.keyword = catalog.FindConcept(element.kind)->keyword;
  node.identifier = element.name;
  node.title = element.title;

  SyntaxNode status;
  status.kind = NodeKind::kStatusClause;
  status.value_kind = ValueKind::kName;
  status.value = std::string(StatusName(element.status));
  node.children.push_back(std::move(status));

  for (const auto& [name, value] : element.attributes) {
    SyntaxNode attribute;
    attribute.kind = NodeKind::kAttributeAssign;
    attribute.identifier = name;
    attribute.value_kind = value.kind;
    attribute.value = value.text;
    node.children.push_back(std::move(attribute));
  }
  for (Relation relation : kAllRelations) {
    SyntaxNode clause;
    clause.kind = NodeKind::kRelationClause;
    clause.relation_name = std::string(RelationKeyword(relation));
    for (const RelationRef& ref : element.relations) {
      if (ref.relation != relation) continue;
      QualifiedName target;
      for (std::string_view segment : Split(ref.target_text, '.')) {
        target.segments.emplace_back(segment);
      }
      clause.targets.push_back(std::move(target));
    }
    if (!clause.targets.empty()) node.children.push_back(std::move(clause));
  }
  for (ElementId child : element.children) {
    node.children.push_back(ElementNode(graph, catalog, graph.element(child)));
  }
  return node;
}

}  // namespace

SyntaxNode ToSyntaxTree(const ModelGraph& graph, const Catalog& catalog,
                        ArtefactType artefact) {
  SyntaxNode root;
  root.kind = NodeKind::kArtefactDecl;
  root.keyword = catalog.artefact(artefact).keyword;
  const std::optional<ArtefactFile>& file = graph.File(artefact);
  if (!file.has_value()) return root;
  root.title = file->title;
  for (const ItemBlock& block : file->blocks) {
    SyntaxNode block_node;
    block_node.kind = NodeKind::kContentItemBlock;
    block_node.keyword = catalog.item(block.item).keyword;
    for (ElementId id : block.elements) {
      block_node.children.push_back(
          ElementNode(graph, catalog, graph.element(id)));
    }
    root.children.push_back(std::move(block_node));
  }
  return root;
}

namespace {

std::string Heading(int level) {
  return std::string(std::min(level, 6), '#');
}

// Escapes characters that would otherwise start markdown markup inline.
std::string MarkdownText(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c == '*' || c == '_' || c == '`' || c == '[' || c == ']' || c == '<' ||
        c == '>' || c == '|' || c == '\\' || c == '#') {
      out += '\\';
    }
    out += c;
  }
  return out;
}

void MarkdownElement(const ModelGraph& graph, const ModelElement& element,
                     int level, std::string& out) {
  StrAppend(&out, Heading(level), " ", element.kind, " ", element.name);
  if (element.title.has_value()) {
    StrAppend(&out, ": ", MarkdownText(*element.title));
  }
  StrAppend(&out, "\n\n- status: ", StatusName(element.status), "\n");
  for (const auto& [name, value] : element.attributes) {
    StrAppend(&out, "- ", name, ": ", MarkdownText(value.text), "\n");
  }
  for (Relation relation : kAllRelations) {
    std::vector<std::string> targets;
    for (const RelationRef& ref : element.relations) {
      if (ref.relation != relation) continue;
      targets.push_back(StrCat("`", ref.target_text, "`"));
    }
    if (targets.empty()) continue;
    StrAppend(&out, "- ", RelationKeyword(relation), ": ",
              StrJoin(targets, ", "), "\n");
  }
  out += "\n";
  for (ElementId child : element.children) {
    MarkdownElement(graph, graph.element(child), level + 1, out);
  }
}

std::string RenderMarkdown(const ModelGraph& graph, const Catalog& catalog,
                           const ProjectConfig& config, ArtefactType artefact,
                           std::span<const MilestoneStatus> milestones) {
  const ArtefactTypeDef& def = catalog.artefact(artefact);
  const std::optional<ArtefactFile>& file = graph.File(artefact);
  std::string out = "---\n";
  StrAppend(&out, "project: ", config.name, "\n");
  StrAppend(&out, "artefact: ", def.id, "\n");
  StrAppend(&out, "domain-profile: ", DomainProfileName(config.domain_profile),
            "\n");
  bool any_milestone = false;
  for (const MilestoneStatus& status : milestones) {
    if (status.artefact != artefact) continue;
    if (!any_milestone) out += "milestones:\n";
    any_milestone = true;
    StrAppend(&out, "  ", status.milestone, ": ",
              status.reached ? "reached" : "not reached", "\n");
  }
  out += "---\n\n";
  StrAppend(&out, "# ", def.display_name);
  if (file.has_value() && file->title.has_value() && !file->title->empty()) {
    StrAppend(&out, ": ", MarkdownText(*file->title));
  }
  out += "\n";

  for (ItemId item : config.enabled_items[Index(artefact)]) {
    const ContentItemDef& item_def = catalog.item(item);
    StrAppend(&out, "\n## ", item_def.display_name, "\n\n");
    const ItemBlock* block =
        file.has_value() ? file->FindBlock(item) : nullptr;
    const bool empty = block == nullptr || block->elements.empty();
    if (empty) {
      out += "_No content._\n";
    } else {
      for (ElementId id : block->elements) {
        MarkdownElement(graph, graph.element(id), 3, out);
      }
    }
    if (item_def.name == "SystemVision") {
      // Generated from the usage model rather than authored.
      out += empty ? "\n### Use Case Overview\n\n" : "### Use Case Overview\n\n";
      std::vector<ElementId> use_cases = graph.ElementsOfKind("UseCase");
      if (use_cases.empty()) out += "_No use cases._\n";
      for (ElementId id : use_cases) {
        const ModelElement& use_case = graph.element(id);
        StrAppend(&out, "- ", use_case.name);
        if (use_case.title.has_value()) {
          StrAppend(&out, ": ", MarkdownText(*use_case.title));
        }
        StrAppend(&out, " (", StatusName(use_case.status), ")\n");
      }
    }
  }
  // Markdown files end with exactly one newline.
  while (out.size() >= 2 && out[out.size() - 1] == '\n' &&
         out[out.size() - 2] == '\n') {
    out.pop_back();
  }
  return out;
}

}  // namespace

RenderedDocument RenderSpec(const ModelGraph& graph, const Catalog& catalog,
                            const ProjectConfig& config, ArtefactType artefact,
                            RenderFormat format,
                            std::span<const MilestoneStatus> milestones) {
  RenderedDocument document{artefact, format, ""};
  if (format == RenderFormat::kArdl) {
    document.body = FormatArdl(ToSyntaxTree(graph, catalog, artefact));
  } else {
    document.body =
        RenderMarkdown(graph, catalog, config, artefact, milestones);
  }
  return document;
}

}  // namespace amdire
