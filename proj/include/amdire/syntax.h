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

#ifndef AMDIRE_SYNTAX_H_
#define AMDIRE_SYNTAX_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "amdire/source.h"

namespace amdire {

enum class NodeKind : uint8_t {
  kArtefactDecl,
  kContentItemBlock,
  kElementDecl,
  kAttributeAssign,
  kRelationClause,
  kStatusClause,
};

std::string_view NodeKindName(NodeKind kind);

enum class ValueKind : uint8_t { kString, kInteger, kName };

struct QualifiedName {
  std::vector<std::string> segments;
  Span span;

  std::string ToString() const;
};

// ARDL syntax tree node. Which optional fields are set depends on the kind:
//
//   ArtefactDecl      keyword (header), title
//   ContentItemBlock  keyword
//   ElementDecl       keyword (concept), identifier, title
//   AttributeAssign   identifier, value_kind, value
//   RelationClause    relation_name, targets
//   StatusClause      value
struct SyntaxNode {
  NodeKind kind = NodeKind::kArtefactDecl;
  Span span;
  std::vector<SyntaxNode> children;
  std::string keyword;
  std::optional<std::string> identifier;
  std::optional<std::string> title;
  std::optional<std::string> relation_name;
  std::vector<QualifiedName> targets;
  ValueKind value_kind = ValueKind::kName;
  std::string value;
};

// Compares two trees ignoring spans.
bool StructurallyEqual(const SyntaxNode& a, const SyntaxNode& b);

// Debug dump, one node per line, two-space indentation; spans omitted.
std::string DumpTree(const SyntaxNode& node);

}  // namespace amdire

#endif  // AMDIRE_SYNTAX_H_
