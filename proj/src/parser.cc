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

#include "amdire/parser.h"

#include <initializer_list>
#include <sstream>

#include "amdire/strings.h"
#include "amdire/catalog.h"
#include "amdire/lexer.h"

namespace amdire {

std::string_view NodeKindName(NodeKind kind) {
  switch (kind) {
    case NodeKind::kArtefactDecl:
      return "ArtefactDecl";
    case NodeKind::kContentItemBlock:
      return "ContentItemBlock";
    case NodeKind::kElementDecl:
      return "ElementDecl";
    case NodeKind::kAttributeAssign:
      return "AttributeAssign";
    case NodeKind::kRelationClause:
      return "RelationClause";
    case NodeKind::kStatusClause:
      return "StatusClause";
  }
  return "?";
}

std::string QualifiedName::ToString() const {
  return StrJoin(segments, ".");
}

bool StructurallyEqual(const SyntaxNode& a, const SyntaxNode& b) {
  if (a.kind != b.kind || a.keyword != b.keyword ||
      a.identifier != b.identifier || a.title != b.title ||
      a.relation_name != b.relation_name || a.value_kind != b.value_kind ||
      a.value != b.value || a.targets.size() != b.targets.size() ||
      a.children.size() != b.children.size()) {
    return false;
  }
  for (size_t i = 0; i < a.targets.size(); ++i) {
    if (a.targets[i].segments != b.targets[i].segments) return false;
  }
  for (size_t i = 0; i < a.children.size(); ++i) {
    if (!StructurallyEqual(a.children[i], b.children[i])) return false;
  }
  return true;
}

namespace {

void Dump(const SyntaxNode& node, int depth, std::ostringstream& out) {
  out << std::string(static_cast<size_t>(depth) * 2, ' ')
      << NodeKindName(node.kind);
  if (!node.keyword.empty()) out << " " << node.keyword;
  if (node.identifier) out << " " << *node.identifier;
  if (node.title) out << " " << QuoteString(*node.title);
  if (node.relation_name) out << " " << *node.relation_name;
  for (const QualifiedName& target : node.targets) {
    out << " " << target.ToString();
  }
  if (node.kind == NodeKind::kAttributeAssign ||
      node.kind == NodeKind::kStatusClause) {
    out << " = "
        << (node.value_kind == ValueKind::kString ? QuoteString(node.value)
                                                  : node.value);
  }
  out << "\n";
  for (const SyntaxNode& child : node.children) Dump(child, depth + 1, out);
}

class Parser {
 public:
  Parser(const SourceFile& source, LexResult lexed)
      : catalog_(LoadCatalog()),
        path_(source.path),
        tokens_(std::move(lexed.tokens)),
        diagnostics_(std::move(lexed.diagnostics)) {}

  ParseResult Run() {
    SyntaxNode root;
    root.kind = NodeKind::kArtefactDecl;
    root.span = Span{path_, 1, 1, 1, 1, 0, 0};
    ParseFile(root);
    return ParseResult{std::move(root), std::move(diagnostics_)};
  }

 private:
  bool AtEnd() const { return pos_ >= tokens_.size(); }
  const Token& Current() const { return tokens_[pos_]; }
  const Token* PeekAhead(size_t ahead) const {
    return pos_ + ahead < tokens_.size() ? &tokens_[pos_ + ahead] : nullptr;
  }
  bool Is(TokenKind kind) const { return !AtEnd() && Current().kind == kind; }

  const Token& Consume() { return tokens_[pos_++]; }

  Span LastSpan() const {
    return pos_ > 0 ? tokens_[pos_ - 1].span : Span{path_, 1, 1, 1, 1, 0, 0};
  }

  bool IsItemKeyword() const {
    return Is(TokenKind::kKeyword) && catalog_.IsItemKeyword(Current().text);
  }
  bool IsConceptKeyword() const {
    return Is(TokenKind::kKeyword) &&
           catalog_.FindConceptByKeyword(Current().text) != nullptr;
  }
  bool IsRelationKeyword() const {
    return Is(TokenKind::kKeyword) &&
           RelationFromKeyword(Current().text).has_value();
  }
  bool IsHeaderKeyword() const {
    return Is(TokenKind::kKeyword) &&
           catalog_.ArtefactFromKeyword(Current().text).has_value();
  }
  bool IsSyncPoint() const {
    return Is(TokenKind::kRBrace) || IsItemKeyword() || IsConceptKeyword() ||
           IsRelationKeyword() || IsHeaderKeyword();
  }
  // An attribute or status clause starts with a word followed by ':'.
  bool AtAssignment() const {
    const Token* next = PeekAhead(1);
    return (Is(TokenKind::kIdentifier) || Is(TokenKind::kKeyword)) &&
           next != nullptr && next->kind == TokenKind::kColon;
  }

  // Reports at most one error per token position, so an unclosed block that
  // is noticed by several enclosing levels is reported once.
  void ErrorExpected(std::initializer_list<std::string_view> expected) {
    if (last_error_pos_ == pos_) return;
    last_error_pos_ = pos_;
    std::string found;
    Span at;
    if (AtEnd()) {
      found = "end of file";
      at = LastSpan();
      at.start_line = at.end_line;
      at.start_col = at.end_col;
      at.begin_offset = at.end_offset;
    } else {
      found = Current().kind == TokenKind::kString
                  ? "string"
                  : StrCat("'", Current().text, "'");
      at = Current().span;
    }
    diagnostics_.push_back(Diagnostic{
        "ARD010", Severity::kError,
        StrCat("expected ", StrJoin(expected, ", "), "; found ",
                     found),
        at, {}, std::nullopt});
  }

  // Skips a balanced {...} group starting at the current '{'.
  void SkipGroup() {
    int depth = 0;
    while (!AtEnd()) {
      const Token& token = Consume();
      if (token.kind == TokenKind::kLBrace) {
        ++depth;
      } else if (token.kind == TokenKind::kRBrace) {
        if (--depth <= 0) return;
      }
    }
  }

  // Panic-mode recovery: consume the offending token, then skip to the next
  // '}' or construct-starting keyword at the same nesting depth.
  void Recover() {
    if (AtEnd()) return;
    if (Is(TokenKind::kLBrace)) {
      SkipGroup();
    } else {
      Consume();
    }
    while (!AtEnd() && !IsSyncPoint()) {
      if (Is(TokenKind::kLBrace)) {
        SkipGroup();
      } else {
        Consume();
      }
    }
  }

  void ParseFile(SyntaxNode& root) {
    if (AtEnd()) {
      ErrorExpected({"artefact header"});
      return;
    }
    const Span first = Current().span;
    if (!IsHeaderKeyword()) {
      ErrorExpected({"artefact header"});
      while (!AtEnd() && !IsHeaderKeyword()) Consume();
    }
    if (AtEnd()) {
      root.span = Join(first, LastSpan());
      return;
    }
    root.keyword = Consume().text;
    if (Is(TokenKind::kString)) {
      root.title = Consume().text;
    } else {
      ErrorExpected({"string"});
    }
    if (Is(TokenKind::kLBrace)) {
      Consume();
    } else {
      ErrorExpected({"'{'"});
    }
    while (true) {
      if (AtEnd()) {
        ErrorExpected({"'}'"});
        break;
      }
      if (Is(TokenKind::kRBrace)) {
        Consume();
        break;
      }
      if (IsItemKeyword()) {
        root.children.push_back(ParseBlock());
        continue;
      }
      ErrorExpected({"content item", "'}'"});
      Recover();
    }
    root.span = Join(first, LastSpan());
    if (!AtEnd()) {
      ErrorExpected({"end of file"});
      pos_ = tokens_.size();
    }
  }

  SyntaxNode ParseBlock() {
    SyntaxNode block;
    block.kind = NodeKind::kContentItemBlock;
    const Token& keyword = Consume();
    block.keyword = keyword.text;
    block.span = keyword.span;
    if (Is(TokenKind::kLBrace)) {
      Consume();
    } else {
      ErrorExpected({"'{'"});
      if (!IsConceptKeyword()) {
        block.span = Join(block.span, LastSpan());
        return block;
      }
    }
    while (true) {
      if (AtEnd()) {
        ErrorExpected({"'}'"});
        break;
      }
      if (Is(TokenKind::kRBrace)) {
        Consume();
        break;
      }
      if (IsConceptKeyword()) {
        if (std::optional<SyntaxNode> element = ParseElement()) {
          block.children.push_back(std::move(*element));
        }
        continue;
      }
      if (IsItemKeyword() || IsHeaderKeyword()) {
        ErrorExpected({"'}'"});
        break;
      }
      if (Is(TokenKind::kIdentifier) && PeekAhead(1) != nullptr &&
          PeekAhead(1)->kind == TokenKind::kIdentifier) {
        UnknownKind();
        continue;
      }
      ErrorExpected({"element kind", "'}'"});
      Recover();
    }
    block.span = Join(block.span, LastSpan());
    return block;
  }

  void UnknownKind() {
    diagnostics_.push_back(Diagnostic{
        "ARD011", Severity::kError,
        StrCat("unknown element kind '", Current().text, "'"),
        Current().span, {}, std::nullopt});
    last_error_pos_ = pos_;
    Consume();  // kind
    Consume();  // name
    if (Is(TokenKind::kString)) Consume();
    if (Is(TokenKind::kLBrace)) SkipGroup();
  }

  std::optional<SyntaxNode> ParseElement() {
    SyntaxNode element;
    element.kind = NodeKind::kElementDecl;
    const Token& keyword = Consume();
    element.keyword = keyword.text;
    element.span = keyword.span;
    if (!Is(TokenKind::kIdentifier)) {
      ErrorExpected({"identifier"});
      Recover();
      return std::nullopt;
    }
    element.identifier = Consume().text;
    if (Is(TokenKind::kString)) element.title = Consume().text;
    if (!Is(TokenKind::kLBrace)) {
      ErrorExpected({"'{'"});
      Recover();
      return std::nullopt;
    }
    Consume();
    while (true) {
      if (AtEnd()) {
        ErrorExpected({"'}'"});
        break;
      }
      if (Is(TokenKind::kRBrace)) {
        Consume();
        break;
      }
      if (AtAssignment()) {
        element.children.push_back(ParseAssignment());
        continue;
      }
      if (IsRelationKeyword()) {
        if (std::optional<SyntaxNode> clause = ParseRelation()) {
          element.children.push_back(std::move(*clause));
        }
        continue;
      }
      if (IsConceptKeyword()) {
        if (std::optional<SyntaxNode> nested = ParseElement()) {
          element.children.push_back(std::move(*nested));
        }
        continue;
      }
      if (IsItemKeyword() || IsHeaderKeyword()) {
        ErrorExpected({"'}'"});
        break;
      }
      if (Is(TokenKind::kIdentifier) && PeekAhead(1) != nullptr &&
          PeekAhead(1)->kind == TokenKind::kIdentifier) {
        UnknownKind();
        continue;
      }
      ErrorExpected({"attribute", "relation", "status", "element kind", "'}'"});
      Recover();
    }
    element.span = Join(element.span, LastSpan());
    return element;
  }

  SyntaxNode ParseAssignment() {
    SyntaxNode node;
    const Token& name = Consume();
    node.span = name.span;
    Consume();  // ':'
    const bool is_status = name.text == "status";
    node.kind = is_status ? NodeKind::kStatusClause : NodeKind::kAttributeAssign;
    if (!is_status) node.identifier = name.text;
    if (Is(TokenKind::kString)) {
      node.value_kind = ValueKind::kString;
      node.value = Consume().text;
    } else if (Is(TokenKind::kInteger)) {
      node.value_kind = ValueKind::kInteger;
      node.value = Consume().text;
    } else if (Is(TokenKind::kIdentifier) || Is(TokenKind::kKeyword)) {
      QualifiedName name_value = ParseQualifiedName();
      node.value_kind = ValueKind::kName;
      node.value = name_value.ToString();
    } else {
      ErrorExpected({"string", "integer", "name"});
    }
    node.span = Join(node.span, LastSpan());
    return node;
  }

  QualifiedName ParseQualifiedName() {
    QualifiedName name;
    const Token& first = Consume();
    name.segments.push_back(first.text);
    name.span = first.span;
    while (Is(TokenKind::kDot)) {
      const Token* next = PeekAhead(1);
      if (next == nullptr || (next->kind != TokenKind::kIdentifier &&
                              next->kind != TokenKind::kKeyword)) {
        Consume();
        ErrorExpected({"identifier"});
        break;
      }
      Consume();
      name.segments.push_back(Consume().text);
      name.span = Join(name.span, LastSpan());
    }
    return name;
  }

  std::optional<SyntaxNode> ParseRelation() {
    SyntaxNode clause;
    clause.kind = NodeKind::kRelationClause;
    const Token& keyword = Consume();
    clause.relation_name = keyword.text;
    clause.span = keyword.span;
    while (true) {
      if (!Is(TokenKind::kIdentifier)) {
        ErrorExpected({"qualified name"});
        if (!IsSyncPoint()) Recover();
        return std::nullopt;
      }
      clause.targets.push_back(ParseQualifiedName());
      if (!Is(TokenKind::kComma)) break;
      Consume();
    }
    clause.span = Join(clause.span, LastSpan());
    return clause;
  }

  const Catalog& catalog_;
  std::string path_;
  std::vector<Token> tokens_;
  std::vector<Diagnostic> diagnostics_;
  size_t pos_ = 0;
  size_t last_error_pos_ = static_cast<size_t>(-1);
};

}  // namespace

std::string DumpTree(const SyntaxNode& node) {
  std::ostringstream out;
  Dump(node, 0, out);
  return out.str();
}

ParseResult Parse(const SourceFile& source) {
  return Parser(source, Tokenize(source)).Run();
}

}  // namespace amdire
