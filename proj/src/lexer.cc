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

#include "amdire/lexer.h"

#include <unordered_set>

#include "amdire/strings.h"
#include "amdire/catalog.h"

namespace amdire {
namespace {

const std::unordered_set<std::string>& KeywordSet() {
  static const auto* const keywords = [] {
    auto* set = new std::unordered_set<std::string>();
    const Catalog& catalog = LoadCatalog();
    for (const ArtefactTypeDef& def : catalog.artefact_types()) {
      set->insert(def.keyword);
    }
    for (const ContentItemDef& item : catalog.items()) set->insert(item.keyword);
    for (const ConceptDef& def : catalog.concepts()) set->insert(def.keyword);
    for (Relation relation : kAllRelations) {
      set->insert(std::string(RelationKeyword(relation)));
    }
    set->insert("status");
    return set;
  }();
  return *keywords;
}

bool IsIdentStart(char c) {
  return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
}

bool IsIdentContinue(char c) {
  return IsIdentStart(c) || (c >= '0' && c <= '9') || c == '-';
}

bool IsDigit(char c) { return c >= '0' && c <= '9'; }

// Length of the UTF-8 sequence starting at text[pos], or 0 if invalid.
size_t Utf8SequenceLength(std::string_view text, size_t pos) {
  const auto lead = static_cast<unsigned char>(text[pos]);
  size_t length = 0;
  if (lead < 0x80) return 1;
  if ((lead & 0xE0) == 0xC0 && lead >= 0xC2) {
    length = 2;
  } else if ((lead & 0xF0) == 0xE0) {
    length = 3;
  } else if ((lead & 0xF8) == 0xF0 && lead <= 0xF4) {
    length = 4;
  } else {
    return 0;
  }
  if (pos + length > text.size()) return 0;
  for (size_t i = 1; i < length; ++i) {
    if ((static_cast<unsigned char>(text[pos + i]) & 0xC0) != 0x80) return 0;
  }
  return length;
}

class Lexer {
 public:
  explicit Lexer(const SourceFile& source)
      : path_(source.path), text_(source.content) {}

  LexResult Run() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '\n') {
        Advance(1);
        NewLine();
      } else if (c == ' ' || c == '\t' || c == '\r') {
        Advance(1);
      } else if (c == '/' && Peek(1) == '/') {
        while (pos_ < text_.size() && text_[pos_] != '\n') {
          AdvanceScalar();
        }
      } else if (c == '"') {
        LexString();
      } else if (IsIdentStart(c)) {
        LexWord();
      } else if (IsDigit(c)) {
        LexInteger();
      } else if (c == '{') {
        Single(TokenKind::kLBrace);
      } else if (c == '}') {
        Single(TokenKind::kRBrace);
      } else if (c == ':') {
        Single(TokenKind::kColon);
      } else if (c == ',') {
        Single(TokenKind::kComma);
      } else if (c == '.') {
        Single(TokenKind::kDot);
      } else {
        IllegalCharacter();
      }
    }
    return std::move(result_);
  }

 private:
  struct Mark {
    size_t offset;
    uint32_t line;
    uint32_t col;
  };

  char Peek(size_t ahead) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  Mark Here() const { return {pos_, line_, col_}; }

  Span SpanFrom(const Mark& start) const {
    return Span{path_,
                start.line,
                start.col,
                line_,
                col_,
                static_cast<uint32_t>(start.offset),
                static_cast<uint32_t>(pos_)};
  }

  // Advances over ASCII bytes.
  void Advance(size_t bytes) {
    pos_ += bytes;
    col_ += static_cast<uint32_t>(bytes);
  }

  // Advances over one scalar value (or one invalid byte).
  void AdvanceScalar() {
    size_t length = Utf8SequenceLength(text_, pos_);
    pos_ += length == 0 ? 1 : length;
    ++col_;
  }

  void NewLine() {
    ++line_;
    col_ = 1;
  }

  void Report(std::string code, std::string message, Span span) {
    result_.diagnostics.push_back(Diagnostic{std::move(code), Severity::kError,
                                             std::move(message),
                                             std::move(span), {}, std::nullopt});
  }

  void Single(TokenKind kind) {
    Mark start = Here();
    Advance(1);
    result_.tokens.push_back(
        Token{kind, std::string(text_.substr(start.offset, 1)), SpanFrom(start)});
  }

  void LexWord() {
    Mark start = Here();
    size_t end = pos_;
    while (end < text_.size() && IsIdentContinue(text_[end])) ++end;
    Advance(end - pos_);
    std::string word(text_.substr(start.offset, end - start.offset));
    TokenKind kind =
        KeywordSet().contains(word) ? TokenKind::kKeyword : TokenKind::kIdentifier;
    result_.tokens.push_back(Token{kind, std::move(word), SpanFrom(start)});
  }

  void LexInteger() {
    Mark start = Here();
    size_t end = pos_;
    while (end < text_.size() && IsDigit(text_[end])) ++end;
    Advance(end - pos_);
    result_.tokens.push_back(
        Token{TokenKind::kInteger,
              std::string(text_.substr(start.offset, end - start.offset)),
              SpanFrom(start)});
  }

  void LexString() {
    Mark start = Here();
    Advance(1);
    std::string value;
    while (true) {
      if (pos_ >= text_.size() || text_[pos_] == '\n' ||
          (text_[pos_] == '\r' && Peek(1) == '\n')) {
        Span at_quote{path_,
                      start.line,
                      start.col,
                      start.line,
                      start.col + 1,
                      static_cast<uint32_t>(start.offset),
                      static_cast<uint32_t>(start.offset + 1)};
        Report("ARD001", "unterminated string literal", at_quote);
        return;
      }
      const char c = text_[pos_];
      if (c == '"') {
        Advance(1);
        break;
      }
      if (c == '\\') {
        const char next = Peek(1);
        if (next == '"' || next == '\\') {
          value.push_back(next);
          Advance(2);
          continue;
        }
        Mark escape = Here();
        Advance(1);
        Report("ARD004", "unknown escape sequence in string literal",
               SpanFrom(escape));
        value.push_back('\\');
        continue;
      }
      size_t length = Utf8SequenceLength(text_, pos_);
      if (length == 0) {
        Mark bad = Here();
        AdvanceScalar();
        Report("ARD003", "invalid UTF-8 byte in string literal", SpanFrom(bad));
        continue;
      }
      value.append(text_.substr(pos_, length));
      pos_ += length;
      ++col_;
    }
    result_.tokens.push_back(
        Token{TokenKind::kString, std::move(value), SpanFrom(start)});
  }

  void IllegalCharacter() {
    Mark start = Here();
    const bool valid = Utf8SequenceLength(text_, pos_) != 0;
    std::string shown(
        text_.substr(pos_, valid ? Utf8SequenceLength(text_, pos_) : 1));
    AdvanceScalar();
    if (!valid) {
      Report("ARD003", "invalid UTF-8 byte", SpanFrom(start));
      return;
    }
    Report("ARD002", StrCat("illegal character '", shown, "'"),
           SpanFrom(start));
  }

  std::string path_;
  std::string_view text_;
  size_t pos_ = 0;
  uint32_t line_ = 1;
  uint32_t col_ = 1;
  LexResult result_;
};

}  // namespace

std::string_view TokenKindName(TokenKind kind) {
  switch (kind) {
    case TokenKind::kKeyword:
      return "keyword";
    case TokenKind::kIdentifier:
      return "identifier";
    case TokenKind::kString:
      return "string";
    case TokenKind::kInteger:
      return "integer";
    case TokenKind::kLBrace:
      return "'{'";
    case TokenKind::kRBrace:
      return "'}'";
    case TokenKind::kColon:
      return "':'";
    case TokenKind::kComma:
      return "','";
    case TokenKind::kDot:
      return "'.'";
  }
  return "token";
}

bool IsArdlKeyword(std::string_view word) {
  return KeywordSet().contains(std::string(word));
}

LexResult Tokenize(const SourceFile& source) { return Lexer(source).Run(); }

std::string QuoteString(std::string_view value) {
  std::string out = "\"";
  for (char c : value) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace amdire
