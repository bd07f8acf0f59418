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

#ifndef AMDIRE_LEXER_H_
#define AMDIRE_LEXER_H_

#include <string>
#include <string_view>
#include <vector>

#include "amdire/diagnostic.h"
#include "amdire/source.h"

namespace amdire {

enum class TokenKind : uint8_t {
  kKeyword,
  kIdentifier,
  kString,
  kInteger,
  kLBrace,
  kRBrace,
  kColon,
  kComma,
  kDot,
};

std::string_view TokenKindName(TokenKind kind);

struct Token {
  TokenKind kind;
  // Source text, except for strings where it holds the unescaped value.
  std::string text;
  Span span;
};

struct LexResult {
  std::vector<Token> tokens;
  std::vector<Diagnostic> diagnostics;
};

// True for every reserved ARDL word: artefact headers, content-item and
// concept keywords, relation keywords, and "status". The set is derived from
// the catalog.
bool IsArdlKeyword(std::string_view word);

// Splits ARDL source into tokens. Whitespace and `//` comments are dropped.
// Malformed input produces diagnostics (ARD001 unterminated string, ARD002
// illegal character, ARD003 invalid UTF-8, ARD004 unknown escape) and lexing
// continues.
LexResult Tokenize(const SourceFile& source);

// Escapes `"` and `\` and wraps the result in quotes.
std::string QuoteString(std::string_view value);

}  // namespace amdire

#endif  // AMDIRE_LEXER_H_
