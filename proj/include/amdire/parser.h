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

#ifndef AMDIRE_PARSER_H_
#define AMDIRE_PARSER_H_

#include <vector>

#include "amdire/diagnostic.h"
#include "amdire/source.h"
#include "amdire/syntax.h"

namespace amdire {

struct ParseResult {
  SyntaxNode root;
  std::vector<Diagnostic> diagnostics;  // lexer diagnostics included
};

// Parses one ARDL file. Always returns an ArtefactDecl root. Syntax errors
// are reported as ARD010 (with the expected-token set) or ARD011 (unknown
// element kind), after which the parser skips to the next '}' or keyword that
// can start a construct.
ParseResult Parse(const SourceFile& source);

}  // namespace amdire

#endif  // AMDIRE_PARSER_H_
