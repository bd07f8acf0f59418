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

#ifndef AMDIRE_SOURCE_H_
#define AMDIRE_SOURCE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "amdire/catalog.h"

namespace amdire {

// A region of a source file. Lines and columns are 1-based and columns count
// Unicode scalar values. The end position is exclusive. Byte offsets are kept
// alongside so a span can slice the original text.
struct Span {
  std::string file;
  uint32_t start_line = 1;
  uint32_t start_col = 1;
  uint32_t end_line = 1;
  uint32_t end_col = 1;
  uint32_t begin_offset = 0;
  uint32_t end_offset = 0;

  // True if (line, col) lies in [start, end).
  bool Contains(uint32_t line, uint32_t col) const;
  // True if other lies entirely inside this span (same file).
  bool Covers(const Span& other) const;

  friend bool operator==(const Span&, const Span&) = default;
};

// Span covering both a and b; a and b must share a file.
Span Join(const Span& a, const Span& b);

struct SourceFile {
  std::string path;
  std::string content;
  // Set from the artefact header once the file has been parsed.
  std::optional<ArtefactType> artefact_kind_hint;
};

}  // namespace amdire

#endif  // AMDIRE_SOURCE_H_
