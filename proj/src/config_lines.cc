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

#include "amdire/config_lines.h"

#include <string_view>

#include "amdire/strings.h"

namespace amdire {
namespace {

// Config files are expected to be ASCII; columns equal byte offsets + 1.
Span ColumnSpan(const std::string& file, uint32_t line, uint32_t line_offset,
                size_t begin, size_t end) {
  return Span{file,
              line,
              static_cast<uint32_t>(begin + 1),
              line,
              static_cast<uint32_t>(end + 1),
              static_cast<uint32_t>(line_offset + begin),
              static_cast<uint32_t>(line_offset + end)};
}

bool Unquote(std::string_view quoted, std::string& out) {
  if (quoted.size() < 2 || quoted.front() != '"' || quoted.back() != '"') {
    return false;
  }
  out.clear();
  for (size_t i = 1; i + 1 < quoted.size(); ++i) {
    char c = quoted[i];
    if (c == '\\' && i + 2 < quoted.size() &&
        (quoted[i + 1] == '"' || quoted[i + 1] == '\\')) {
      out.push_back(quoted[++i]);
      continue;
    }
    if (c == '"') return false;
    out.push_back(c);
  }
  return true;
}

}  // namespace

std::vector<ConfigLine> SplitConfigLines(const SourceFile& source,
                                         std::vector<Diagnostic>& diagnostics) {
  std::vector<ConfigLine> lines;
  uint32_t line_number = 0;
  uint32_t offset = 0;
  for (std::string_view raw : Split(source.content, '\n')) {
    ++line_number;
    const uint32_t line_offset = offset;
    offset += static_cast<uint32_t>(raw.size()) + 1;
    std::string_view text = raw;
    if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
    std::string_view stripped = StripWhitespace(text);
    if (stripped.empty() || stripped.front() == '#') continue;

    const size_t lead = static_cast<size_t>(stripped.data() - text.data());
    ConfigLine line;
    line.line_span = ColumnSpan(source.path, line_number, line_offset, lead,
                                lead + stripped.size());

    const size_t colon = stripped.find(':');
    std::string_view head =
        colon == std::string_view::npos ? stripped : stripped.substr(0, colon);
    head = StripTrailingWhitespace(head);
    std::vector<std::string_view> words =
        SplitAny(head, " \t");
    if (words.empty() || words.size() > 2) {
      diagnostics.push_back(Diagnostic{
          "AMD089", Severity::kError,
          StrCat("malformed line '", stripped,
                       "'; expected 'key: value' or 'key argument: value'"),
          line.line_span, {}, std::nullopt});
      continue;
    }
    line.key = std::string(words[0]);
    line.key_span = ColumnSpan(source.path, line_number, line_offset, lead,
                               lead + words[0].size());
    if (words.size() == 2) line.argument = std::string(words[1]);

    if (colon != std::string_view::npos) {
      line.has_colon = true;
      std::string_view value = StripWhitespace(stripped.substr(colon + 1));
      const size_t value_begin =
          value.empty() ? lead + colon + 1
                        : static_cast<size_t>(value.data() - text.data());
      line.value_span = ColumnSpan(source.path, line_number, line_offset,
                                   value_begin, value_begin + value.size());
      if (!value.empty() && value.front() == '"') {
        std::string unquoted;
        if (!Unquote(value, unquoted)) {
          diagnostics.push_back(Diagnostic{
              "AMD089", Severity::kError,
              StrCat("malformed quoted value ", value), line.value_span,
              {}, std::nullopt});
          continue;
        }
        line.value = std::move(unquoted);
        line.quoted = true;
      } else {
        line.value = std::string(value);
      }
    } else {
      line.value_span = line.line_span;
    }
    lines.push_back(std::move(line));
  }
  return lines;
}

}  // namespace amdire
