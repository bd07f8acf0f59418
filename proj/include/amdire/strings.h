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

// Adapters over absl/strings for std::string_view arguments. Some Abseil
// builds (ABSL_OPTION_USE_STD_STRING_VIEW=0) use a distinct absl::string_view
// that std::string_view does not convert to.

#ifndef AMDIRE_STRINGS_H_
#define AMDIRE_STRINGS_H_

#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "absl/strings/ascii.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "absl/strings/string_view.h"

namespace amdire {
namespace strings_internal {

template <typename T>
decltype(auto) Adapt(const T& value) {
  if constexpr (std::is_same_v<T, std::string_view>) {
    return absl::string_view(value.data(), value.size());
  } else {
    return (value);
  }
}

inline std::string_view ToStd(absl::string_view value) {
  return std::string_view(value.data(), value.size());
}

}  // namespace strings_internal

template <typename... Args>
std::string StrCat(const Args&... args) {
  return absl::StrCat(strings_internal::Adapt(args)...);
}

template <typename... Args>
void StrAppend(std::string* out, const Args&... args) {
  absl::StrAppend(out, strings_internal::Adapt(args)...);
}

template <typename Range>
std::string StrJoin(const Range& range, std::string_view separator) {
  return absl::StrJoin(range, strings_internal::Adapt(separator),
                       [](std::string* out, const auto& piece) {
                         absl::StrAppend(out, strings_internal::Adapt(piece));
                       });
}

// Splits on `delimiter`, keeping empty pieces.
inline std::vector<std::string_view> Split(std::string_view text,
                                           char delimiter) {
  std::vector<std::string_view> pieces;
  for (absl::string_view piece :
       absl::StrSplit(strings_internal::Adapt(text), delimiter)) {
    pieces.push_back(strings_internal::ToStd(piece));
  }
  return pieces;
}

// Splits on any character of `delimiters`, dropping empty pieces.
inline std::vector<std::string_view> SplitAny(std::string_view text,
                                              std::string_view delimiters) {
  std::vector<std::string_view> pieces;
  for (absl::string_view piece :
       absl::StrSplit(strings_internal::Adapt(text),
                      absl::ByAnyChar(strings_internal::Adapt(delimiters)),
                      absl::SkipEmpty())) {
    pieces.push_back(strings_internal::ToStd(piece));
  }
  return pieces;
}

inline std::string_view StripWhitespace(std::string_view text) {
  return strings_internal::ToStd(
      absl::StripAsciiWhitespace(strings_internal::Adapt(text)));
}

inline std::string_view StripTrailingWhitespace(std::string_view text) {
  return strings_internal::ToStd(
      absl::StripTrailingAsciiWhitespace(strings_internal::Adapt(text)));
}

inline std::string ToLower(std::string_view text) {
  return absl::AsciiStrToLower(strings_internal::Adapt(text));
}

}  // namespace amdire

#endif  // AMDIRE_STRINGS_H_
