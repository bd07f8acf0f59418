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

#ifndef AMDIRE_TRACE_MATRIX_H_
#define AMDIRE_TRACE_MATRIX_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "amdire/catalog.h"
#include "amdire/model_graph.h"

namespace amdire {

struct TraceRow {
  ElementId source;
  std::vector<ElementId> targets;  // ordered by qualified name
  bool covered = false;
};

struct TraceMatrix {
  std::string from_kind;
  std::string to_kind;
  std::vector<TraceRow> rows;  // ordered by source qualified name

  size_t covered_rows() const;
  // 1.0 for a matrix without rows.
  double coverage() const;
};

// Kind pairs a matrix can be built for: every direct realisation rule, plus
// the two-hop chain DataElement -> DataObject -> BusinessObject.
std::vector<std::pair<std::string, std::string>> TracePairs(
    const Catalog& catalog);

// Builds the matrix by walking realisation edges. An unsupported pair is an
// InvalidArgument error naming the valid targets for `from_kind` (or all
// valid pairs if it has none).
absl::StatusOr<TraceMatrix> BuildTraceMatrix(const ModelGraph& graph,
                                             const Catalog& catalog,
                                             std::string_view from_kind,
                                             std::string_view to_kind);

// Plain-text table with a trailing summary line.
std::string FormatTraceTable(const TraceMatrix& matrix, const ModelGraph& graph);
// Stable-key JSON document.
std::string FormatTraceJson(const TraceMatrix& matrix, const ModelGraph& graph);

}  // namespace amdire

#endif  // AMDIRE_TRACE_MATRIX_H_
