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

#include "amdire/trace_matrix.h"

#include <algorithm>
#include <cstdio>

#include "absl/status/status.h"
#include "amdire/strings.h"
#include "json.hpp"

namespace amdire {
namespace {

constexpr std::string_view kChainFrom = "DataElement";
constexpr std::string_view kChainVia = "DataObject";
constexpr std::string_view kChainTo = "BusinessObject";

bool ByQualifiedName(const ModelGraph& graph, ElementId a, ElementId b) {
  return graph.element(a).qualified_name < graph.element(b).qualified_name;
}

std::string Percent(double ratio) {
  char buffer[16];
  std::snprintf(buffer, sizeof(buffer), "%.1f%%", ratio * 100.0);
  return buffer;
}

}  // namespace

size_t TraceMatrix::covered_rows() const {
  return std::count_if(rows.begin(), rows.end(),
                       [](const TraceRow& row) { return row.covered; });
}

double TraceMatrix::coverage() const {
  if (rows.empty()) return 1.0;
  return static_cast<double>(covered_rows()) / static_cast<double>(rows.size());
}

std::vector<std::pair<std::string, std::string>> TracePairs(
    const Catalog& catalog) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const RelationRule& rule : catalog.relation_rules()) {
    if (rule.relation != Relation::kRealises) continue;
    for (const std::string& target : rule.target_kinds) {
      pairs.emplace_back(rule.source_kind, target);
    }
  }
  pairs.emplace_back(std::string(kChainFrom), std::string(kChainTo));
  return pairs;
}

absl::StatusOr<TraceMatrix> BuildTraceMatrix(const ModelGraph& graph,
                                             const Catalog& catalog,
                                             std::string_view from_kind,
                                             std::string_view to_kind) {
  const auto pairs = TracePairs(catalog);
  const bool supported =
      std::any_of(pairs.begin(), pairs.end(), [&](const auto& pair) {
        return pair.first == from_kind && pair.second == to_kind;
      });
  if (!supported) {
    std::vector<std::string> targets;
    for (const auto& [from, to] : pairs) {
      if (from == from_kind) targets.push_back(to);
    }
    if (!targets.empty()) {
      return absl::InvalidArgumentError(
          StrCat("no realisation path from ", from_kind, " to ", to_kind,
                 "; valid targets for ", from_kind, ": ",
                 StrJoin(targets, ", ")));
    }
    std::vector<std::string> all;
    for (const auto& [from, to] : pairs) all.push_back(StrCat(from, "->", to));
    return absl::InvalidArgumentError(
        StrCat(from_kind, " has no realisation rules; valid pairs: ",
               StrJoin(all, ", ")));
  }

  const bool chain = from_kind == kChainFrom && to_kind == kChainTo;
  TraceMatrix matrix{std::string(from_kind), std::string(to_kind), {}};
  for (ElementId source : graph.ElementsOfKind(from_kind)) {
    TraceRow row{source, {}, false};
    if (chain) {
      for (ElementId via : graph.Targets(source, Relation::kRealises,
                                         {std::string(kChainVia)})) {
        for (ElementId target : graph.Targets(via, Relation::kRealises,
                                              {std::string(kChainTo)})) {
          if (std::find(row.targets.begin(), row.targets.end(), target) ==
              row.targets.end()) {
            row.targets.push_back(target);
          }
        }
      }
    } else {
      row.targets =
          graph.Targets(source, Relation::kRealises, {std::string(to_kind)});
    }
    std::sort(row.targets.begin(), row.targets.end(),
              [&](ElementId a, ElementId b) { return ByQualifiedName(graph, a, b); });
    row.covered = !row.targets.empty();
    matrix.rows.push_back(std::move(row));
  }
  std::sort(matrix.rows.begin(), matrix.rows.end(),
            [&](const TraceRow& a, const TraceRow& b) {
              return ByQualifiedName(graph, a.source, b.source);
            });
  return matrix;
}

std::string FormatTraceTable(const TraceMatrix& matrix, const ModelGraph& graph) {
  size_t width = matrix.from_kind.size();
  for (const TraceRow& row : matrix.rows) {
    width = std::max(width, graph.element(row.source).qualified_name.size());
  }
  auto pad = [&](std::string text) {
    text.resize(std::max(text.size(), width), ' ');
    return text;
  };
  std::string out = StrCat(pad(matrix.from_kind), "  ", matrix.to_kind, "\n");
  for (const TraceRow& row : matrix.rows) {
    std::vector<std::string> names;
    for (ElementId target : row.targets) {
      names.push_back(graph.element(target).qualified_name);
    }
    StrAppend(&out, pad(graph.element(row.source).qualified_name), "  ",
              row.covered ? StrJoin(names, ", ") : std::string("(uncovered)"),
              "\n");
  }
  StrAppend(&out, "coverage: ", matrix.covered_rows(), "/", matrix.rows.size(),
            " rows covered (", Percent(matrix.coverage()), ")\n");
  return out;
}

std::string FormatTraceJson(const TraceMatrix& matrix, const ModelGraph& graph) {
  nlohmann::ordered_json doc;
  doc["from"] = matrix.from_kind;
  doc["to"] = matrix.to_kind;
  doc["summary"] = {{"rows", matrix.rows.size()},
                    {"covered", matrix.covered_rows()},
                    {"coverage", matrix.coverage()}};
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const TraceRow& row : matrix.rows) {
    nlohmann::ordered_json targets = nlohmann::ordered_json::array();
    for (ElementId target : row.targets) {
      targets.push_back(graph.element(target).qualified_name);
    }
    rows.push_back({{"source", graph.element(row.source).qualified_name},
                    {"targets", std::move(targets)},
                    {"covered", row.covered}});
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

}  // namespace amdire
