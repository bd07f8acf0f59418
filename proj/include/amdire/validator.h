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

#ifndef AMDIRE_VALIDATOR_H_
#define AMDIRE_VALIDATOR_H_

#include <string>
#include <vector>

#include "amdire/catalog.h"
#include "amdire/diagnostic.h"
#include "amdire/model_graph.h"
#include "amdire/project_config.h"

namespace amdire {

struct Rule {
  std::string code;  // AMD\d{3}
  std::string title;
  Severity default_severity;
  // A concept kind, a content item ("requirements.UsageModel"), an artefact
  // type id, or "project".
  std::string scope;
  // Method principle the rule enforces, or "plumbing".
  std::string anchor;
  bool enabled_by_default = true;
};

// Every rule the toolchain can report, including linker and tailoring codes,
// ordered by code.
std::vector<Rule> ListRules(const Catalog& catalog);

// Runs every enabled rule over the graph. Findings about elements in
// disabled content items are suppressed. Severity overrides from the config
// are applied and the result is sorted (file, line, column, code).
std::vector<Diagnostic> Validate(const ModelGraph& graph, const Catalog& catalog,
                                 const ProjectConfig& config);

}  // namespace amdire

#endif  // AMDIRE_VALIDATOR_H_
