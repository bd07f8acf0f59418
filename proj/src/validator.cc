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

#include "amdire/validator.h"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "amdire/strings.h"
#include "amdire/linker.h"

namespace amdire {

std::vector<Rule> ListRules(const Catalog& catalog) {
  (void)catalog;
  constexpr Severity kE = Severity::kError;
  constexpr Severity kW = Severity::kWarning;
  constexpr Severity kI = Severity::kInfo;
  std::vector<Rule> rules = {
      {"AMD001", "Unresolved reference", kE, "project", "plumbing"},
      {"AMD002", "Duplicate qualified name", kE, "project", "plumbing"},
      {"AMD003", "Ambiguous reference", kE, "project", "plumbing"},
      {"AMD004", "Duplicate relation", kW, "project", "plumbing"},
      {"AMD011", "More than one file for an artefact type", kE, "project",
       "artefact model: one artefact per artefact type"},
      {"AMD012", "Element kind placed in a foreign content item", kE, "project",
       "content model: every concept has one home content item"},
      {"AMD013", "Content item placed in a foreign artefact type", kE,
       "project", "structure model: content items per artefact type"},
      {"AMD014", "Invalid element status", kE, "project",
       "milestones: definition and agreement of content"},
      {"AMD020", "Missing mandatory content item", kE, "project",
       "structure model: content items of the three artefact types"},
      {"AMD022", "Content in a disabled content item", kW, "project",
       "tailoring: disabled content items"},
      {"AMD030", "Actor without realisation", kE, "Actor",
       "realisation: actors realise user groups or external systems"},
      {"AMD031", "Data object without realisation", kW, "DataObject",
       "realisation: data objects realise selected business objects"},
      {"AMD032", "Action without realisation", kW, "SystemAction",
       "realisation: actions realise selected process steps"},
      {"AMD033", "System function without realisation", kE, "SystemFunction",
       "realisation: system functions realise user-visible functions"},
      {"AMD034", "Data element without realisation", kE, "DataElement",
       "realisation: data elements realise data objects"},
      {"AMD035", "State realising something other than a mode", kE, "State",
       "realisation: states realise modes"},
      {"AMD036", "External system interface without realisation", kE,
       "SystemInterface",
       "realisation: system interfaces realise external interfaces"},
      {"AMD037", "State without realisation", kW, "State",
       "realisation: states realise modes"},
      {"AMD040", "Quality requirement without assessment", kE,
       "QualityRequirement",
       "quality requirements are assessed by a metric or normative reference"},
      {"AMD041", "Quality requirement not derived from a system goal", kW,
       "QualityRequirement",
       "quality refinement: goals, generic scenarios, quality requirements"},
      {"AMD050", "Usage goal not related to a business goal", kE, "UsageGoal",
       "goal model: usage goals relate to business goals"},
      {"AMD051", "System goal not related to a usage goal", kE, "SystemGoal",
       "goal model: system goals relate to usage goals"},
      {"AMD052", "Goal hierarchy cycle", kE, "context.ObjectivesAndGoals",
       "goal model: goals form a hierarchy"},
      {"AMD053", "System goal demands no quality attribute", kW, "SystemGoal",
       "goal model: system goals demand quality attributes"},
      {"AMD060", "Use case without functional scenario", kE, "UseCase",
       "usage model: every use case has a functional scenario"},
      {"AMD061", "Functional scenario without triggering event", kW,
       "FunctionalScenario", "usage model: scenarios are triggered by events"},
      {"AMD070", "Requirements risk without risk factor", kE,
       "RequirementsRisk", "risk list: every risk is caused by a risk factor"},
      {"AMD071", "Component decomposition cycle", kE, "Component",
       "component model: hierarchical decomposition"},
      {"AMD072", "State transition with missing state", kE, "StateTransition",
       "behaviour model: transitions between states"},
      {"AMD080", "Relation not permitted by the content model", kE, "project",
       "content model: typed relations between concepts"},
      {"AMD081", "Domain-specific content under another domain profile", kE,
       "RequirementsSpecification",
       "domain stereotype: service model for business information systems"},
      {"AMD082", "Unknown attribute", kW, "project", "plumbing"},
      {"AMD083", "Attribute value of the wrong type", kE, "project",
       "plumbing"},
      {"AMD084", "Relation multiplicity exceeded", kE, "project",
       "content model: relation multiplicities"},
      {"AMD085", "Core content item disabled without justification", kE,
       "project", "tailoring: static tailoring at project level"},
      {"AMD086", "Conflicting domain profiles", kE, "project",
       "tailoring: organisational and project level"},
      {"AMD087", "Unknown situation factor", kE, "project",
       "tailoring: situation-aware creation of content items"},
      {"AMD088", "Situation forces a disabled content item", kE, "project",
       "tailoring: situation-aware creation of content items"},
      {"AMD089", "Malformed configuration line", kE, "project", "plumbing"},
      {"AMD090", "Unknown manifest key", kW, "project", "plumbing"},
      {"AMD091", "Title uses a term missing from the glossary", kI,
       "context.Glossary", "glossary contains all important terms"},
  };
  rules.back().enabled_by_default = false;
  std::sort(rules.begin(), rules.end(),
            [](const Rule& a, const Rule& b) { return a.code < b.code; });
  return rules;
}

namespace {

const std::vector<std::string> kGoalKinds = {"BusinessGoal", "UsageGoal",
                                             "SystemGoal"};

std::string Describe(const ModelElement& element) {
  return StrCat(element.kind, " '", element.name, "'");
}

// Iterative Tarjan SCC. Returns the strongly connected components that
// contain a cycle (size > 1, or a self-loop).
std::vector<std::vector<uint32_t>> CyclicComponents(
    const std::vector<std::vector<uint32_t>>& adjacency) {
  const uint32_t n = static_cast<uint32_t>(adjacency.size());
  constexpr uint32_t kUnvisited = UINT32_MAX;
  std::vector<uint32_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<uint32_t> stack;
  std::vector<std::vector<uint32_t>> cyclic;
  uint32_t counter = 0;
  struct Frame {
    uint32_t node;
    size_t next;
  };
  for (uint32_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    std::vector<Frame> frames = {{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& frame = frames.back();
      const uint32_t v = frame.node;
      if (frame.next < adjacency[v].size()) {
        const uint32_t w = adjacency[v][frame.next++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::vector<uint32_t> component;
        uint32_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          component.push_back(w);
        } while (w != v);
        const bool self_loop =
            std::find(adjacency[v].begin(), adjacency[v].end(), v) !=
            adjacency[v].end();
        if (component.size() > 1 || self_loop) {
          std::sort(component.begin(), component.end());
          cyclic.push_back(std::move(component));
        }
      }
      frames.pop_back();
      if (!frames.empty()) {
        const uint32_t parent = frames.back().node;
        low[parent] = std::min(low[parent], low[v]);
      }
    }
  }
  return cyclic;
}

bool IsAcronym(std::string_view word) {
  int upper = 0;
  for (char c : word) {
    if (std::isupper(static_cast<unsigned char>(c))) {
      ++upper;
    } else if (!std::isdigit(static_cast<unsigned char>(c))) {
      return false;
    }
  }
  return upper >= 2;
}

class RuleEngine {
 public:
  RuleEngine(const ModelGraph& graph, const Catalog& catalog,
             const ProjectConfig& config)
      : graph_(graph), catalog_(catalog), config_(config) {}

  std::vector<Diagnostic> Run() {
    CheckContentItems();
    for (const ModelElement& element : graph_.elements()) {
      if (!Active(element)) continue;
      CheckAttributes(element);
      CheckMultiplicities(element);
      CheckElement(element);
    }
    CheckEdges();
    CheckCycles(kGoalKinds, Relation::kRefines, "AMD052", "goal hierarchy");
    CheckCycles({"Component"}, Relation::kComposes, "AMD071",
                "component decomposition");
    if (GlossaryCheckEnabled()) CheckGlossary();
    ApplySeverityOverrides(config_, diagnostics_);
    SortDiagnostics(diagnostics_);
    return std::move(diagnostics_);
  }

 private:
  bool Active(const ModelElement& element) const {
    return config_.IsEnabled(element.home_item);
  }

  bool GlossaryCheckEnabled() const {
    auto it = config_.severity_overrides.find("AMD091");
    return it != config_.severity_overrides.end() && it->second.has_value();
  }

  void Report(std::string code, Severity severity, std::string message,
              const Span& span, std::optional<ItemId> item,
              std::vector<RelatedNote> related = {}) {
    diagnostics_.push_back(Diagnostic{std::move(code), severity,
                                      std::move(message), span,
                                      std::move(related), item});
  }

  void ReportOn(const ModelElement& element, std::string code,
                Severity severity, std::string message,
                std::vector<RelatedNote> related = {}) {
    Report(std::move(code), severity, std::move(message), element.span,
           element.home_item, std::move(related));
  }

  bool HasTarget(const ModelElement& element, Relation relation,
                 const std::vector<std::string>& kinds) const {
    return !graph_.Targets(element.id, relation, kinds).empty();
  }

  // AMD020, AMD022, AMD081.
  void CheckContentItems() {
    for (ArtefactType type : kAllArtefactTypes) {
      const std::optional<ArtefactFile>& file = graph_.File(type);
      if (!file.has_value()) continue;
      const std::vector<ItemId>& enabled = config_.enabled_items[Index(type)];
      for (ItemId id : enabled) {
        const ContentItemDef& item = catalog_.item(id);
        if (!item.mandatory) continue;
        const ItemBlock* block = file->FindBlock(id);
        if (block != nullptr && !block->elements.empty()) continue;
        Report("AMD020", Severity::kError,
               StrCat("mandatory content item ", item.display_name,
                            block == nullptr ? " is missing from the "
                                             : " is empty in the ",
                            catalog_.artefact(type).display_name),
               block != nullptr ? block->span : file->header_span, id);
      }
      const std::vector<ItemId> compatible =
          catalog_.ContentItemsFor(type, config_.domain_profile);
      for (const ItemBlock& block : file->blocks) {
        if (block.elements.empty() || config_.IsEnabled(block.item)) continue;
        const ContentItemDef& item = catalog_.item(block.item);
        if (std::find(compatible.begin(), compatible.end(), block.item) ==
            compatible.end()) {
          Report("AMD081", Severity::kError,
                 StrCat(item.display_name, " content is present but the ",
                              "content item does not apply to the '",
                              DomainProfileName(config_.domain_profile),
                              "' domain profile"),
                 block.span, std::nullopt);
        } else {
          Report("AMD022", Severity::kWarning,
                 StrCat(item.display_name,
                              " content is present but the content item is "
                              "disabled by tailoring; it is not validated"),
                 block.span, std::nullopt);
        }
      }
    }
  }

  // AMD082, AMD083.
  void CheckAttributes(const ModelElement& element) {
    const ConceptDef* def = catalog_.FindConcept(element.kind);
    for (const auto& [name, value] : element.attributes) {
      const AttributeDef* attribute = def->FindAttribute(name);
      if (attribute == nullptr) {
        std::vector<std::string> known;
        for (const AttributeDef& candidate : def->attributes) {
          known.push_back(candidate.name);
        }
        Report("AMD082", Severity::kWarning,
               StrCat("unknown attribute '", name, "' on ",
                            Describe(element), "; known attributes: ",
                            StrJoin(known, ", ")),
               value.span, element.home_item);
        continue;
      }
      bool ok = false;
      switch (attribute->type) {
        case AttributeType::kText:
          ok = value.kind == ValueKind::kString;
          break;
        case AttributeType::kInteger:
          ok = value.kind == ValueKind::kInteger;
          break;
        case AttributeType::kBoolean:
          ok = value.kind == ValueKind::kName &&
               (value.text == "true" || value.text == "false");
          break;
        case AttributeType::kReference:
          ok = value.kind == ValueKind::kName;
          break;
      }
      if (!ok) {
        Report("AMD083", Severity::kError,
               StrCat("attribute '", name, "' of ", Describe(element),
                            " expects a ", AttributeTypeName(attribute->type),
                            " value"),
               value.span, element.home_item);
      }
    }
  }

  // AMD084.
  void CheckMultiplicities(const ModelElement& element) {
    for (Relation relation : kAllRelations) {
      for (const RelationRule* rule : catalog_.RulesFor(element.kind, relation)) {
        if (rule->multiplicity != Multiplicity::kExactlyOne &&
            rule->multiplicity != Multiplicity::kAtMostOne) {
          continue;
        }
        const size_t count =
            graph_.Targets(element.id, relation, rule->target_kinds).size();
        if (count > 1) {
          ReportOn(element, "AMD084", Severity::kError,
                   StrCat(Describe(element), " has ", count, " ",
                                RelationKeyword(relation), " relations to ",
                                StrJoin(rule->target_kinds, "/"),
                                "; at most one is allowed"));
        }
      }
    }
  }

  void CheckElement(const ModelElement& element) {
    const std::string& kind = element.kind;
    if (kind == "Actor") {
      if (!HasTarget(element, Relation::kRealises,
                     {"UserGroup", "ExternalSystem"})) {
        ReportOn(element, "AMD030", Severity::kError,
                 StrCat(Describe(element),
                              " does not realise a UserGroup or "
                              "ExternalSystem"));
      }
    } else if (kind == "DataObject") {
      if (!HasTarget(element, Relation::kRealises, {"BusinessObject"})) {
        ReportOn(element, "AMD031", Severity::kWarning,
                 StrCat(Describe(element),
                              " does not realise a BusinessObject"));
      }
    } else if (kind == "SystemAction" || kind == "ActorAction") {
      if (!HasTarget(element, Relation::kRealises, {"ProcessStep"})) {
        ReportOn(element, "AMD032", Severity::kWarning,
                 StrCat(Describe(element),
                              " does not realise a ProcessStep"));
      }
    } else if (kind == "SystemFunction") {
      if (!HasTarget(element, Relation::kRealises,
                     {"SystemAction", "UserVisibleFunction"})) {
        ReportOn(element, "AMD033", Severity::kError,
                 StrCat(Describe(element),
                              " does not realise a SystemAction or "
                              "UserVisibleFunction"));
      }
    } else if (kind == "DataElement") {
      if (!HasTarget(element, Relation::kRealises, {"DataObject"})) {
        ReportOn(element, "AMD034", Severity::kError,
                 StrCat(Describe(element),
                              " does not realise a DataObject"));
      }
    } else if (kind == "State") {
      CheckState(element);
    } else if (kind == "SystemInterface") {
      auto external = element.attributes.find("external");
      if (external != element.attributes.end() &&
          external->second.text == "true" &&
          !HasTarget(element, Relation::kRealises, {"Interface"})) {
        ReportOn(element, "AMD036", Severity::kError,
                 StrCat("external ", Describe(element),
                              " does not realise an Interface"));
      }
    } else if (kind == "QualityRequirement") {
      CheckQualityRequirement(element);
    } else if (kind == "UsageGoal") {
      if (!HasTarget(element, Relation::kRelatedTo, {"BusinessGoal"})) {
        ReportOn(element, "AMD050", Severity::kError,
                 StrCat(Describe(element),
                              " is not related to a BusinessGoal"));
      }
    } else if (kind == "SystemGoal") {
      if (!HasTarget(element, Relation::kRelatedTo, {"UsageGoal"})) {
        ReportOn(element, "AMD051", Severity::kError,
                 StrCat(Describe(element),
                              " is not related to a UsageGoal"));
      }
      if (!HasTarget(element, Relation::kDemandsQualityAttribute,
                     {"QualityAttribute"})) {
        ReportOn(element, "AMD053", Severity::kWarning,
                 StrCat(Describe(element),
                              " demands no QualityAttribute"));
      }
    } else if (kind == "UseCase") {
      const bool nested = std::any_of(
          element.children.begin(), element.children.end(), [&](ElementId id) {
            return graph_.element(id).kind == "FunctionalScenario";
          });
      if (!nested &&
          !HasTarget(element, Relation::kComposes, {"FunctionalScenario"})) {
        ReportOn(element, "AMD060", Severity::kError,
                 StrCat(Describe(element),
                              " has no FunctionalScenario"));
      }
    } else if (kind == "FunctionalScenario") {
      if (graph_.Sources(element.id, Relation::kTriggers, {"Event"}).empty()) {
        ReportOn(element, "AMD061", Severity::kWarning,
                 StrCat(Describe(element),
                              " is not triggered by any Event"));
      }
    } else if (kind == "RequirementsRisk") {
      if (!HasTarget(element, Relation::kCausedBy, {"RiskFactor"})) {
        ReportOn(element, "AMD070", Severity::kError,
                 StrCat(Describe(element),
                              " is not caused by a RiskFactor"));
      }
    } else if (kind == "StateTransition") {
      CheckTransition(element);
    }
  }

  void CheckState(const ModelElement& element) {
    bool realises_mode = false;
    for (size_t index : graph_.OutgoingEdges(element.id)) {
      const ModelEdge& edge = graph_.edges()[index];
      if (edge.relation != Relation::kRealises) continue;
      const ModelElement& target = graph_.element(edge.target);
      if (target.kind == "Mode") {
        realises_mode = true;
        continue;
      }
      Report("AMD035", Severity::kError,
             StrCat(Describe(element), " realises ", Describe(target),
                          "; states may only realise a Mode"),
             edge.span, element.home_item);
    }
    if (!realises_mode) {
      ReportOn(element, "AMD037", Severity::kWarning,
               StrCat(Describe(element), " does not realise a Mode"));
    }
  }

  void CheckQualityRequirement(const ModelElement& element) {
    if (!HasTarget(element, Relation::kAssessedBy,
                   {"Metric", "NormativeReference"})) {
      ReportOn(element, "AMD040", Severity::kError,
               StrCat(Describe(element),
                            " is not assessed by a Metric or "
                            "NormativeReference"));
    }
    bool derived = false;
    for (ElementId scenario :
         graph_.Sources(element.id, Relation::kSatisfies, {"GenericScenario"})) {
      if (HasTarget(graph_.element(scenario), Relation::kRelatedTo,
                    {"SystemGoal"})) {
        derived = true;
        break;
      }
    }
    if (!derived) {
      ReportOn(element, "AMD041", Severity::kWarning,
               StrCat(Describe(element),
                            " is not satisfied by a GenericScenario related "
                            "to a SystemGoal"));
    }
  }

  void CheckTransition(const ModelElement& element) {
    for (const char* end : {"from", "to"}) {
      auto it = element.attributes.find(end);
      if (it == element.attributes.end()) {
        ReportOn(element, "AMD072", Severity::kError,
                 StrCat(Describe(element), " has no '", end, "' state"));
        continue;
      }
      ResolveResult resolved = Resolve(graph_, it->second.text);
      if (!resolved.ok() || graph_.element(*resolved.id).kind != "State") {
        Report("AMD072", Severity::kError,
               StrCat(Describe(element), " refers to '", it->second.text,
                            "' as its '", end, "' state, but no such State "
                            "exists"),
               it->second.span, element.home_item);
      }
    }
  }

  // AMD080.
  void CheckEdges() {
    for (const ModelEdge& edge : graph_.edges()) {
      const ModelElement& source = graph_.element(edge.source);
      if (!Active(source)) continue;
      const ModelElement& target = graph_.element(edge.target);
      if (edge.relation == Relation::kRealises && source.kind == "State") {
        continue;  // AMD035
      }
      absl::StatusOr<RelationVerdict> verdict =
          catalog_.CheckRelationAllowed(source.kind, edge.relation, target.kind);
      if (verdict.ok() && verdict->allowed) continue;
      std::vector<std::string> allowed =
          catalog_.AllowedTargets(source.kind, edge.relation);
      std::string expected =
          allowed.empty()
              ? StrCat("no ", RelationKeyword(edge.relation),
                             " relation is defined for ", source.kind)
              : StrCat("expected one of: ", StrJoin(allowed, ", "));
      Report("AMD080", Severity::kError,
             StrCat(Describe(source), " cannot ",
                          RelationKeyword(edge.relation), " ", Describe(target),
                          "; ", expected),
             edge.span, source.home_item);
    }
  }

  // Cycle detection over `relation` edges and containment among `kinds`. A
  // nested element counts as pointing at its parent.
  void CheckCycles(const std::vector<std::string>& kinds, Relation relation,
                   const char* code, const char* what) {
    std::vector<uint32_t> nodes;
    std::unordered_map<uint32_t, uint32_t> local;
    for (const ModelElement& element : graph_.elements()) {
      if (std::find(kinds.begin(), kinds.end(), element.kind) == kinds.end()) {
        continue;
      }
      local.emplace(element.id.value, static_cast<uint32_t>(nodes.size()));
      nodes.push_back(element.id.value);
    }
    std::vector<std::vector<uint32_t>> adjacency(nodes.size());
    for (uint32_t i = 0; i < nodes.size(); ++i) {
      const ModelElement& element = graph_.element(ElementId{nodes[i]});
      for (ElementId target : graph_.Targets(element.id, relation, kinds)) {
        adjacency[i].push_back(local.at(target.value));
      }
      // Nesting is an implicit edge: the child refines its parent, and a
      // parent composes its children.
      if (element.parent.has_value()) {
        auto parent = local.find(element.parent->value);
        if (parent == local.end()) continue;
        if (relation == Relation::kComposes) {
          adjacency[parent->second].push_back(i);
        } else {
          adjacency[i].push_back(parent->second);
        }
      }
    }
    for (const std::vector<uint32_t>& component : CyclicComponents(adjacency)) {
      std::vector<const ModelElement*> members;
      for (uint32_t node : component) {
        members.push_back(&graph_.element(ElementId{nodes[node]}));
      }
      std::sort(members.begin(), members.end(),
                [](const ModelElement* a, const ModelElement* b) {
                  return std::tie(a->span.file, a->span.start_line,
                                  a->span.start_col) <
                         std::tie(b->span.file, b->span.start_line,
                                  b->span.start_col);
                });
      const ModelElement& anchor = *members.front();
      if (!Active(anchor)) continue;
      std::vector<std::string> names;
      std::vector<RelatedNote> related;
      for (const ModelElement* member : members) {
        names.push_back(member->name);
        if (member != &anchor) {
          related.push_back(RelatedNote{member->span, "part of the cycle"});
        }
      }
      ReportOn(anchor, code, Severity::kError,
               StrCat(what, " cycle: ", StrJoin(names, ", ")),
               std::move(related));
    }
  }

  // AMD091: acronyms in titles must be defined by a Term (name, abbreviation
  // or synonym, compared case-insensitively as whole words).
  void CheckGlossary() {
    std::unordered_set<std::string> known;
    for (ElementId id : graph_.ElementsOfKind("Term")) {
      const ModelElement& term = graph_.element(id);
      known.insert(ToLower(term.name));
      for (const char* attribute : {"abbreviation", "synonyms"}) {
        auto it = term.attributes.find(attribute);
        if (it == term.attributes.end()) continue;
        for (std::string_view part : Split(it->second.text, ',')) {
          known.insert(ToLower(StripWhitespace(part)));
        }
      }
    }
    for (const ModelElement& element : graph_.elements()) {
      if (!Active(element) || !element.title.has_value()) continue;
      std::set<std::string> reported;
      for (std::string_view word :
           SplitAny(*element.title, " \t,.;:!?()[]\"'/")) {
        if (!IsAcronym(word)) continue;
        const std::string lowered = ToLower(word);
        if (known.contains(lowered) || !reported.insert(lowered).second) continue;
        ReportOn(element, "AMD091", Severity::kInfo,
                 StrCat("title of ", Describe(element), " uses '", word,
                              "', which is not defined in the glossary"));
      }
    }
  }

  const ModelGraph& graph_;
  const Catalog& catalog_;
  const ProjectConfig& config_;
  std::vector<Diagnostic> diagnostics_;
};

}  // namespace

std::vector<Diagnostic> Validate(const ModelGraph& graph, const Catalog& catalog,
                                 const ProjectConfig& config) {
  return RuleEngine(graph, catalog, config).Run();
}

}  // namespace amdire
