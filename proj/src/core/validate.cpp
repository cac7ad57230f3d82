// SPDX-License-Identifier: Apache-2.0
#include "formplan/core/validate.hpp"

#include <map>
#include <set>

#include "formplan/common/util.hpp"
#include "formplan/core/cardinality.hpp"

namespace formplan::core {

std::string normalize_reference(const std::string& ref) {
  std::string out = util::trim(ref);
  if (auto paren = out.find('('); paren != std::string::npos) out = out.substr(0, paren);
  const std::string suffix = " variables";
  if (out.size() > suffix.size() && out.compare(out.size() - suffix.size(), suffix.size(), suffix) == 0)
    out = out.substr(0, out.size() - suffix.size());
  const std::string singular = " variable";
  if (out.size() > singular.size() &&
      out.compare(out.size() - singular.size(), singular.size(), singular) == 0)
    out = out.substr(0, out.size() - singular.size());
  return util::trim(out);
}

namespace {

constexpr std::array<const char*, 6> kRequiredFields = {
    "name", "SMT_variable", "number_of_variables", "data_source", "value", "specific_requirement"};

bool section_allows_descriptive(const std::string& section) {
  return section == "update" || section == "goal";
}

Bindings background_bindings(const ProblemInput& input) {
  Bindings bindings;
  for (const auto& [name, value] : input.background.tables)
    if (value.is_number()) bindings[name] = value.get<double>();
  // The horizon symbol is supplied externally for multi-step programs; keep
  // cardinalities mentioning it evaluable at validation time.
  bindings["T"] = 1.0;
  return bindings;
}

} // namespace

std::vector<ValidationIssue> validate_formulation(const FormulationIR& ir,
                                                  const ProblemInput& input) {
  std::vector<ValidationIssue> issues;

  if (ir.sections.empty() ||
      (ir.sections.size() == 1 && ir.sections.front().vars.empty())) {
    issues.push_back({IssueKind::EmptyFormulation, "", "no variables declared"});
    return issues;
  }

  if (ir.kind == FormulationKind::multi_step) {
    for (const char* name : kMultiStepSections)
      if (ir.section(name) == nullptr)
        issues.push_back({IssueKind::MissingSection, name, ""});
  }

  Bindings bindings = background_bindings(input);

  std::set<std::string> known;
  for (const auto& name : input.background.names()) known.insert(normalize_reference(name));
  known.insert("query");
  known.insert("task");

  std::set<std::string> declared;          // ids seen so far (ordering check)
  std::set<std::string> all_ids;           // every id (cycle check)
  for (const auto& [id, var] : ir.all_vars()) {
    (void)var;
    if (!all_ids.insert(id).second)
      issues.push_back({IssueKind::DuplicateId, id, ""});
  }

  std::map<std::string, std::vector<std::string>> deps; // id -> referenced ids

  for (const auto& section : ir.sections) {
    bool descriptive_ok = ir.kind == FormulationKind::multi_step &&
                          section_allows_descriptive(section.name);
    for (const auto& [id, var] : section.vars) {
      for (const char* field : kRequiredFields)
        if (!var.present_keys.count(field))
          issues.push_back({IssueKind::MissingField, id, field});

      if (!descriptive_ok) {
        if (!var.name)
          issues.push_back({IssueKind::MissingField, id, "name is null"});
        if (!var.number_of_variables) {
          issues.push_back({IssueKind::MissingField, id, "number_of_variables is null"});
        } else {
          auto n = evaluate_cardinality(*var.number_of_variables, bindings);
          if (!n.ok()) {
            switch (n.error().kind) {
              case CardinalityErrorKind::UnboundName:
                issues.push_back({IssueKind::CardinalityUnbound, id, n.error().detail});
                break;
              case CardinalityErrorKind::NonPositiveResult:
                issues.push_back({IssueKind::CardinalityNonPositive, id, n.error().detail});
                break;
              default:
                issues.push_back({IssueKind::CardinalityMalformed, id, n.error().detail});
                break;
            }
          }
        }
      } else if (var.number_of_variables && cardinality_parses(*var.number_of_variables)) {
        auto n = evaluate_cardinality(*var.number_of_variables, bindings);
        if (!n.ok() && n.error().kind == CardinalityErrorKind::NonPositiveResult)
          issues.push_back({IssueKind::CardinalityNonPositive, id, n.error().detail});
      }

      if (var.data_source) {
        for (const auto& raw : *var.data_source) {
          std::string ref = normalize_reference(raw);
          if (ref.empty()) continue;
          if (known.count(ref)) continue;
          if (declared.count(ref)) {
            deps[id].push_back(ref);
            continue;
          }
          if (all_ids.count(ref)) {
            issues.push_back({IssueKind::ForwardReference, id, ref});
            deps[id].push_back(ref);
          } else {
            issues.push_back({IssueKind::UnresolvedReference, id, ref});
          }
        }
      }
      declared.insert(id);
    }
  }

  // Cycle check over variable->variable edges (Kahn). Earlier-only references
  // cannot cycle, but forward references are recorded above and could.
  {
    std::map<std::string, int> indegree;
    std::map<std::string, std::vector<std::string>> out_edges;
    for (const auto& id : all_ids) indegree[id] = 0;
    for (const auto& [from, tos] : deps)
      for (const auto& to : tos) {
        out_edges[to].push_back(from);
        indegree[from] += 1;
      }
    std::vector<std::string> queue;
    for (const auto& [id, deg] : indegree)
      if (deg == 0) queue.push_back(id);
    size_t processed = 0;
    while (!queue.empty()) {
      std::string id = queue.back();
      queue.pop_back();
      ++processed;
      for (const auto& next : out_edges[id])
        if (--indegree[next] == 0) queue.push_back(next);
    }
    if (processed < all_ids.size())
      issues.push_back({IssueKind::CyclicDependency, "",
                        "dependency cycle among variable references"});
  }

  return issues;
}

} // namespace formplan::core
