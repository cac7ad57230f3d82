// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

namespace formplan::core {

/// Insertion-ordered JSON keeps wire output in authoring order
/// (variable_1, variable_2, ... as exhibited).
using json = nlohmann::ordered_json;

/// A callable listed in the problem background ("Variable or API" section).
struct ApiEntry {
  std::string name;
  int arity = 0;
  std::string doc;

  bool operator==(const ApiEntry&) const = default;
};

/// Named data tables plus API signatures available to the planner.
struct Background {
  std::vector<std::pair<std::string, json>> tables; // insertion-ordered
  std::vector<ApiEntry> apis;

  bool has_name(const std::string& name) const;
  const json* table(const std::string& name) const;
  std::vector<std::string> names() const;

  bool operator==(const Background&) const = default;
};

struct ProblemInput {
  std::string task_description;
  Background background;
  std::string query;
  std::optional<std::string> domain_id;

  bool operator==(const ProblemInput&) const = default;
};

/// Output of the define stage: the optimization problem in prose.
struct ProblemDefinition {
  std::string goal;
  std::vector<std::string> decision_variables;
  std::string constraint_reasoning;
  std::vector<std::string> constraints;

  bool operator==(const ProblemDefinition&) const = default;
};

/// One entry of the six-field per-variable representation. All fields are
/// optional at this layer because multi-step update/goal entries legitimately
/// carry nulls; validation decides what a given section requires.
struct IRVariable {
  std::optional<std::string> name;
  std::optional<bool> smt_variable;
  /// Raw cardinality text: "10", "math.ceil(20 * 1.09)", or a free-form
  /// description in update/goal entries.
  std::optional<std::string> number_of_variables;
  std::optional<std::vector<std::string>> data_source;
  std::optional<std::string> value;
  std::optional<std::string> specific_requirement;

  /// True when the source JSON spelled the value field as `how_to_pick`.
  bool value_as_how_to_pick = false;
  /// JSON keys present in the source object (for exactly-six-fields checks).
  std::set<std::string> present_keys;

  bool operator==(const IRVariable&) const = default;
};

enum class FormulationKind { single_step, multi_step };

/// The five multi-step sections, in their fixed order.
inline constexpr std::array<const char*, 5> kMultiStepSections = {
    "objects", "predicates", "actions", "update", "goal"};

struct IRSection {
  std::string name;
  std::vector<std::pair<std::string, IRVariable>> vars; // ordered by id

  bool operator==(const IRSection&) const = default;
};

struct FormulationIR {
  FormulationKind kind = FormulationKind::single_step;
  /// single_step: one unnamed section; multi_step: the five named sections.
  std::vector<IRSection> sections;

  /// All (id, variable) pairs in section order.
  std::vector<std::pair<std::string, const IRVariable*>> all_vars() const;
  const IRSection* section(const std::string& name) const;

  bool operator==(const FormulationIR&) const = default;
};

enum class IssueKind {
  MissingSection,
  MissingField,
  DuplicateId,
  UnresolvedReference,
  ForwardReference,
  CyclicDependency,
  CardinalityMalformed,
  CardinalityUnbound,
  CardinalityNonPositive,
  EmptyFormulation,
};

struct ValidationIssue {
  IssueKind kind;
  std::string where;   // variable id or section name
  std::string detail;

  bool operator==(const ValidationIssue&) const = default;
};

std::string issue_kind_name(IssueKind kind);
std::string format_issue(const ValidationIssue& issue);

enum class PlanStatus { plan, infeasible, runtime_error, budget_exhausted };

std::string plan_status_name(PlanStatus status);

struct StageTraceEntry {
  std::string stage;
  int attempt = 1;
  double duration_s = 0.0;
  long prompt_tokens = 0;
  long completion_tokens = 0;
  std::string note;

  bool operator==(const StageTraceEntry&) const = default;
};

/// Which pipeline step an assessment modification replaces.
enum class AssessedStep { definition = 0, formulation = 1, encoding = 2 };

struct Modification {
  AssessedStep step = AssessedStep::definition;
  std::string artifact_text;

  bool operator==(const Modification&) const = default;
};

struct AssessmentReport {
  std::array<int, 3> step_ratings = {1, 1, 1}; // definition, formulation, encoding
  std::array<std::string, 3> reasoning;
  std::optional<Modification> modification;

  bool all_correct() const { return step_ratings[0] == 1 && step_ratings[1] == 1 && step_ratings[2] == 1; }
  bool operator==(const AssessmentReport&) const = default;
};

struct PlanResult {
  PlanStatus status = PlanStatus::runtime_error;
  std::optional<json> plan;
  std::optional<double> objective_value;
  std::optional<int> horizon;
  std::vector<StageTraceEntry> stage_trace;
  std::vector<AssessmentReport> assessments;

  bool operator==(const PlanResult&) const = default;
};

} // namespace formplan::core
