// SPDX-License-Identifier: Apache-2.0
#include "formplan/core/types.hpp"

namespace formplan::core {

bool Background::has_name(const std::string& name) const {
  for (const auto& [n, _] : tables)
    if (n == name) return true;
  for (const auto& api : apis)
    if (api.name == name) return true;
  return false;
}

const json* Background::table(const std::string& name) const {
  for (const auto& [n, value] : tables)
    if (n == name) return &value;
  return nullptr;
}

std::vector<std::string> Background::names() const {
  std::vector<std::string> out;
  for (const auto& [n, _] : tables) out.push_back(n);
  for (const auto& api : apis) out.push_back(api.name);
  return out;
}

std::vector<std::pair<std::string, const IRVariable*>> FormulationIR::all_vars() const {
  std::vector<std::pair<std::string, const IRVariable*>> out;
  for (const auto& section : sections)
    for (const auto& [id, var] : section.vars) out.emplace_back(id, &var);
  return out;
}

const IRSection* FormulationIR::section(const std::string& name) const {
  for (const auto& s : sections)
    if (s.name == name) return &s;
  return nullptr;
}

std::string issue_kind_name(IssueKind kind) {
  switch (kind) {
    case IssueKind::MissingSection: return "MissingSection";
    case IssueKind::MissingField: return "MissingField";
    case IssueKind::DuplicateId: return "DuplicateId";
    case IssueKind::UnresolvedReference: return "UnresolvedReference";
    case IssueKind::ForwardReference: return "ForwardReference";
    case IssueKind::CyclicDependency: return "CyclicDependency";
    case IssueKind::CardinalityMalformed: return "CardinalityMalformed";
    case IssueKind::CardinalityUnbound: return "CardinalityUnbound";
    case IssueKind::CardinalityNonPositive: return "CardinalityNonPositive";
    case IssueKind::EmptyFormulation: return "EmptyFormulation";
  }
  return "Unknown";
}

std::string format_issue(const ValidationIssue& issue) {
  std::string out = issue_kind_name(issue.kind);
  if (!issue.where.empty()) out += " at " + issue.where;
  if (!issue.detail.empty()) out += ": " + issue.detail;
  return out;
}

std::string plan_status_name(PlanStatus status) {
  switch (status) {
    case PlanStatus::plan: return "plan";
    case PlanStatus::infeasible: return "infeasible";
    case PlanStatus::runtime_error: return "runtime_error";
    case PlanStatus::budget_exhausted: return "budget_exhausted";
  }
  return "unknown";
}

} // namespace formplan::core
