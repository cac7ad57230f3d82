// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "formplan/core/types.hpp"

namespace formplan::core {

/// Checks a formulation against its shape invariants and the problem input:
/// six fields per variable, all five sections for multi-step, unique ids,
/// resolvable data_source references (background names, "query"/"task", or
/// earlier variable ids), acyclic dependencies, and cardinality expressions
/// that evaluate to positive integers. Pure; issues are returned, not thrown.
std::vector<ValidationIssue> validate_formulation(const FormulationIR& ir,
                                                  const ProblemInput& input);

/// Reference normalization used when resolving data_source entries:
/// strips call parentheses and a trailing "variables" word.
std::string normalize_reference(const std::string& ref);

} // namespace formplan::core
