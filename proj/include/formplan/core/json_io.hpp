// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "formplan/common/result.hpp"
#include "formplan/core/types.hpp"

namespace formplan::core {

struct DecodeError {
  std::string detail;
};

// Canonical on-disk JSON. Field names for IRVariable follow the wire format
// exactly: name, SMT_variable, number_of_variables, data_source, value,
// specific_requirement. `how_to_pick` is accepted as an alias of `value` and
// preserved on re-encode.

json encode(const ProblemInput& input);
Result<ProblemInput, DecodeError> decode_problem_input(const json& j);

json encode(const ProblemDefinition& def);
Result<ProblemDefinition, DecodeError> decode_problem_definition(const json& j);

json encode(const IRVariable& var);
Result<IRVariable, DecodeError> decode_ir_variable(const json& j);

json encode(const FormulationIR& ir);
Result<FormulationIR, DecodeError> decode_formulation(const json& j);

json encode(const AssessmentReport& report);
Result<AssessmentReport, DecodeError> decode_assessment(const json& j);

/// PlanResult carries a schema version tag. `include_timings=false` zeroes
/// wall-clock durations; used by determinism checks.
json encode(const PlanResult& result, bool include_timings = true);
Result<PlanResult, DecodeError> decode_plan_result(const json& j);

/// Structural equality that ignores object key order (ordered_json compares
/// insertion order, which is wrong for externally produced documents).
bool semantic_equal(const json& a, const json& b);

} // namespace formplan::core
