// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "formplan/common/result.hpp"

namespace formplan::core {

enum class CardinalityErrorKind {
  Malformed,
  UnboundName,
  NonPositiveResult,
  NonIntegerResult,
  Overflow,
};

struct CardinalityError {
  CardinalityErrorKind kind;
  std::string detail;
};

using Bindings = std::map<std::string, double>;

/// Evaluates a cardinality expression: integer literals and ceil/floor
/// arithmetic over bound names (+, -, *, /). `math.ceil` / `math.floor`
/// spellings are accepted. The result must be a positive integer.
Result<int64_t, CardinalityError> evaluate_cardinality(const std::string& expr,
                                                       const Bindings& bindings);

/// Parse-only check (no evaluation), used to distinguish arithmetic
/// cardinalities from descriptive text in multi-step update entries.
bool cardinality_parses(const std::string& expr);

} // namespace formplan::core
