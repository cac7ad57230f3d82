// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string_view>

#include "formplan/common/result.hpp"
#include "formplan/fpl/ast.hpp"
#include "formplan/fpl/diagnostics.hpp"

namespace formplan::fpl {

/// Parses FPL source into an AST. Total: any input yields either a program
/// or a positioned diagnostic; never throws on malformed text.
Result<FplProgram, Diagnostic> parse(std::string_view src);

} // namespace formplan::fpl
