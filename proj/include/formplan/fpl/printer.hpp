// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include "formplan/fpl/ast.hpp"

namespace formplan::fpl {

/// Canonical source form; parse(print(p)) is structurally equal to p.
std::string print(const FplProgram& prog);
std::string print_expr(const Expr& e);

} // namespace formplan::fpl
