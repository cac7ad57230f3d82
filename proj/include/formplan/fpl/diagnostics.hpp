// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "formplan/fpl/ast.hpp"

namespace formplan::fpl {

struct Diagnostic {
  Pos pos;
  std::string message;

  /// "line:col: message" (caller prefixes the file name).
  std::string to_string() const {
    return std::to_string(pos.line) + ":" + std::to_string(pos.col) + ": " + message;
  }
};

std::string format_diagnostics(const std::vector<Diagnostic>& diags);

} // namespace formplan::fpl
