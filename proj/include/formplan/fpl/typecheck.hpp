// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <map>
#include <string>
#include <vector>

#include "formplan/common/result.hpp"
#include "formplan/core/types.hpp"
#include "formplan/fpl/ast.hpp"
#include "formplan/fpl/diagnostics.hpp"

namespace formplan::fpl {

struct SymInfo {
  enum class Kind { Set, Param, Var, Element };
  Kind kind = Kind::Var;
  Sort sort = Sort::Int;
  std::vector<std::string> index_sets; // param / var signature
  // Set payload:
  bool enumerated = false;
  std::vector<std::string> elements;
  Range range;
  // Element payload:
  std::string element_of;
};

/// Sorted-symbol environment produced by a successful typecheck.
struct SortEnv {
  std::map<std::string, SymInfo> symbols;
  /// True when the program references the horizon symbol T anywhere.
  bool multi_step = false;
  /// The distinguished time set, when one is declared.
  std::string horizon_set;

  const SymInfo* find(const std::string& name) const {
    auto it = symbols.find(name);
    return it == symbols.end() ? nullptr : &it->second;
  }
};

/// Checks declarations and sorts every expression. When `background` is
/// given, extern parameters must name a background table. All problems are
/// reported, not just the first.
Result<SortEnv, std::vector<Diagnostic>> typecheck(const FplProgram& prog,
                                                   const core::Background* background = nullptr);

} // namespace formplan::fpl
