// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "formplan/common/result.hpp"
#include "formplan/fpl/ast.hpp"
#include "formplan/fpl/diagnostics.hpp"

namespace formplan::fpl {

enum class TokKind {
  Ident,
  Keyword,
  Int,
  Decimal,
  LParen,
  RParen,
  LBracket,
  RBracket,
  LBrace,
  RBrace,
  Comma,
  Colon,
  Semi,
  Assign,   // =
  EqEq,     // ==
  NotEq,    // !=
  Le,
  Ge,
  Lt,
  Gt,
  Plus,
  Minus,
  Star,
  Slash,
  DotDot,
  Arrow,    // ->
  DArrow,   // <->
  String,   // quoted, for extern sources
  End,
};

struct Token {
  TokKind kind = TokKind::End;
  std::string text;
  long long int_val = 0;
  Rational rat_val;
  Pos pos;
};

bool is_reserved_word(std::string_view word);

/// Tokenizes the whole input. `//` starts a line comment. Errors carry the
/// offending position.
Result<std::vector<Token>, Diagnostic> lex(std::string_view src);

} // namespace formplan::fpl
