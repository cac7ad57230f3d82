// SPDX-License-Identifier: Apache-2.0
#include "formplan/core/cardinality.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <optional>

namespace formplan::core {
namespace {

// Recursive-descent evaluator over exact doubles. The grammar is closed:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := NUMBER | NAME | ('ceil'|'floor'|'math.ceil'|'math.floor') '(' expr ')'
//           | '(' expr ')' | '-' factor
struct Parser {
  std::string_view src;
  size_t pos = 0;
  const Bindings* bindings;
  std::optional<CardinalityError> error;

  void fail(CardinalityErrorKind kind, std::string detail) {
    if (!error) error = CardinalityError{kind, std::move(detail)};
  }

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }

  bool eat(char c) {
    skip_ws();
    if (pos < src.size() && src[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos < src.size() && src[pos] == c;
  }

  std::string ident() {
    skip_ws();
    size_t start = pos;
    while (pos < src.size() &&
           (std::isalnum(static_cast<unsigned char>(src[pos])) || src[pos] == '_' || src[pos] == '.'))
      ++pos;
    return std::string(src.substr(start, pos - start));
  }

  double factor() {
    skip_ws();
    if (error) return 0;
    if (pos >= src.size()) {
      fail(CardinalityErrorKind::Malformed, "unexpected end of expression");
      return 0;
    }
    char c = src[pos];
    if (c == '-') {
      ++pos;
      return -factor();
    }
    if (c == '(') {
      ++pos;
      double v = expr();
      if (!eat(')')) fail(CardinalityErrorKind::Malformed, "missing ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      size_t start = pos;
      while (pos < src.size() &&
             (std::isdigit(static_cast<unsigned char>(src[pos])) || src[pos] == '.'))
        ++pos;
      return std::strtod(std::string(src.substr(start, pos - start)).c_str(), nullptr);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name = ident();
      if (name == "ceil" || name == "floor" || name == "math.ceil" || name == "math.floor") {
        bool is_ceil = name == "ceil" || name == "math.ceil";
        if (!eat('(')) {
          fail(CardinalityErrorKind::Malformed, name + " requires parentheses");
          return 0;
        }
        double v = expr();
        if (!eat(')')) fail(CardinalityErrorKind::Malformed, "missing ')'");
        return is_ceil ? std::ceil(v) : std::floor(v);
      }
      if (bindings) {
        auto it = bindings->find(name);
        if (it != bindings->end()) return it->second;
      }
      fail(CardinalityErrorKind::UnboundName, name);
      return 0;
    }
    fail(CardinalityErrorKind::Malformed, std::string("unexpected character '") + c + "'");
    return 0;
  }

  double term() {
    double v = factor();
    while (!error) {
      skip_ws();
      if (peek_is('*')) {
        ++pos;
        v *= factor();
      } else if (peek_is('/')) {
        ++pos;
        double d = factor();
        if (d == 0) {
          fail(CardinalityErrorKind::Malformed, "division by zero");
          return 0;
        }
        v /= d;
      } else {
        break;
      }
    }
    return v;
  }

  double expr() {
    double v = term();
    while (!error) {
      skip_ws();
      if (peek_is('+')) {
        ++pos;
        v += term();
      } else if (peek_is('-')) {
        ++pos;
        v -= term();
      } else {
        break;
      }
    }
    return v;
  }
};

} // namespace

Result<int64_t, CardinalityError> evaluate_cardinality(const std::string& expr,
                                                       const Bindings& bindings) {
  using R = Result<int64_t, CardinalityError>;
  Parser p{expr, 0, &bindings, std::nullopt};
  double v = p.expr();
  p.skip_ws();
  if (!p.error && p.pos != p.src.size())
    p.fail(CardinalityErrorKind::Malformed, "trailing input at offset " + std::to_string(p.pos));
  if (p.error) return R::err(*p.error);
  if (!std::isfinite(v) || std::fabs(v) > 9.0e15)
    return R::err({CardinalityErrorKind::Overflow, expr});
  double rounded = std::nearbyint(v);
  if (std::fabs(v - rounded) > 1e-9)
    return R::err({CardinalityErrorKind::NonIntegerResult,
                   "evaluates to non-integer " + std::to_string(v)});
  auto n = static_cast<int64_t>(rounded);
  if (n <= 0) return R::err({CardinalityErrorKind::NonPositiveResult, std::to_string(n)});
  return R::ok(n);
}

bool cardinality_parses(const std::string& expr) {
  Parser p{expr, 0, nullptr, std::nullopt};
  (void)p.expr(); // names report UnboundName, not Malformed, with no bindings
  p.skip_ws();
  if (p.pos != p.src.size()) return false;
  return !p.error || p.error->kind == CardinalityErrorKind::UnboundName;
}

} // namespace formplan::core
