// SPDX-License-Identifier: Apache-2.0
#include "formplan/fpl/lexer.hpp"

#include <array>
#include <cctype>

namespace formplan::fpl {

namespace {

constexpr std::array<const char*, 19> kReserved = {
    "set", "param", "var", "assert", "forall", "in", "minimize", "maximize",
    "sum", "count", "ite", "and", "or", "not", "true", "false",
    "Int", "Real", "Bool"};

} // namespace

bool is_reserved_word(std::string_view word) {
  for (const char* r : kReserved)
    if (word == r) return true;
  return word == "extern";
}

Result<std::vector<Token>, Diagnostic> lex(std::string_view src) {
  using R = Result<std::vector<Token>, Diagnostic>;
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  size_t i = 0;
  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n; ++k) {
      if (i < src.size() && src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  auto push = [&](TokKind kind, std::string text, Pos pos) {
    Token t;
    t.kind = kind;
    t.text = std::move(text);
    t.pos = pos;
    out.push_back(std::move(t));
  };

  while (i < src.size()) {
    char c = src[i];
    Pos pos{line, col};
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '/' && i + 1 < src.size() && src[i + 1] == '/') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = i;
      while (i < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_'))
        advance(1);
      std::string word(src.substr(start, i - start));
      // `extern` stays an Ident so param parsing can treat it contextually;
      // is_reserved_word still rejects it as a user identifier.
      TokKind kind =
          is_reserved_word(word) && word != "extern" ? TokKind::Keyword : TokKind::Ident;
      push(kind, std::move(word), pos);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = i;
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) advance(1);
      bool decimal = false;
      if (i < src.size() && src[i] == '.' && i + 1 < src.size() && src[i + 1] != '.') {
        decimal = true;
        advance(1);
        if (i >= src.size() || !std::isdigit(static_cast<unsigned char>(src[i])))
          return R::err({pos, "malformed decimal literal"});
        while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) advance(1);
      }
      std::string text(src.substr(start, i - start));
      Token t;
      t.pos = pos;
      t.text = text;
      if (decimal) {
        t.kind = TokKind::Decimal;
        auto dot = text.find('.');
        std::string ip = text.substr(0, dot);
        std::string fp = text.substr(dot + 1);
        if (fp.size() > 12) return R::err({pos, "decimal literal has too many fraction digits"});
        long long den = 1;
        for (size_t k = 0; k < fp.size(); ++k) den *= 10;
        long long num = 0;
        for (char d : ip + fp) {
          if (num > 922337203685477580LL) return R::err({pos, "numeric literal overflows"});
          num = num * 10 + (d - '0');
        }
        t.rat_val = Rational::of(num, den);
      } else {
        t.kind = TokKind::Int;
        long long v = 0;
        for (char d : text) {
          if (v > 922337203685477580LL) return R::err({pos, "numeric literal overflows"});
          v = v * 10 + (d - '0');
        }
        t.int_val = v;
      }
      out.push_back(std::move(t));
      continue;
    }
    if (c == '"') {
      advance(1);
      size_t start = i;
      while (i < src.size() && src[i] != '"' && src[i] != '\n') advance(1);
      if (i >= src.size() || src[i] != '"') return R::err({pos, "unterminated string"});
      std::string text(src.substr(start, i - start));
      advance(1);
      push(TokKind::String, std::move(text), pos);
      continue;
    }
    auto two = [&](char a, char b) {
      return c == a && i + 1 < src.size() && src[i + 1] == b;
    };
    if (two('=', '=')) { push(TokKind::EqEq, "==", pos); advance(2); continue; }
    if (two('!', '=')) { push(TokKind::NotEq, "!=", pos); advance(2); continue; }
    if (two('<', '=')) { push(TokKind::Le, "<=", pos); advance(2); continue; }
    if (two('>', '=')) { push(TokKind::Ge, ">=", pos); advance(2); continue; }
    if (two('-', '>')) { push(TokKind::Arrow, "->", pos); advance(2); continue; }
    if (c == '<' && i + 2 < src.size() && src[i + 1] == '-' && src[i + 2] == '>') {
      push(TokKind::DArrow, "<->", pos);
      advance(3);
      continue;
    }
    if (two('.', '.')) { push(TokKind::DotDot, "..", pos); advance(2); continue; }
    switch (c) {
      case '(': push(TokKind::LParen, "(", pos); advance(1); continue;
      case ')': push(TokKind::RParen, ")", pos); advance(1); continue;
      case '[': push(TokKind::LBracket, "[", pos); advance(1); continue;
      case ']': push(TokKind::RBracket, "]", pos); advance(1); continue;
      case '{': push(TokKind::LBrace, "{", pos); advance(1); continue;
      case '}': push(TokKind::RBrace, "}", pos); advance(1); continue;
      case ',': push(TokKind::Comma, ",", pos); advance(1); continue;
      case ':': push(TokKind::Colon, ":", pos); advance(1); continue;
      case ';': push(TokKind::Semi, ";", pos); advance(1); continue;
      case '=': push(TokKind::Assign, "=", pos); advance(1); continue;
      case '<': push(TokKind::Lt, "<", pos); advance(1); continue;
      case '>': push(TokKind::Gt, ">", pos); advance(1); continue;
      case '+': push(TokKind::Plus, "+", pos); advance(1); continue;
      case '-': push(TokKind::Minus, "-", pos); advance(1); continue;
      case '*': push(TokKind::Star, "*", pos); advance(1); continue;
      case '/': push(TokKind::Slash, "/", pos); advance(1); continue;
      default:
        return R::err({pos, std::string("unexpected character '") + c + "'"});
    }
  }
  Token end;
  end.kind = TokKind::End;
  end.pos = {line, col};
  out.push_back(end);
  return R::ok(std::move(out));
}

} // namespace formplan::fpl
