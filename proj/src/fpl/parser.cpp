// SPDX-License-Identifier: Apache-2.0
#include "formplan/fpl/parser.hpp"

#include <optional>

#include "formplan/fpl/lexer.hpp"

namespace formplan::fpl {

namespace {

constexpr int kMaxDepth = 400;

struct Parser {
  const std::vector<Token>& toks;
  size_t i = 0;
  std::optional<Diagnostic> error;
  int depth = 0;

  struct DepthGuard {
    Parser& p;
    explicit DepthGuard(Parser& parser) : p(parser) {
      if (++p.depth > kMaxDepth) p.fail_here("expression nesting too deep");
    }
    ~DepthGuard() { --p.depth; }
  };

  const Token& cur() const { return toks[i]; }
  const Token& next() const { return toks[i + 1 < toks.size() ? i + 1 : toks.size() - 1]; }

  void fail(Pos pos, std::string message) {
    if (!error) error = Diagnostic{pos, std::move(message)};
  }
  void fail_here(std::string message) { fail(cur().pos, std::move(message)); }

  bool at(TokKind kind) const { return cur().kind == kind; }
  bool at_keyword(std::string_view word) const {
    return cur().kind == TokKind::Keyword && cur().text == word;
  }

  bool eat(TokKind kind) {
    if (at(kind)) {
      ++i;
      return true;
    }
    return false;
  }

  bool expect(TokKind kind, const char* what) {
    if (eat(kind)) return true;
    fail_here(std::string("expected ") + what + ", found '" + cur().text + "'");
    return false;
  }

  bool eat_keyword(std::string_view word) {
    if (at_keyword(word)) {
      ++i;
      return true;
    }
    return false;
  }

  std::string ident(const char* what) {
    if (at(TokKind::Ident)) {
      if (is_reserved_word(cur().text)) {
        fail_here("reserved word '" + cur().text + "' used as " + what);
        return {};
      }
      std::string name = cur().text;
      ++i;
      return name;
    }
    if (at(TokKind::Keyword)) {
      fail_here("reserved word '" + cur().text + "' used as " + what);
      return {};
    }
    fail_here(std::string("expected ") + what + ", found '" + cur().text + "'");
    return {};
  }

  std::optional<Sort> sort() {
    if (at(TokKind::Keyword)) {
      if (cur().text == "Int") { ++i; return Sort::Int; }
      if (cur().text == "Real") { ++i; return Sort::Real; }
      if (cur().text == "Bool") { ++i; return Sort::Bool; }
    }
    fail_here("expected sort (Int, Real, or Bool)");
    return std::nullopt;
  }

  // ---- range / binder -------------------------------------------------

  std::optional<RangeEnd> range_end() {
    RangeEnd end;
    bool neg = eat(TokKind::Minus);
    if (at(TokKind::Int)) {
      end.offset = neg ? -cur().int_val : cur().int_val;
      ++i;
    } else if (at(TokKind::Ident) && !neg) {
      end.var = cur().text;
      ++i;
      if (eat(TokKind::Plus)) {
        if (!at(TokKind::Int)) { fail_here("expected integer after '+'"); return std::nullopt; }
        end.offset = cur().int_val;
        ++i;
      } else if (eat(TokKind::Minus)) {
        if (!at(TokKind::Int)) { fail_here("expected integer after '-'"); return std::nullopt; }
        end.offset = -cur().int_val;
        ++i;
      }
    } else {
      fail_here("expected range endpoint");
      return std::nullopt;
    }
    return end;
  }

  std::optional<Range> range_after_lo(RangeEnd lo) {
    if (!expect(TokKind::DotDot, "'..'")) return std::nullopt;
    auto hi = range_end();
    if (!hi) return std::nullopt;
    return Range{lo, *hi};
  }

  std::optional<Binder> binder() {
    Binder b;
    b.pos = cur().pos;
    b.var = ident("binder variable");
    if (error) return std::nullopt;
    if (!eat_keyword("in")) {
      fail_here("expected 'in'");
      return std::nullopt;
    }
    // Either a set name, or an integer range. An identifier followed by
    // '..' or '+'/'-' starts a range (e.g. `T-1..T`).
    if (at(TokKind::Ident) && next().kind != TokKind::DotDot && next().kind != TokKind::Plus &&
        next().kind != TokKind::Minus) {
      b.set_name = cur().text;
      ++i;
      return b;
    }
    auto lo = range_end();
    if (!lo) return std::nullopt;
    auto r = range_after_lo(*lo);
    if (!r) return std::nullopt;
    b.range = *r;
    return b;
  }

  std::vector<Binder> binder_list() {
    std::vector<Binder> out;
    do {
      auto b = binder();
      if (!b) return out;
      out.push_back(std::move(*b));
    } while (eat(TokKind::Comma));
    return out;
  }

  // ---- expressions -----------------------------------------------------
  //
  // implies := or ( ('->'|'<->') implies )?
  // or      := and ( 'or' and )*
  // and     := not ( 'and' not )*
  // not     := 'not' not | cmp
  // cmp     := add ( cmpop add )?
  // add     := mul ( ('+'|'-') mul )*
  // mul     := unary ( ('*'|'/') unary )*
  // unary   := '-' unary | postfix
  // postfix := primary ( '[' expr {',' expr} ']' )?
  // primary := INT | DECIMAL | 'true' | 'false' | IDENT | '(' expr ')'
  //          | ('sum'|'count') '(' binders ')' mul | 'ite' '(' e ',' e ',' e ')'

  ExprPtr expr() {
    DepthGuard guard(*this);
    if (error) return make_int(0, cur().pos);
    return implies_expr();
  }

  ExprPtr implies_expr() {
    ExprPtr lhs = or_expr();
    if (error) return lhs;
    Pos pos = cur().pos;
    if (eat(TokKind::Arrow)) return make_binary(BinOp::Implies, lhs, implies_expr(), pos);
    if (eat(TokKind::DArrow)) return make_binary(BinOp::Iff, lhs, implies_expr(), pos);
    return lhs;
  }

  ExprPtr or_expr() {
    ExprPtr lhs = and_expr();
    while (!error && at_keyword("or")) {
      Pos pos = cur().pos;
      ++i;
      lhs = make_binary(BinOp::Or, lhs, and_expr(), pos);
    }
    return lhs;
  }

  ExprPtr and_expr() {
    ExprPtr lhs = not_expr();
    while (!error && at_keyword("and")) {
      Pos pos = cur().pos;
      ++i;
      lhs = make_binary(BinOp::And, lhs, not_expr(), pos);
    }
    return lhs;
  }

  ExprPtr not_expr() {
    DepthGuard guard(*this);
    if (error) return make_int(0, cur().pos);
    if (at_keyword("not")) {
      Pos pos = cur().pos;
      ++i;
      return make_unary(UnOp::Not, not_expr(), pos);
    }
    return cmp_expr();
  }

  ExprPtr cmp_expr() {
    ExprPtr lhs = add_expr();
    if (error) return lhs;
    Pos pos = cur().pos;
    BinOp op;
    switch (cur().kind) {
      case TokKind::Lt: op = BinOp::Lt; break;
      case TokKind::Le: op = BinOp::Le; break;
      case TokKind::Gt: op = BinOp::Gt; break;
      case TokKind::Ge: op = BinOp::Ge; break;
      case TokKind::EqEq: op = BinOp::Eq; break;
      case TokKind::NotEq: op = BinOp::Ne; break;
      default: return lhs;
    }
    ++i;
    return make_binary(op, lhs, add_expr(), pos);
  }

  ExprPtr add_expr() {
    ExprPtr lhs = mul_expr();
    while (!error) {
      Pos pos = cur().pos;
      if (eat(TokKind::Plus))
        lhs = make_binary(BinOp::Add, lhs, mul_expr(), pos);
      else if (eat(TokKind::Minus))
        lhs = make_binary(BinOp::Sub, lhs, mul_expr(), pos);
      else
        break;
    }
    return lhs;
  }

  ExprPtr mul_expr() {
    ExprPtr lhs = unary_expr();
    while (!error) {
      Pos pos = cur().pos;
      if (eat(TokKind::Star))
        lhs = make_binary(BinOp::Mul, lhs, unary_expr(), pos);
      else if (eat(TokKind::Slash))
        lhs = make_binary(BinOp::Div, lhs, unary_expr(), pos);
      else
        break;
    }
    return lhs;
  }

  ExprPtr unary_expr() {
    DepthGuard guard(*this);
    if (error) return make_int(0, cur().pos);
    if (at(TokKind::Minus)) {
      Pos pos = cur().pos;
      ++i;
      return make_unary(UnOp::Neg, unary_expr(), pos);
    }
    return postfix_expr();
  }

  ExprPtr postfix_expr() {
    ExprPtr base = primary_expr();
    if (error || !base) return base;
    if (at(TokKind::LBracket)) {
      if (base->kind != ExprKind::Ident) {
        fail_here("only identifiers can be indexed");
        return base;
      }
      Pos pos = cur().pos;
      ++i;
      std::vector<ExprPtr> indices;
      do {
        indices.push_back(expr());
        if (error) return base;
      } while (eat(TokKind::Comma));
      if (!expect(TokKind::RBracket, "']'")) return base;
      return make_indexed(base->ident, std::move(indices), pos);
    }
    return base;
  }

  ExprPtr primary_expr() {
    Pos pos = cur().pos;
    if (at(TokKind::Int)) {
      long long v = cur().int_val;
      ++i;
      return make_int(v, pos);
    }
    if (at(TokKind::Decimal)) {
      Rational r = cur().rat_val;
      ++i;
      // Integral decimals (e.g. 2.0) normalize to integer literals so the
      // printed form reparses to the same node.
      if (r.is_integer()) return make_int(r.num, pos);
      return make_rat(r, pos);
    }
    if (at_keyword("true")) { ++i; return make_bool(true, pos); }
    if (at_keyword("false")) { ++i; return make_bool(false, pos); }
    if (at_keyword("sum") || at_keyword("count")) {
      bool is_sum = cur().text == "sum";
      ++i;
      if (!expect(TokKind::LParen, "'('")) return make_int(0, pos);
      auto binders = binder_list();
      if (error) return make_int(0, pos);
      if (!expect(TokKind::RParen, "')'")) return make_int(0, pos);
      ExprPtr body = mul_expr(); // binds tightly; parenthesize comparisons
      if (error) return make_int(0, pos);
      return is_sum ? make_sum(std::move(binders), body, pos)
                    : make_count(std::move(binders), body, pos);
    }
    if (at_keyword("ite")) {
      ++i;
      if (!expect(TokKind::LParen, "'('")) return make_int(0, pos);
      ExprPtr c = expr();
      if (!expect(TokKind::Comma, "','")) return make_int(0, pos);
      ExprPtr a = expr();
      if (!expect(TokKind::Comma, "','")) return make_int(0, pos);
      ExprPtr b = expr();
      if (!expect(TokKind::RParen, "')'")) return make_int(0, pos);
      return make_ite(c, a, b, pos);
    }
    if (at(TokKind::LParen)) {
      ++i;
      ExprPtr inner = expr();
      expect(TokKind::RParen, "')'");
      return inner;
    }
    if (at(TokKind::Ident)) {
      if (is_reserved_word(cur().text)) {
        fail_here("reserved word '" + cur().text + "' used as identifier");
        return make_int(0, pos);
      }
      std::string name = cur().text;
      ++i;
      return make_ident(std::move(name), pos);
    }
    fail_here("expected expression, found '" + cur().text + "'");
    return make_int(0, pos);
  }

  // ---- declarations ----------------------------------------------------

  void set_decl(FplProgram& prog) {
    Pos pos = cur().pos;
    ++i; // 'set'
    SetDecl decl;
    decl.pos = pos;
    decl.name = ident("set name");
    if (error) return;
    if (!expect(TokKind::Assign, "'='")) return;
    if (eat(TokKind::LBrace)) {
      decl.enumerated = true;
      if (!at(TokKind::RBrace)) {
        do {
          decl.elements.push_back(ident("set element"));
          if (error) return;
        } while (eat(TokKind::Comma));
      }
      if (!expect(TokKind::RBrace, "'}'")) return;
    } else {
      decl.enumerated = false;
      auto lo = range_end();
      if (!lo) return;
      auto r = range_after_lo(*lo);
      if (!r) return;
      decl.range = *r;
    }
    expect(TokKind::Semi, "';'");
    prog.sets.push_back(std::move(decl));
  }

  std::vector<std::string> index_signature() {
    std::vector<std::string> sig;
    if (eat(TokKind::LBracket)) {
      do {
        sig.push_back(ident("index set name"));
        if (error) return sig;
      } while (eat(TokKind::Comma));
      expect(TokKind::RBracket, "']'");
    }
    return sig;
  }

  std::optional<Rational> literal_value() {
    bool neg = eat(TokKind::Minus);
    if (at(TokKind::Int)) {
      Rational r = Rational::of(neg ? -cur().int_val : cur().int_val);
      ++i;
      return r;
    }
    if (at(TokKind::Decimal)) {
      Rational r = cur().rat_val;
      if (neg) r.num = -r.num;
      ++i;
      return r;
    }
    fail_here("expected numeric literal");
    return std::nullopt;
  }

  void param_decl(FplProgram& prog) {
    Pos pos = cur().pos;
    ++i; // 'param'
    ParamDecl decl;
    decl.pos = pos;
    decl.name = ident("parameter name");
    if (error) return;
    decl.index_sets = index_signature();
    if (error) return;
    if (!expect(TokKind::Colon, "':'")) return;
    auto s = sort();
    if (!s) return;
    decl.sort = *s;
    if (!expect(TokKind::Assign, "'='")) return;
    if (at(TokKind::Ident) && cur().text == "extern") {
      ++i;
      decl.kind = ParamKind::Extern;
      if (at(TokKind::String)) {
        decl.extern_source = cur().text;
        ++i;
      }
    } else if (eat(TokKind::LBrace)) {
      decl.kind = ParamKind::Table;
      if (!at(TokKind::RBrace)) {
        do {
          ParamEntry entry;
          if (eat(TokKind::LParen)) {
            do {
              if (at(TokKind::Int)) {
                entry.key.push_back(std::to_string(cur().int_val));
                ++i;
              } else {
                entry.key.push_back(ident("table key"));
                if (error) return;
              }
            } while (eat(TokKind::Comma));
            if (!expect(TokKind::RParen, "')'")) return;
          } else if (at(TokKind::Int)) {
            entry.key.push_back(std::to_string(cur().int_val));
            ++i;
          } else {
            entry.key.push_back(ident("table key"));
            if (error) return;
          }
          if (!expect(TokKind::Colon, "':'")) return;
          auto v = literal_value();
          if (!v) return;
          entry.value = *v;
          decl.entries.push_back(std::move(entry));
        } while (eat(TokKind::Comma));
      }
      if (!expect(TokKind::RBrace, "'}'")) return;
    } else {
      decl.kind = ParamKind::Scalar;
      auto v = literal_value();
      if (!v) return;
      decl.scalar = *v;
    }
    expect(TokKind::Semi, "';'");
    prog.params.push_back(std::move(decl));
  }

  void var_decl(FplProgram& prog) {
    Pos pos = cur().pos;
    ++i; // 'var'
    VarDecl decl;
    decl.pos = pos;
    decl.name = ident("variable name");
    if (error) return;
    decl.index_sets = index_signature();
    if (error) return;
    if (!expect(TokKind::Colon, "':'")) return;
    auto s = sort();
    if (!s) return;
    decl.sort = *s;
    expect(TokKind::Semi, "';'");
    prog.decls.push_back(std::move(decl));
  }

  void assert_decl(FplProgram& prog) {
    Pos pos = cur().pos;
    ++i; // 'assert'
    AssertDecl decl;
    decl.pos = pos;
    if (eat_keyword("forall")) {
      decl.binders = binder_list();
      if (error) return;
      if (!expect(TokKind::Colon, "':'")) return;
    }
    decl.body = expr();
    if (error) return;
    expect(TokKind::Semi, "';'");
    prog.asserts.push_back(std::move(decl));
  }

  void objective_decl(FplProgram& prog) {
    Pos pos = cur().pos;
    bool minimize = cur().text == "minimize";
    ++i;
    if (prog.objective) {
      fail(pos, "a program may declare at most one objective");
      return;
    }
    Objective obj;
    obj.pos = pos;
    obj.minimize = minimize;
    obj.term = expr();
    if (error) return;
    expect(TokKind::Semi, "';'");
    prog.objective = std::move(obj);
  }

  Result<FplProgram, Diagnostic> program() {
    using R = Result<FplProgram, Diagnostic>;
    FplProgram prog;
    if (at(TokKind::End)) return R::err({cur().pos, "empty program"});
    while (!at(TokKind::End)) {
      if (at_keyword("set"))
        set_decl(prog);
      else if (at_keyword("param"))
        param_decl(prog);
      else if (at_keyword("var"))
        var_decl(prog);
      else if (at_keyword("assert"))
        assert_decl(prog);
      else if (at_keyword("minimize") || at_keyword("maximize"))
        objective_decl(prog);
      else
        fail_here("expected declaration, found '" + cur().text + "'");
      if (error) return R::err(*error);
    }
    return R::ok(std::move(prog));
  }
};

} // namespace

Result<FplProgram, Diagnostic> parse(std::string_view src) {
  using R = Result<FplProgram, Diagnostic>;
  auto toks = lex(src);
  if (!toks.ok()) return R::err(toks.error());
  Parser p{toks.value(), 0, std::nullopt, 0};
  return p.program();
}

} // namespace formplan::fpl
