// SPDX-License-Identifier: Apache-2.0
#include "formplan/fpl/ast.hpp"

namespace formplan::fpl {

const char* sort_name(Sort sort) {
  switch (sort) {
    case Sort::Int: return "Int";
    case Sort::Real: return "Real";
    case Sort::Bool: return "Bool";
  }
  return "?";
}

namespace {

ExprPtr node(ExprKind kind, Pos pos) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->pos = pos;
  return e;
}

Expr* mut(const ExprPtr& p) { return const_cast<Expr*>(p.get()); }

} // namespace

ExprPtr make_int(long long value, Pos pos) {
  auto e = node(ExprKind::IntLit, pos);
  mut(e)->int_val = value;
  return e;
}

ExprPtr make_rat(Rational value, Pos pos) {
  auto e = node(ExprKind::RatLit, pos);
  mut(e)->rat_val = value;
  return e;
}

ExprPtr make_bool(bool value, Pos pos) {
  auto e = node(ExprKind::BoolLit, pos);
  mut(e)->bool_val = value;
  return e;
}

ExprPtr make_ident(std::string name, Pos pos) {
  auto e = node(ExprKind::Ident, pos);
  mut(e)->ident = std::move(name);
  return e;
}

ExprPtr make_indexed(std::string name, std::vector<ExprPtr> indices, Pos pos) {
  auto e = node(ExprKind::Indexed, pos);
  mut(e)->ident = std::move(name);
  mut(e)->args = std::move(indices);
  return e;
}

ExprPtr make_unary(UnOp op, ExprPtr inner, Pos pos) {
  auto e = node(ExprKind::Unary, pos);
  mut(e)->un_op = op;
  mut(e)->args = {std::move(inner)};
  return e;
}

ExprPtr make_binary(BinOp op, ExprPtr lhs, ExprPtr rhs, Pos pos) {
  auto e = node(ExprKind::Binary, pos);
  mut(e)->bin_op = op;
  mut(e)->args = {std::move(lhs), std::move(rhs)};
  return e;
}

ExprPtr make_sum(std::vector<Binder> binders, ExprPtr body, Pos pos) {
  auto e = node(ExprKind::Sum, pos);
  mut(e)->binders = std::move(binders);
  mut(e)->args = {std::move(body)};
  return e;
}

ExprPtr make_count(std::vector<Binder> binders, ExprPtr body, Pos pos) {
  auto e = node(ExprKind::Count, pos);
  mut(e)->binders = std::move(binders);
  mut(e)->args = {std::move(body)};
  return e;
}

ExprPtr make_ite(ExprPtr cond, ExprPtr then_e, ExprPtr else_e, Pos pos) {
  auto e = node(ExprKind::Ite, pos);
  mut(e)->args = {std::move(cond), std::move(then_e), std::move(else_e)};
  return e;
}

bool expr_equal(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case ExprKind::IntLit:
      if (a.int_val != b.int_val) return false;
      break;
    case ExprKind::RatLit:
      if (!(a.rat_val == b.rat_val)) return false;
      break;
    case ExprKind::BoolLit:
      if (a.bool_val != b.bool_val) return false;
      break;
    case ExprKind::Ident:
    case ExprKind::Indexed:
      if (a.ident != b.ident) return false;
      break;
    case ExprKind::Unary:
      if (a.un_op != b.un_op) return false;
      break;
    case ExprKind::Binary:
      if (a.bin_op != b.bin_op) return false;
      break;
    case ExprKind::Sum:
    case ExprKind::Count:
      if (!(a.binders == b.binders)) return false;
      break;
    case ExprKind::Ite:
      break;
  }
  if (a.args.size() != b.args.size()) return false;
  for (size_t i = 0; i < a.args.size(); ++i)
    if (!expr_equal(a.args[i], b.args[i])) return false;
  return true;
}

bool expr_equal(const ExprPtr& a, const ExprPtr& b) {
  if (!a || !b) return a == b;
  return expr_equal(*a, *b);
}

namespace {

bool range_mentions_horizon(const Range& range) {
  return range.lo.var == kHorizonSymbol || range.hi.var == kHorizonSymbol;
}

} // namespace

std::optional<std::string> FplProgram::horizon_marker() const {
  for (const auto& set : sets)
    if (!set.enumerated && range_mentions_horizon(set.range)) return set.name;
  return std::nullopt;
}

bool FplProgram::uses_horizon() const {
  if (horizon_marker()) return true;
  for (const auto& a : asserts)
    for (const auto& binder : a.binders)
      if (binder.range && range_mentions_horizon(*binder.range)) return true;
  return false;
}

} // namespace formplan::fpl
