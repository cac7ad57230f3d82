// SPDX-License-Identifier: Apache-2.0
#include "formplan/fpl/printer.hpp"

#include <sstream>

namespace formplan::fpl {

namespace {

// Precedence levels; higher binds tighter.
constexpr int kImplies = 0;
constexpr int kOr = 1;
constexpr int kAnd = 2;
constexpr int kNot = 3;
constexpr int kCmp = 4;
constexpr int kAdd = 5;
constexpr int kMul = 6;
constexpr int kNeg = 7;
constexpr int kAtom = 8;

int level_of(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Binary:
      switch (e.bin_op) {
        case BinOp::Implies:
        case BinOp::Iff: return kImplies;
        case BinOp::Or: return kOr;
        case BinOp::And: return kAnd;
        case BinOp::Lt:
        case BinOp::Le:
        case BinOp::Gt:
        case BinOp::Ge:
        case BinOp::Eq:
        case BinOp::Ne: return kCmp;
        case BinOp::Add:
        case BinOp::Sub: return kAdd;
        case BinOp::Mul:
        case BinOp::Div: return kMul;
      }
      return kAtom;
    case ExprKind::Unary: return e.un_op == UnOp::Not ? kNot : kNeg;
    case ExprKind::Sum:
    case ExprKind::Count: return kNeg; // aggregate binds like a unary prefix
    default: return kAtom;
  }
}

const char* op_text(BinOp op) {
  switch (op) {
    case BinOp::Add: return "+";
    case BinOp::Sub: return "-";
    case BinOp::Mul: return "*";
    case BinOp::Div: return "/";
    case BinOp::Lt: return "<";
    case BinOp::Le: return "<=";
    case BinOp::Gt: return ">";
    case BinOp::Ge: return ">=";
    case BinOp::Eq: return "==";
    case BinOp::Ne: return "!=";
    case BinOp::And: return "and";
    case BinOp::Or: return "or";
    case BinOp::Implies: return "->";
    case BinOp::Iff: return "<->";
  }
  return "?";
}

std::string rational_text(const Rational& r) {
  if (r.is_integer()) return std::to_string(r.num);
  // Exact decimal whenever den = 2^a * 5^b (the only denominators literals
  // can produce); scale to a power of ten. Anything else falls back to a
  // division of literals.
  long long den = r.den;
  int twos = 0, fives = 0;
  while (den % 2 == 0) { den /= 2; ++twos; }
  while (den % 5 == 0) { den /= 5; ++fives; }
  if (den == 1) {
    int digits = twos > fives ? twos : fives;
    long long scale = 1;
    for (int k = 0; k < digits; ++k) scale *= 10;
    long long scaled = r.num * (scale / r.den); // exact: r.den divides scale
    long long mag = scaled < 0 ? -scaled : scaled;
    std::string whole = std::to_string(mag / scale);
    std::string frac = std::to_string(mag % scale);
    while (static_cast<int>(frac.size()) < digits) frac.insert(frac.begin(), '0');
    return std::string(r.num < 0 ? "-" : "") + whole + "." + frac;
  }
  return std::to_string(r.num) + " / " + std::to_string(r.den);
}

std::string range_end_text(const RangeEnd& end) {
  if (end.var.empty()) return std::to_string(end.offset);
  if (end.offset == 0) return end.var;
  if (end.offset > 0) return end.var + "+" + std::to_string(end.offset);
  return end.var + "-" + std::to_string(-end.offset);
}

std::string range_text(const Range& range) {
  return range_end_text(range.lo) + ".." + range_end_text(range.hi);
}

std::string binder_text(const Binder& b) {
  return b.var + " in " + (b.set_name ? *b.set_name : range_text(*b.range));
}

std::string binders_text(const std::vector<Binder>& binders) {
  std::string out;
  for (size_t i = 0; i < binders.size(); ++i) {
    if (i) out += ", ";
    out += binder_text(binders[i]);
  }
  return out;
}

void print_into(const Expr& e, int min_level, std::string& out);

std::string printed(const Expr& e, int min_level) {
  std::string out;
  print_into(e, min_level, out);
  return out;
}

void print_into(const Expr& e, int min_level, std::string& out) {
  int level = level_of(e);
  bool parens = level < min_level;
  if (parens) out += "(";
  switch (e.kind) {
    case ExprKind::IntLit:
      out += std::to_string(e.int_val);
      break;
    case ExprKind::RatLit:
      out += rational_text(e.rat_val);
      break;
    case ExprKind::BoolLit:
      out += e.bool_val ? "true" : "false";
      break;
    case ExprKind::Ident:
      out += e.ident;
      break;
    case ExprKind::Indexed: {
      out += e.ident;
      out += "[";
      for (size_t i = 0; i < e.args.size(); ++i) {
        if (i) out += ", ";
        print_into(*e.args[i], 0, out);
      }
      out += "]";
      break;
    }
    case ExprKind::Unary:
      if (e.un_op == UnOp::Not) {
        out += "not ";
        print_into(*e.args[0], kNot, out);
      } else {
        out += "-";
        print_into(*e.args[0], kNeg, out);
      }
      break;
    case ExprKind::Binary: {
      bool right_assoc = e.bin_op == BinOp::Implies || e.bin_op == BinOp::Iff;
      bool non_assoc = level == kCmp;
      int lhs_min = right_assoc ? level + 1 : level;
      int rhs_min = (right_assoc) ? level : level + 1;
      if (non_assoc) {
        lhs_min = level + 1;
        rhs_min = level + 1;
      }
      print_into(*e.args[0], lhs_min, out);
      out += " ";
      out += op_text(e.bin_op);
      out += " ";
      print_into(*e.args[1], rhs_min, out);
      break;
    }
    case ExprKind::Sum:
    case ExprKind::Count:
      out += e.kind == ExprKind::Sum ? "sum(" : "count(";
      out += binders_text(e.binders);
      out += ") ";
      print_into(*e.args[0], kMul, out);
      break;
    case ExprKind::Ite:
      out += "ite(";
      print_into(*e.args[0], 0, out);
      out += ", ";
      print_into(*e.args[1], 0, out);
      out += ", ";
      print_into(*e.args[2], 0, out);
      out += ")";
      break;
  }
  if (parens) out += ")";
}

std::string key_text(const std::vector<std::string>& key) {
  if (key.size() == 1) return key[0];
  std::string out = "(";
  for (size_t i = 0; i < key.size(); ++i) {
    if (i) out += ", ";
    out += key[i];
  }
  out += ")";
  return out;
}

std::string signature_text(const std::vector<std::string>& sig) {
  if (sig.empty()) return "";
  std::string out = "[";
  for (size_t i = 0; i < sig.size(); ++i) {
    if (i) out += ", ";
    out += sig[i];
  }
  out += "]";
  return out;
}

} // namespace

std::string print_expr(const Expr& e) { return printed(e, 0); }

std::string print(const FplProgram& prog) {
  std::ostringstream out;
  for (const auto& set : prog.sets) {
    out << "set " << set.name << " = ";
    if (set.enumerated) {
      out << "{";
      for (size_t i = 0; i < set.elements.size(); ++i) {
        if (i) out << ", ";
        out << set.elements[i];
      }
      out << "}";
    } else {
      out << range_text(set.range);
    }
    out << ";\n";
  }
  for (const auto& param : prog.params) {
    out << "param " << param.name << signature_text(param.index_sets) << ": "
        << sort_name(param.sort) << " = ";
    switch (param.kind) {
      case ParamKind::Scalar:
        out << rational_text(param.scalar);
        break;
      case ParamKind::Extern:
        out << "extern";
        if (param.extern_source) out << " \"" << *param.extern_source << "\"";
        break;
      case ParamKind::Table: {
        out << "{";
        for (size_t i = 0; i < param.entries.size(); ++i) {
          if (i) out << ", ";
          out << key_text(param.entries[i].key) << ": " << rational_text(param.entries[i].value);
        }
        out << "}";
        break;
      }
    }
    out << ";\n";
  }
  for (const auto& decl : prog.decls) {
    out << "var " << decl.name << signature_text(decl.index_sets) << ": " << sort_name(decl.sort)
        << ";\n";
  }
  for (const auto& a : prog.asserts) {
    out << "assert ";
    if (!a.binders.empty()) out << "forall " << binders_text(a.binders) << ": ";
    out << printed(*a.body, 0) << ";\n";
  }
  if (prog.objective) {
    out << (prog.objective->minimize ? "minimize " : "maximize ")
        << printed(*prog.objective->term, 0) << ";\n";
  }
  return out.str();
}

} // namespace formplan::fpl
