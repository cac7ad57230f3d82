// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace formplan::fpl {

struct Pos {
  int line = 0;
  int col = 0;

  bool valid() const { return line > 0; }
};

/// Exact rational constant (normalized, den > 0).
struct Rational {
  long long num = 0;
  long long den = 1;

  static Rational of(long long n, long long d = 1) {
    Rational r{n, d};
    r.normalize();
    return r;
  }
  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }
  bool is_integer() const { return den == 1; }
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
};

enum class Sort { Int, Real, Bool };

const char* sort_name(Sort sort);

enum class BinOp { Add, Sub, Mul, Div, Lt, Le, Gt, Ge, Eq, Ne, And, Or, Implies, Iff };
enum class UnOp { Neg, Not };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

/// Quantifier/aggregate binder: `x in SetName` or `t in 0..T-1`.
struct RangeEnd {
  std::string var;       // "" for a pure constant; otherwise an identifier (commonly T)
  long long offset = 0;

  bool operator==(const RangeEnd&) const = default;
};

struct Range {
  RangeEnd lo, hi;

  bool operator==(const Range&) const = default;
};

struct Binder {
  std::string var;
  std::optional<std::string> set_name; // exactly one of set_name / range
  std::optional<Range> range;
  Pos pos;

  bool operator==(const Binder& o) const {
    return var == o.var && set_name == o.set_name && range == o.range;
  }
};

enum class ExprKind { IntLit, RatLit, BoolLit, Ident, Indexed, Unary, Binary, Sum, Count, Ite };

struct Expr {
  ExprKind kind = ExprKind::IntLit;
  Pos pos;

  long long int_val = 0;        // IntLit
  Rational rat_val;             // RatLit
  bool bool_val = false;        // BoolLit
  std::string ident;            // Ident / Indexed head
  BinOp bin_op = BinOp::Add;    // Binary
  UnOp un_op = UnOp::Neg;       // Unary
  std::vector<ExprPtr> args;    // operands / index args / ite(c,a,b) / aggregate body
  std::vector<Binder> binders;  // Sum / Count
};

bool expr_equal(const Expr& a, const Expr& b);
bool expr_equal(const ExprPtr& a, const ExprPtr& b);

ExprPtr make_int(long long value, Pos pos = {});
ExprPtr make_rat(Rational value, Pos pos = {});
ExprPtr make_bool(bool value, Pos pos = {});
ExprPtr make_ident(std::string name, Pos pos = {});
ExprPtr make_indexed(std::string name, std::vector<ExprPtr> indices, Pos pos = {});
ExprPtr make_unary(UnOp op, ExprPtr inner, Pos pos = {});
ExprPtr make_binary(BinOp op, ExprPtr lhs, ExprPtr rhs, Pos pos = {});
ExprPtr make_sum(std::vector<Binder> binders, ExprPtr body, Pos pos = {});
ExprPtr make_count(std::vector<Binder> binders, ExprPtr body, Pos pos = {});
ExprPtr make_ite(ExprPtr cond, ExprPtr then_e, ExprPtr else_e, Pos pos = {});

struct SetDecl {
  std::string name;
  bool enumerated = true;
  std::vector<std::string> elements; // enumerated
  Range range;                       // integer range otherwise
  Pos pos;

  bool operator==(const SetDecl& o) const {
    return name == o.name && enumerated == o.enumerated && elements == o.elements &&
           (enumerated || range == o.range);
  }
};

enum class ParamKind { Scalar, Table, Extern };

struct ParamEntry {
  std::vector<std::string> key; // one component per index set; ints spelled in decimal
  Rational value;

  bool operator==(const ParamEntry&) const = default;
};

struct ParamDecl {
  std::string name;
  std::vector<std::string> index_sets;
  Sort sort = Sort::Int;
  ParamKind kind = ParamKind::Scalar;
  Rational scalar;
  std::vector<ParamEntry> entries;
  std::optional<std::string> extern_source; // defaults to the param name
  Pos pos;

  bool operator==(const ParamDecl& o) const {
    if (name != o.name || index_sets != o.index_sets || sort != o.sort || kind != o.kind)
      return false;
    switch (kind) {
      case ParamKind::Scalar: return scalar == o.scalar;
      case ParamKind::Table: return entries == o.entries;
      case ParamKind::Extern: return extern_source == o.extern_source;
    }
    return true;
  }
};

struct VarDecl {
  std::string name;
  std::vector<std::string> index_sets;
  Sort sort = Sort::Int;
  Pos pos;

  bool operator==(const VarDecl& o) const {
    return name == o.name && index_sets == o.index_sets && sort == o.sort;
  }
};

struct AssertDecl {
  std::vector<Binder> binders; // empty when unquantified
  ExprPtr body;
  Pos pos;

  bool operator==(const AssertDecl& o) const {
    return binders == o.binders && expr_equal(body, o.body);
  }
};

struct Objective {
  bool minimize = true;
  ExprPtr term;
  Pos pos;

  bool operator==(const Objective& o) const {
    return minimize == o.minimize && expr_equal(term, o.term);
  }
};

/// The horizon symbol: integer ranges mentioning it make a program
/// multi-step; it is bound to a concrete value per bounded-horizon check.
inline constexpr const char* kHorizonSymbol = "T";

struct FplProgram {
  std::vector<SetDecl> sets;
  std::vector<ParamDecl> params;
  std::vector<VarDecl> decls;
  std::vector<AssertDecl> asserts;
  std::optional<Objective> objective;

  /// Name of the distinguished time set (one whose range mentions T), if any.
  std::optional<std::string> horizon_marker() const;
  bool uses_horizon() const;

  bool operator==(const FplProgram& o) const {
    return sets == o.sets && params == o.params && decls == o.decls && asserts == o.asserts &&
           objective == o.objective;
  }
};

} // namespace formplan::fpl
