// SPDX-License-Identifier: Apache-2.0
#include "formplan/fpl/typecheck.hpp"

#include <optional>

namespace formplan::fpl {

namespace {

std::string format_diag_list(const std::vector<Diagnostic>& diags);

/// Value that is affine in the horizon symbol: a*T + b.
struct AffT {
  long long a = 0;
  long long b = 0;

  AffT operator+(const AffT& o) const { return {a + o.a, b + o.b}; }
  AffT operator-(const AffT& o) const { return {a - o.a, b - o.b}; }
  AffT scaled(long long k) const { return {a * k, b * k}; }
  /// True when this <= o for every T >= 0 (sufficient condition).
  bool le_for_all_T(const AffT& o) const { return a <= o.a && b <= o.b; }
};

/// Affine form over integer binder variables and T.
struct Affine {
  bool ok = true;
  std::map<std::string, long long> coef;
  long long c0 = 0;
};

/// What an expression denotes.
struct Inferred {
  enum class Kind { Numeric, Boolean, Element, Invalid } kind = Kind::Invalid;
  Sort sort = Sort::Int;   // Numeric: Int or Real
  std::string set_name;    // Element: owning set
};

struct BinderInfo {
  bool is_int = false; // int-range binder; otherwise element binder
  std::string set_name;
  AffT lo, hi;        // int binders: value interval as affine in T
};

struct Checker {
  const FplProgram& prog;
  const core::Background* background;
  SortEnv env;
  std::vector<Diagnostic> diags;
  std::vector<std::pair<std::string, BinderInfo>> binder_stack;

  void report(Pos pos, std::string message) { diags.push_back({pos, std::move(message)}); }

  const BinderInfo* binder(const std::string& name) const {
    for (auto it = binder_stack.rbegin(); it != binder_stack.rend(); ++it)
      if (it->first == name) return &it->second;
    return nullptr;
  }

  bool is_horizon(const std::string& name) const { return name == kHorizonSymbol; }

  // ---- declaration pass -------------------------------------------------

  std::optional<AffT> eval_range_end(const RangeEnd& end, Pos pos) {
    if (end.var.empty()) return AffT{0, end.offset};
    if (is_horizon(end.var)) {
      env.multi_step = true;
      return AffT{1, end.offset};
    }
    report(pos, "range endpoints may only use integers and the horizon symbol T, got '" +
                    end.var + "'");
    return std::nullopt;
  }

  void declare_sets() {
    for (const auto& set : prog.sets) {
      if (is_horizon(set.name)) {
        report(set.pos, "T is reserved for the horizon and cannot be declared");
        continue;
      }
      if (env.symbols.count(set.name)) {
        report(set.pos, "duplicate declaration of '" + set.name + "'");
        continue;
      }
      SymInfo info;
      info.kind = SymInfo::Kind::Set;
      info.enumerated = set.enumerated;
      info.elements = set.elements;
      info.range = set.range;
      if (set.enumerated) {
        for (const auto& element : set.elements) {
          if (is_horizon(element)) {
            report(set.pos, "T is reserved for the horizon and cannot be a set element");
            continue;
          }
          if (env.symbols.count(element)) {
            report(set.pos, "set element '" + element + "' collides with another declaration");
            continue;
          }
          SymInfo elem;
          elem.kind = SymInfo::Kind::Element;
          elem.element_of = set.name;
          env.symbols[element] = std::move(elem);
        }
      } else {
        eval_range_end(set.range.lo, set.pos);
        eval_range_end(set.range.hi, set.pos);
      }
      env.symbols[set.name] = std::move(info);
    }
    if (auto marker = prog.horizon_marker()) env.horizon_set = *marker;
  }

  bool check_signature(const std::vector<std::string>& sig, Pos pos, bool allow_horizon_sets) {
    bool ok = true;
    for (const auto& set_name : sig) {
      const SymInfo* info = env.find(set_name);
      if (!info || info->kind != SymInfo::Kind::Set) {
        report(pos, "unknown index set '" + set_name + "'");
        ok = false;
        continue;
      }
      if (!allow_horizon_sets && !info->enumerated &&
          (info->range.lo.var == kHorizonSymbol || info->range.hi.var == kHorizonSymbol)) {
        report(pos, "parameter tables cannot range over the horizon set '" + set_name + "'");
        ok = false;
      }
    }
    return ok;
  }

  /// Enumerate a constant integer range; empty when T-dependent or inverted.
  std::vector<long long> constant_range(const SymInfo& set) const {
    std::vector<long long> out;
    if (set.range.lo.var.empty() && set.range.hi.var.empty()) {
      for (long long v = set.range.lo.offset; v <= set.range.hi.offset; ++v) out.push_back(v);
    }
    return out;
  }

  void check_param_table(const ParamDecl& param) {
    // Arity and key membership, then completeness over the index product.
    std::vector<std::vector<std::string>> domains;
    long long combos = 1;
    for (const auto& set_name : param.index_sets) {
      const SymInfo* set = env.find(set_name);
      if (!set || set->kind != SymInfo::Kind::Set) return; // reported already
      std::vector<std::string> domain;
      if (set->enumerated) {
        domain = set->elements;
      } else {
        for (long long v : constant_range(*set)) domain.push_back(std::to_string(v));
      }
      combos *= static_cast<long long>(domain.size());
      if (combos > 65536) {
        report(param.pos, "parameter table over '" + param.name + "' is too large to check");
        return;
      }
      domains.push_back(std::move(domain));
    }
    std::map<std::vector<std::string>, int> seen;
    for (const auto& entry : param.entries) {
      if (entry.key.size() != param.index_sets.size()) {
        report(param.pos, "table key for '" + param.name + "' has " +
                              std::to_string(entry.key.size()) + " components, expected " +
                              std::to_string(param.index_sets.size()));
        continue;
      }
      bool valid = true;
      for (size_t k = 0; k < entry.key.size(); ++k) {
        const auto& domain = domains[k];
        bool found = false;
        for (const auto& v : domain)
          if (v == entry.key[k]) {
            found = true;
            break;
          }
        if (!found) {
          report(param.pos, "table key component '" + entry.key[k] + "' is not in set '" +
                                param.index_sets[k] + "'");
          valid = false;
        }
      }
      if (!valid) continue;
      if (++seen[entry.key] == 2)
        report(param.pos, "duplicate table key in '" + param.name + "'");
      if (param.sort == Sort::Int && !entry.value.is_integer())
        report(param.pos, "non-integer value in Int parameter '" + param.name + "'");
    }
    // Completeness.
    std::vector<size_t> idx(domains.size(), 0);
    if (combos > 0 && !domains.empty()) {
      while (true) {
        std::vector<std::string> key;
        for (size_t k = 0; k < domains.size(); ++k) key.push_back(domains[k][idx[k]]);
        if (!seen.count(key)) {
          std::string text;
          for (size_t k = 0; k < key.size(); ++k) text += (k ? ", " : "") + key[k];
          report(param.pos, "table for '" + param.name + "' is missing entry (" + text + ")");
          break; // one missing-entry report is enough
        }
        size_t d = domains.size();
        while (d > 0) {
          if (++idx[d - 1] < domains[d - 1].size()) break;
          idx[d - 1] = 0;
          --d;
        }
        if (d == 0) break;
      }
    }
  }

  void declare_params() {
    for (const auto& param : prog.params) {
      if (is_horizon(param.name)) {
        report(param.pos, "T is reserved for the horizon and cannot be declared");
        continue;
      }
      if (env.symbols.count(param.name)) {
        report(param.pos, "duplicate declaration of '" + param.name + "'");
        continue;
      }
      if (param.sort == Sort::Bool) {
        report(param.pos, "parameters must be numeric; use a 0/1 Int table");
        continue;
      }
      bool sig_ok = check_signature(param.index_sets, param.pos, /*allow_horizon_sets=*/false);
      SymInfo info;
      info.kind = SymInfo::Kind::Param;
      info.sort = param.sort;
      info.index_sets = param.index_sets;
      env.symbols[param.name] = std::move(info);
      if (!sig_ok) continue;
      switch (param.kind) {
        case ParamKind::Scalar:
          if (!param.index_sets.empty())
            report(param.pos, "parameter '" + param.name + "' has an index signature but a scalar value");
          else if (param.sort == Sort::Int && !param.scalar.is_integer())
            report(param.pos, "non-integer value in Int parameter '" + param.name + "'");
          break;
        case ParamKind::Table:
          if (param.index_sets.empty())
            report(param.pos, "parameter '" + param.name + "' has a table value but no index signature");
          else
            check_param_table(param);
          break;
        case ParamKind::Extern: {
          if (background) {
            std::string source = param.extern_source.value_or(param.name);
            if (!background->has_name(source))
              report(param.pos,
                     "extern parameter '" + param.name + "' names unknown background entry '" +
                         source + "'");
          }
          break;
        }
      }
    }
  }

  void declare_vars() {
    for (const auto& decl : prog.decls) {
      if (is_horizon(decl.name)) {
        report(decl.pos, "T is reserved for the horizon and cannot be declared");
        continue;
      }
      if (env.symbols.count(decl.name)) {
        report(decl.pos, "duplicate declaration of '" + decl.name + "'");
        continue;
      }
      check_signature(decl.index_sets, decl.pos, /*allow_horizon_sets=*/true);
      SymInfo info;
      info.kind = SymInfo::Kind::Var;
      info.sort = decl.sort;
      info.index_sets = decl.index_sets;
      env.symbols[decl.name] = std::move(info);
    }
  }

  // ---- expression pass ----------------------------------------------------

  std::optional<Rational> const_rational(const Expr& e) {
    switch (e.kind) {
      case ExprKind::IntLit: return Rational::of(e.int_val);
      case ExprKind::RatLit: return e.rat_val;
      case ExprKind::Unary:
        if (e.un_op == UnOp::Neg) {
          auto inner = const_rational(*e.args[0]);
          if (inner) return Rational::of(-inner->num, inner->den);
        }
        return std::nullopt;
      case ExprKind::Binary: {
        auto a = const_rational(*e.args[0]);
        auto b = const_rational(*e.args[1]);
        if (!a || !b) return std::nullopt;
        switch (e.bin_op) {
          case BinOp::Add: return Rational::of(a->num * b->den + b->num * a->den, a->den * b->den);
          case BinOp::Sub: return Rational::of(a->num * b->den - b->num * a->den, a->den * b->den);
          case BinOp::Mul: return Rational::of(a->num * b->num, a->den * b->den);
          case BinOp::Div:
            if (b->num == 0) return std::nullopt;
            return Rational::of(a->num * b->den, a->den * b->num);
          default: return std::nullopt;
        }
      }
      default: return std::nullopt;
    }
  }

  Affine affine_of(const Expr& e) {
    Affine out;
    switch (e.kind) {
      case ExprKind::IntLit:
        out.c0 = e.int_val;
        return out;
      case ExprKind::Ident: {
        if (is_horizon(e.ident)) {
          out.coef[kHorizonSymbol] = 1;
          return out;
        }
        const BinderInfo* b = binder(e.ident);
        if (b && b->is_int) {
          out.coef[e.ident] = 1;
          return out;
        }
        out.ok = false;
        return out;
      }
      case ExprKind::Unary: {
        if (e.un_op != UnOp::Neg) {
          out.ok = false;
          return out;
        }
        Affine inner = affine_of(*e.args[0]);
        if (!inner.ok) return inner;
        for (auto& [k, v] : inner.coef) v = -v;
        inner.c0 = -inner.c0;
        return inner;
      }
      case ExprKind::Binary: {
        if (e.bin_op == BinOp::Add || e.bin_op == BinOp::Sub) {
          Affine a = affine_of(*e.args[0]);
          Affine b = affine_of(*e.args[1]);
          if (!a.ok || !b.ok) {
            out.ok = false;
            return out;
          }
          long long sign = e.bin_op == BinOp::Add ? 1 : -1;
          for (const auto& [k, v] : b.coef) a.coef[k] += sign * v;
          a.c0 += sign * b.c0;
          return a;
        }
        if (e.bin_op == BinOp::Mul) {
          Affine a = affine_of(*e.args[0]);
          Affine b = affine_of(*e.args[1]);
          if (a.ok && a.coef.empty()) {
            if (!b.ok) return b;
            for (auto& [k, v] : b.coef) v *= a.c0;
            b.c0 *= a.c0;
            return b;
          }
          if (b.ok && b.coef.empty()) {
            if (!a.ok) return a;
            for (auto& [k, v] : a.coef) v *= b.c0;
            a.c0 *= b.c0;
            return a;
          }
          out.ok = false;
          return out;
        }
        out.ok = false;
        return out;
      }
      default:
        out.ok = false;
        return out;
    }
  }

  std::optional<std::pair<AffT, AffT>> affine_bounds(const Affine& a, Pos pos) {
    AffT lo{0, a.c0};
    AffT hi{0, a.c0};
    for (const auto& [name, coef] : a.coef) {
      if (coef == 0) continue;
      if (name == kHorizonSymbol) {
        // T is a parameter, not a ranging binder: it contributes the same
        // affine term to both ends.
        env.multi_step = true;
        lo = lo + AffT{coef, 0};
        hi = hi + AffT{coef, 0};
        continue;
      }
      const BinderInfo* b = binder(name);
      if (!b || !b->is_int) {
        report(pos, "index expression uses non-integer name '" + name + "'");
        return std::nullopt;
      }
      if (coef >= 0) {
        lo = lo + b->lo.scaled(coef);
        hi = hi + b->hi.scaled(coef);
      } else {
        lo = lo + b->hi.scaled(coef);
        hi = hi + b->lo.scaled(coef);
      }
    }
    return std::make_pair(lo, hi);
  }

  Inferred invalid() { return Inferred{}; }
  Inferred numeric(Sort sort) { return Inferred{Inferred::Kind::Numeric, sort, ""}; }
  Inferred boolean() { return Inferred{Inferred::Kind::Boolean, Sort::Bool, ""}; }
  Inferred element(std::string set) {
    return Inferred{Inferred::Kind::Element, Sort::Int, std::move(set)};
  }

  void check_index_arg(const Expr& arg, const std::string& set_name, const std::string& head) {
    const SymInfo* set = env.find(set_name);
    if (!set || set->kind != SymInfo::Kind::Set) return; // reported at decl
    if (set->enumerated) {
      if (arg.kind == ExprKind::Ident) {
        const BinderInfo* b = binder(arg.ident);
        if (b && !b->is_int) {
          if (b->set_name != set_name)
            report(arg.pos, "index of '" + head + "' expects set '" + set_name +
                                "' but binder '" + arg.ident + "' ranges over '" + b->set_name + "'");
          return;
        }
        const SymInfo* sym = env.find(arg.ident);
        if (sym && sym->kind == SymInfo::Kind::Element) {
          if (sym->element_of != set_name)
            report(arg.pos, "element '" + arg.ident + "' belongs to set '" + sym->element_of +
                                "', not '" + set_name + "'");
          return;
        }
      }
      report(arg.pos, "index of '" + head + "' over enumerated set '" + set_name +
                          "' must be a binder variable or a set element");
      return;
    }
    // Integer-range set: affine integer expression with provable bounds.
    Affine aff = affine_of(arg);
    if (!aff.ok) {
      report(arg.pos, "index into '" + head + "' must be an affine integer expression");
      return;
    }
    auto bounds = affine_bounds(aff, arg.pos);
    if (!bounds) return;
    auto lo_end = eval_range_end(set->range.lo, arg.pos);
    auto hi_end = eval_range_end(set->range.hi, arg.pos);
    if (!lo_end || !hi_end) return;
    if (!lo_end->le_for_all_T(bounds->first) || !bounds->second.le_for_all_T(*hi_end))
      report(arg.pos, "index into '" + head + "' may fall outside set '" + set_name + "'");
  }

  Inferred infer(const Expr& e) {
    switch (e.kind) {
      case ExprKind::IntLit: return numeric(Sort::Int);
      case ExprKind::RatLit: return numeric(Sort::Real);
      case ExprKind::BoolLit: return boolean();
      case ExprKind::Ident: {
        if (is_horizon(e.ident)) {
          env.multi_step = true;
          return numeric(Sort::Int);
        }
        if (const BinderInfo* b = binder(e.ident))
          return b->is_int ? numeric(Sort::Int) : element(b->set_name);
        const SymInfo* sym = env.find(e.ident);
        if (!sym) {
          report(e.pos, "unbound identifier '" + e.ident + "'");
          return invalid();
        }
        switch (sym->kind) {
          case SymInfo::Kind::Element: return element(sym->element_of);
          case SymInfo::Kind::Set:
            report(e.pos, "set '" + e.ident + "' cannot be used as a value");
            return invalid();
          case SymInfo::Kind::Param:
          case SymInfo::Kind::Var:
            if (!sym->index_sets.empty()) {
              report(e.pos, "'" + e.ident + "' requires " +
                                std::to_string(sym->index_sets.size()) + " indices");
              return invalid();
            }
            return sym->kind == SymInfo::Kind::Var && sym->sort == Sort::Bool
                       ? boolean()
                       : numeric(sym->sort);
        }
        return invalid();
      }
      case ExprKind::Indexed: {
        const SymInfo* sym = env.find(e.ident);
        if (!sym) {
          report(e.pos, "unbound identifier '" + e.ident + "'");
          return invalid();
        }
        if (sym->kind != SymInfo::Kind::Param && sym->kind != SymInfo::Kind::Var) {
          report(e.pos, "'" + e.ident + "' is not indexable");
          return invalid();
        }
        if (sym->index_sets.size() != e.args.size()) {
          report(e.pos, "'" + e.ident + "' expects " + std::to_string(sym->index_sets.size()) +
                            " indices, got " + std::to_string(e.args.size()));
          return invalid();
        }
        for (size_t k = 0; k < e.args.size(); ++k)
          check_index_arg(*e.args[k], sym->index_sets[k], e.ident);
        return sym->sort == Sort::Bool ? boolean() : numeric(sym->sort);
      }
      case ExprKind::Unary: {
        Inferred inner = infer(*e.args[0]);
        if (inner.kind == Inferred::Kind::Invalid) return invalid();
        if (e.un_op == UnOp::Neg) {
          if (inner.kind != Inferred::Kind::Numeric) {
            report(e.pos, "negation requires a numeric operand");
            return invalid();
          }
          return inner;
        }
        if (inner.kind != Inferred::Kind::Boolean) {
          report(e.pos, "'not' requires a boolean operand");
          return invalid();
        }
        return boolean();
      }
      case ExprKind::Binary: {
        Inferred lhs = infer(*e.args[0]);
        Inferred rhs = infer(*e.args[1]);
        if (lhs.kind == Inferred::Kind::Invalid || rhs.kind == Inferred::Kind::Invalid)
          return invalid();
        switch (e.bin_op) {
          case BinOp::Add:
          case BinOp::Sub:
          case BinOp::Mul: {
            if (lhs.kind != Inferred::Kind::Numeric || rhs.kind != Inferred::Kind::Numeric) {
              report(e.pos, "arithmetic requires numeric operands");
              return invalid();
            }
            Sort sort =
                (lhs.sort == Sort::Real || rhs.sort == Sort::Real) ? Sort::Real : Sort::Int;
            return numeric(sort);
          }
          case BinOp::Div: {
            if (lhs.kind != Inferred::Kind::Numeric || rhs.kind != Inferred::Kind::Numeric) {
              report(e.pos, "arithmetic requires numeric operands");
              return invalid();
            }
            auto divisor = const_rational(*e.args[1]);
            if (!divisor) {
              report(e.pos, "division requires a constant divisor");
              return invalid();
            }
            if (divisor->num == 0) {
              report(e.pos, "division by zero");
              return invalid();
            }
            return numeric(Sort::Real);
          }
          case BinOp::Lt:
          case BinOp::Le:
          case BinOp::Gt:
          case BinOp::Ge:
          case BinOp::Eq:
          case BinOp::Ne:
            if (lhs.kind != Inferred::Kind::Numeric || rhs.kind != Inferred::Kind::Numeric) {
              report(e.pos, e.bin_op == BinOp::Eq || e.bin_op == BinOp::Ne
                                ? "comparison requires numeric operands (use <-> for booleans)"
                                : "comparison requires numeric operands");
              return invalid();
            }
            return boolean();
          case BinOp::And:
          case BinOp::Or:
          case BinOp::Implies:
          case BinOp::Iff:
            if (lhs.kind != Inferred::Kind::Boolean || rhs.kind != Inferred::Kind::Boolean) {
              report(e.pos, "logical connectives require boolean operands");
              return invalid();
            }
            return boolean();
        }
        return invalid();
      }
      case ExprKind::Sum:
      case ExprKind::Count: {
        size_t pushed = push_binders(e.binders);
        Inferred body = infer(*e.args[0]);
        pop_binders(pushed);
        if (body.kind == Inferred::Kind::Invalid) return invalid();
        if (e.kind == ExprKind::Sum) {
          if (body.kind != Inferred::Kind::Numeric) {
            report(e.pos, "sum body must be numeric");
            return invalid();
          }
          return numeric(body.sort);
        }
        if (body.kind != Inferred::Kind::Boolean) {
          report(e.pos, "count body must be boolean");
          return invalid();
        }
        return numeric(Sort::Int);
      }
      case ExprKind::Ite: {
        Inferred c = infer(*e.args[0]);
        Inferred a = infer(*e.args[1]);
        Inferred b = infer(*e.args[2]);
        if (c.kind == Inferred::Kind::Invalid || a.kind == Inferred::Kind::Invalid ||
            b.kind == Inferred::Kind::Invalid)
          return invalid();
        if (c.kind != Inferred::Kind::Boolean) {
          report(e.pos, "ite condition must be boolean");
          return invalid();
        }
        if (a.kind == Inferred::Kind::Boolean && b.kind == Inferred::Kind::Boolean)
          return boolean();
        if (a.kind == Inferred::Kind::Numeric && b.kind == Inferred::Kind::Numeric)
          return numeric((a.sort == Sort::Real || b.sort == Sort::Real) ? Sort::Real : Sort::Int);
        report(e.pos, "ite branches must both be numeric or both boolean");
        return invalid();
      }
    }
    return invalid();
  }

  size_t push_binders(const std::vector<Binder>& binders) {
    size_t pushed = 0;
    for (const auto& b : binders) {
      if (is_horizon(b.var)) {
        report(b.pos, "T is reserved for the horizon and cannot be a binder");
        continue;
      }
      if (env.symbols.count(b.var) || binder(b.var)) {
        report(b.pos, "quantifier variable '" + b.var + "' shadows an existing name");
        continue;
      }
      BinderInfo info;
      if (b.set_name) {
        const SymInfo* set = env.find(*b.set_name);
        if (!set || set->kind != SymInfo::Kind::Set) {
          report(b.pos, "unknown set '" + *b.set_name + "' in binder");
          continue;
        }
        if (set->enumerated) {
          info.is_int = false;
          info.set_name = *b.set_name;
        } else {
          info.is_int = true;
          info.set_name = *b.set_name;
          auto lo = eval_range_end(set->range.lo, b.pos);
          auto hi = eval_range_end(set->range.hi, b.pos);
          if (!lo || !hi) continue;
          info.lo = *lo;
          info.hi = *hi;
        }
      } else {
        info.is_int = true;
        auto lo = eval_range_end(b.range->lo, b.pos);
        auto hi = eval_range_end(b.range->hi, b.pos);
        if (!lo || !hi) continue;
        info.lo = *lo;
        info.hi = *hi;
      }
      binder_stack.emplace_back(b.var, info);
      ++pushed;
    }
    return pushed;
  }

  void pop_binders(size_t n) {
    binder_stack.resize(binder_stack.size() - n);
  }

  void check_asserts() {
    for (const auto& a : prog.asserts) {
      size_t pushed = push_binders(a.binders);
      Inferred body = infer(*a.body);
      if (body.kind != Inferred::Kind::Invalid && body.kind != Inferred::Kind::Boolean)
        report(a.pos, "assertion body must be boolean");
      pop_binders(pushed);
    }
    if (prog.objective) {
      Inferred term = infer(*prog.objective->term);
      if (term.kind != Inferred::Kind::Invalid && term.kind != Inferred::Kind::Numeric)
        report(prog.objective->pos, "objective must be numeric");
    }
  }
};

std::string format_diag_list(const std::vector<Diagnostic>& diags) {
  std::string out;
  for (const auto& d : diags) out += d.to_string() + "\n";
  return out;
}

} // namespace

Result<SortEnv, std::vector<Diagnostic>> typecheck(const FplProgram& prog,
                                                   const core::Background* background) {
  using R = Result<SortEnv, std::vector<Diagnostic>>;
  Checker checker{prog, background, {}, {}, {}};
  checker.declare_sets();
  checker.declare_params();
  checker.declare_vars();
  checker.check_asserts();
  if (!checker.diags.empty()) return R::err(std::move(checker.diags));
  return R::ok(std::move(checker.env));
}

std::string format_diagnostics(const std::vector<Diagnostic>& diags) {
  return format_diag_list(diags);
}

} // namespace formplan::fpl
