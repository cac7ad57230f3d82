// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include "formplan/fpl/parser.hpp"
#include "formplan/fpl/printer.hpp"
#include "formplan/fpl/typecheck.hpp"

#include "formplan/common/util.hpp"

#include <random>

using namespace formplan;
using namespace formplan::fpl;

namespace {

const char* kCoffeeLikeSource = R"(
set Supplier = {supplier1, supplier2, supplier3};
set Roastery = {roastery1, roastery2};
param cap[Supplier]: Int = {supplier1: 150, supplier2: 50, supplier3: 100};
var x[Supplier, Roastery]: Int;
assert forall s in Supplier: sum(r in Roastery) x[s, r] <= cap[s];
assert forall s in Supplier, r in Roastery: x[s, r] >= 0;
)";

} // namespace

TEST_CASE("parse: declaration and quantified assert from a one-liner") {
  auto r = parse("var x[Supplier,Roastery]: Int; "
                 "assert forall s in Supplier: sum(r in Roastery) x[s,r] <= cap[s];");
  REQUIRE(r.ok());
  const auto& prog = r.value();
  CHECK(prog.decls.size() == 1);
  CHECK(prog.asserts.size() == 1);
  CHECK(prog.asserts[0].binders.size() == 1);
  CHECK(prog.asserts[0].binders[0].var == "s");
}

TEST_CASE("parse: empty input is a syntax error") {
  auto r = parse("");
  REQUIRE(!r.ok());
  CHECK(r.error().pos.line == 1);
}

TEST_CASE("parse: undeclared objective parses; rejection is typecheck's job") {
  auto r = parse("minimize total_cost;");
  REQUIRE(r.ok());
  REQUIRE(r.value().objective.has_value());
  auto tc = typecheck(r.value());
  CHECK(!tc.ok());
}

TEST_CASE("parse: reserved word misuse is a positioned error") {
  auto r = parse("var assert: Int;");
  REQUIRE(!r.ok());
  CHECK(r.error().pos.line == 1);
  CHECK(r.error().message.find("reserved") != std::string::npos);
}

TEST_CASE("parse: second objective rejected") {
  auto r = parse("var x: Int; minimize x; maximize x;");
  REQUIRE(!r.ok());
  CHECK(r.error().message.find("at most one objective") != std::string::npos);
}

TEST_CASE("typecheck: coffee-like program produces a sorted environment") {
  auto parsed = parse(kCoffeeLikeSource);
  REQUIRE(parsed.ok());
  auto env = typecheck(parsed.value());
  REQUIRE(env.ok());
  const auto* x = env.value().find("x");
  REQUIRE(x != nullptr);
  CHECK(x->sort == Sort::Int);
  CHECK(x->index_sets == std::vector<std::string>{"Supplier", "Roastery"});
  CHECK(!env.value().multi_step);
}

TEST_CASE("typecheck: boolean in sum is a sort mismatch") {
  auto parsed = parse("set S = {a, b}; var p[S]: Bool; var n: Int;"
                      "assert n == sum(s in S) p[s];");
  REQUIRE(parsed.ok());
  auto env = typecheck(parsed.value());
  REQUIRE(!env.ok());
  bool found = false;
  for (const auto& d : env.error())
    if (d.message.find("sum body must be numeric") != std::string::npos) found = true;
  CHECK(found);
}

TEST_CASE("typecheck: index arity mismatch") {
  auto parsed = parse("set S = {a, b}; set R = {u, v}; param cap[S]: Int = {a: 1, b: 2};"
                      "var x[S, R]: Int; assert forall s in S, r in R: x[s, r] <= cap[s, r];");
  REQUIRE(parsed.ok());
  auto env = typecheck(parsed.value());
  REQUIRE(!env.ok());
  bool found = false;
  for (const auto& d : env.error())
    if (d.message.find("expects 1 indices, got 2") != std::string::npos) found = true;
  CHECK(found);
}

TEST_CASE("typecheck: horizon-indexed program is multi-step with checked bounds") {
  auto parsed = parse(R"(
set Block = {a, b};
set Time = 0..T;
set Step = 0..T-1;
var ontable[Block, Time]: Bool;
var pickup[Block, Step]: Bool;
assert forall b in Block, t in Step: pickup[b, t] -> (ontable[b, t] and not ontable[b, t+1]);
assert ontable[a, T];
)");
  REQUIRE(parsed.ok());
  auto env = typecheck(parsed.value());
  if (!env.ok()) {
    for (const auto& d : env.error()) MESSAGE(d.to_string());
  }
  REQUIRE(env.ok());
  CHECK(env.value().multi_step);
  CHECK(env.value().horizon_set == "Time");
}

TEST_CASE("typecheck: out-of-range timestep index is rejected") {
  auto parsed = parse(R"(
set Time = 0..T;
var armempty[Time]: Bool;
assert forall t in 0..T: armempty[t+1];
)");
  REQUIRE(parsed.ok());
  auto env = typecheck(parsed.value());
  REQUIRE(!env.ok());
  bool found = false;
  for (const auto& d : env.error())
    if (d.message.find("outside set") != std::string::npos) found = true;
  CHECK(found);
}

TEST_CASE("typecheck: division only by nonzero constants; result is Real") {
  auto bad = parse("var x: Int; var y: Int; assert x / y >= 1;");
  REQUIRE(bad.ok());
  CHECK(!typecheck(bad.value()).ok());

  auto zero = parse("var x: Int; assert x / 0 >= 1;");
  REQUIRE(zero.ok());
  CHECK(!typecheck(zero.value()).ok());

  auto fine = parse("var x: Int; assert x / 2 >= 1.5;");
  REQUIRE(fine.ok());
  CHECK(typecheck(fine.value()).ok());
}

TEST_CASE("typecheck: quantifier shadowing rejected") {
  auto parsed = parse("set S = {a, b}; var x[S]: Int; assert forall x in S: true;");
  REQUIRE(parsed.ok());
  CHECK(!typecheck(parsed.value()).ok());
}

TEST_CASE("typecheck: order-independence across scope-preserving interleavings") {
  auto a = parse("set S = {p, q}; param c[S]: Int = {p: 1, q: 2}; var x[S]: Int;"
                 "assert forall s in S: x[s] <= c[s];");
  auto b = parse("assert forall s in S: x[s] <= c[s]; var x[S]: Int;"
                 "param c[S]: Int = {p: 1, q: 2}; set S = {p, q};");
  REQUIRE(a.ok());
  REQUIRE(b.ok());
  auto env_a = typecheck(a.value());
  auto env_b = typecheck(b.value());
  REQUIRE(env_a.ok());
  REQUIRE(env_b.ok());
  CHECK(env_a.value().symbols.size() == env_b.value().symbols.size());
}

TEST_CASE("print/parse round-trip on the coffee-like fixture") {
  auto parsed = parse(kCoffeeLikeSource);
  REQUIRE(parsed.ok());
  auto text = print(parsed.value());
  auto reparsed = parse(text);
  REQUIRE(reparsed.ok());
  CHECK(reparsed.value() == parsed.value());
}

// ---------------------------------------------------------------------------
// Randomized program generator for the round-trip property, plus the fuzzer.
// ---------------------------------------------------------------------------

namespace {

struct Gen {
  std::mt19937_64 rng;
  FplProgram prog;
  std::vector<std::string> enum_sets;
  std::vector<std::pair<std::string, std::vector<std::string>>> vars; // name, sig
  int name_counter = 0;

  explicit Gen(uint64_t seed) : rng(seed) {}

  int pick(int n) { return static_cast<int>(rng() % static_cast<uint64_t>(n)); }
  std::string fresh(const std::string& prefix) { return prefix + std::to_string(++name_counter); }

  void build_sets() {
    int n_sets = 1 + pick(3);
    for (int i = 0; i < n_sets; ++i) {
      SetDecl set;
      set.name = fresh("S");
      set.enumerated = true;
      int n_elems = 1 + pick(4);
      for (int k = 0; k < n_elems; ++k) set.elements.push_back(fresh("e"));
      enum_sets.push_back(set.name);
      prog.sets.push_back(std::move(set));
    }
  }

  void build_params() {
    int n_params = pick(3);
    for (int i = 0; i < n_params; ++i) {
      ParamDecl param;
      param.name = fresh("c");
      param.sort = Sort::Int;
      if (pick(2) == 0) {
        param.kind = ParamKind::Scalar;
        param.scalar = Rational::of(pick(100));
      } else {
        param.kind = ParamKind::Table;
        const auto& set = prog.sets[static_cast<size_t>(pick(static_cast<int>(prog.sets.size())))];
        param.index_sets = {set.name};
        for (const auto& element : set.elements)
          param.entries.push_back({{element}, Rational::of(pick(50))});
      }
      prog.params.push_back(std::move(param));
    }
  }

  void build_vars() {
    int n_vars = 1 + pick(4);
    for (int i = 0; i < n_vars; ++i) {
      VarDecl decl;
      decl.name = fresh("x");
      int arity = pick(3);
      for (int k = 0; k < arity; ++k)
        decl.index_sets.push_back(enum_sets[static_cast<size_t>(pick(static_cast<int>(enum_sets.size())))]);
      decl.sort = pick(3) == 0 ? Sort::Bool : Sort::Int;
      vars.emplace_back(decl.name, decl.index_sets);
      prog.decls.push_back(std::move(decl));
    }
  }

  ExprPtr numeric_leaf(const std::vector<Binder>& scope) {
    int choice = pick(3);
    if (choice == 0) return make_int(pick(200));
    if (choice == 1) {
      long long num = 1 + pick(99);
      return make_rat(Rational::of(num, 100), {});
    }
    // Indexed or scalar access to an Int var, with binders where possible.
    for (int attempt = 0; attempt < 8; ++attempt) {
      const auto& [name, sig] = vars[static_cast<size_t>(pick(static_cast<int>(vars.size())))];
      bool is_bool = false;
      for (const auto& d : prog.decls)
        if (d.name == name) is_bool = d.sort == Sort::Bool;
      if (is_bool) continue;
      std::vector<ExprPtr> indices;
      bool feasible = true;
      for (const auto& set_name : sig) {
        std::string pick_name;
        for (const auto& b : scope)
          if (b.set_name == set_name) pick_name = b.var;
        if (pick_name.empty()) {
          for (const auto& set : prog.sets)
            if (set.name == set_name && !set.elements.empty())
              pick_name = set.elements[static_cast<size_t>(pick(static_cast<int>(set.elements.size())))];
        }
        if (pick_name.empty()) {
          feasible = false;
          break;
        }
        indices.push_back(make_ident(pick_name));
      }
      if (!feasible) continue;
      if (indices.empty()) return make_ident(name);
      return make_indexed(name, std::move(indices));
    }
    return make_int(pick(50));
  }

  ExprPtr numeric_expr(const std::vector<Binder>& scope, int depth) {
    if (depth <= 0) return numeric_leaf(scope);
    switch (pick(6)) {
      case 0: return make_binary(BinOp::Add, numeric_expr(scope, depth - 1),
                                 numeric_expr(scope, depth - 1), {});
      case 1: return make_binary(BinOp::Sub, numeric_expr(scope, depth - 1),
                                 numeric_expr(scope, depth - 1), {});
      case 2: return make_binary(BinOp::Mul, make_int(1 + pick(9)),
                                 numeric_expr(scope, depth - 1), {});
      case 3: {
        // sum over a fresh binder
        const auto& set = prog.sets[static_cast<size_t>(pick(static_cast<int>(prog.sets.size())))];
        Binder b;
        b.var = fresh("q");
        b.set_name = set.name;
        auto inner_scope = scope;
        inner_scope.push_back(b);
        return make_sum({b}, numeric_expr(inner_scope, depth - 1), {});
      }
      case 4: return make_ite(bool_expr(scope, depth - 1), numeric_expr(scope, depth - 1),
                              numeric_expr(scope, depth - 1), {});
      default: return numeric_leaf(scope);
    }
  }

  ExprPtr bool_leaf(const std::vector<Binder>& scope) {
    if (pick(4) == 0) return make_bool(pick(2) == 1, {});
    BinOp cmp = std::array{BinOp::Le, BinOp::Ge, BinOp::Lt, BinOp::Gt, BinOp::Eq,
                           BinOp::Ne}[static_cast<size_t>(pick(6))];
    return make_binary(cmp, numeric_leaf(scope), numeric_leaf(scope), {});
  }

  ExprPtr bool_expr(const std::vector<Binder>& scope, int depth) {
    if (depth <= 0) return bool_leaf(scope);
    switch (pick(6)) {
      case 0: return make_binary(BinOp::And, bool_expr(scope, depth - 1),
                                 bool_expr(scope, depth - 1), {});
      case 1: return make_binary(BinOp::Or, bool_expr(scope, depth - 1),
                                 bool_expr(scope, depth - 1), {});
      case 2: return make_binary(BinOp::Implies, bool_expr(scope, depth - 1),
                                 bool_expr(scope, depth - 1), {});
      case 3: return make_unary(UnOp::Not, bool_expr(scope, depth - 1), {});
      case 4: {
        BinOp cmp = pick(2) ? BinOp::Le : BinOp::Ge;
        return make_binary(cmp, numeric_expr(scope, depth - 1), numeric_expr(scope, depth - 1), {});
      }
      default: return bool_leaf(scope);
    }
  }

  FplProgram build() {
    build_sets();
    build_params();
    build_vars();
    int n_asserts = 1 + pick(5);
    for (int i = 0; i < n_asserts; ++i) {
      AssertDecl a;
      int n_binders = pick(3);
      for (int k = 0; k < n_binders; ++k) {
        Binder b;
        b.var = fresh("i");
        b.set_name = enum_sets[static_cast<size_t>(pick(static_cast<int>(enum_sets.size())))];
        a.binders.push_back(b);
      }
      a.body = bool_expr(a.binders, 1 + pick(3));
      prog.asserts.push_back(std::move(a));
    }
    if (pick(2) == 0) {
      Objective obj;
      obj.minimize = pick(2) == 0;
      obj.term = numeric_expr({}, 2);
      prog.objective = std::move(obj);
    }
    return prog;
  }
};

} // namespace

TEST_CASE("property: parse(print(p)) == p over 100 random programs") {
  for (uint64_t seed = 1; seed <= 100; ++seed) {
    Gen gen(seed * 7919);
    FplProgram prog = gen.build();
    std::string text = print(prog);
    auto reparsed = parse(text);
    if (!reparsed.ok()) {
      MESSAGE("seed ", seed, " error ", reparsed.error().to_string(), "\n", text);
    }
    REQUIRE(reparsed.ok());
    bool equal = reparsed.value() == prog;
    if (!equal) MESSAGE("seed ", seed, "\n", text);
    CHECK(equal);
  }
}

TEST_CASE("fuzz: mutated sources never crash the parser") {
  Gen gen(42424242);
  std::string base = print(gen.build());
  std::mt19937_64 rng(99991);
  static const char junk[] = "(){}[];:=<>!+-*/.,\"abcforallsumT0123456789 \n";
  int parsed_count = 0;
  int error_count = 0;
  for (int iter = 0; iter < 10000; ++iter) {
    std::string s = base;
    int edits = 1 + static_cast<int>(rng() % 8);
    for (int e = 0; e < edits; ++e) {
      if (s.empty()) break;
      size_t at = rng() % s.size();
      switch (rng() % 4) {
        case 0: s[at] = junk[rng() % (sizeof(junk) - 1)]; break;
        case 1: s.erase(at, 1 + rng() % 5); break;
        case 2: s.insert(at, 1, junk[rng() % (sizeof(junk) - 1)]); break;
        case 3: {
          size_t len = 1 + rng() % 10;
          std::string dup = s.substr(at, len);
          s.insert(at, dup);
          break;
        }
      }
    }
    auto r = parse(s);
    if (r.ok())
      ++parsed_count;
    else {
      ++error_count;
      CHECK(r.error().pos.line >= 1);
    }
  }
  CHECK(parsed_count + error_count == 10000);
}
