// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include "formplan/core/cardinality.hpp"
#include "formplan/core/json_io.hpp"
#include "formplan/core/types.hpp"
#include "formplan/core/validate.hpp"

#include <random>

using namespace formplan;
using namespace formplan::core;

namespace {

ProblemInput coffee_like_input() {
  ProblemInput input;
  input.task_description = "A coffee company sources beans from suppliers.";
  input.query = "What is the potential impact of a 29% increase in demand at cafe cafe2?";
  input.domain_id = "coffee";
  input.background.tables = {
      {"capacity_in_supplier", json{{"supplier1", 150}, {"supplier2", 50}, {"supplier3", 100}}},
      {"light_coffee_needed_for_cafe", json{{"cafe1", 20}, {"cafe2", 30}, {"cafe3", 40}}},
  };
  input.background.apis.push_back({"math.ceil", 1, "round up float to int"});
  return input;
}

IRVariable var_full(const std::string& name, const std::string& count,
                    std::vector<std::string> sources, const std::string& value,
                    std::optional<std::string> req) {
  IRVariable v;
  v.name = name;
  v.smt_variable = true;
  v.number_of_variables = count;
  v.data_source = std::move(sources);
  v.value = value;
  v.specific_requirement = std::move(req);
  v.present_keys = {"name", "SMT_variable", "number_of_variables", "data_source",
                    "value", "specific_requirement"};
  return v;
}

FormulationIR coffee_ir_eight_vars() {
  FormulationIR ir;
  ir.kind = FormulationKind::single_step;
  IRSection section;
  section.vars = {
      {"variable_1", var_full("beans_shipped", "6", {"capacity_in_supplier"},
                              "integer units from each supplier to each roastery", "non-negative integer")},
      {"variable_2", var_full("light_roasted", "2", {"variable_1"}, "light roast per roastery",
                              "non-negative integer")},
      {"variable_3", var_full("dark_roasted", "2", {"variable_1"}, "dark roast per roastery",
                              "non-negative integer")},
      {"variable_4", var_full("light_shipped", "6", {"variable_2"}, "light units to cafes",
                              "non-negative integer")},
      {"variable_5", var_full("dark_shipped", "6", {"variable_3"}, "dark units to cafes",
                              "non-negative integer")},
      {"variable_6", var_full("total_cost", "1",
                              {"variable_1", "variable_4", "variable_5"},
                              "sum of all costs", "minimize")},
      {"variable_7", var_full("new_light_demand_cafe2", "1", {"query", "light_coffee_needed_for_cafe"},
                              "math.ceil(30 * 1.29)", std::nullopt)},
      {"variable_8", var_full("new_dark_demand_cafe2", "1", {"query"}, "math.ceil(20 * 1.29)",
                              std::nullopt)},
  };
  ir.sections.push_back(std::move(section));
  return ir;
}

} // namespace

TEST_CASE("cardinality: paper example and basics") {
  Bindings none;
  auto a = evaluate_cardinality("math.ceil(20 * 1.09)", none);
  REQUIRE(a.ok());
  CHECK(a.value() == 22);

  auto b = evaluate_cardinality("10", none);
  REQUIRE(b.ok());
  CHECK(b.value() == 10);

  auto c = evaluate_cardinality("floor(7 / 2)", none);
  REQUIRE(c.ok());
  CHECK(c.value() == 3);
}

TEST_CASE("cardinality: error paths") {
  Bindings none;
  auto unbound = evaluate_cardinality("ceil(n * 1.5)", none);
  REQUIRE(!unbound.ok());
  CHECK(unbound.error().kind == CardinalityErrorKind::UnboundName);

  Bindings bound{{"n", 0.0}};
  auto nonpos = evaluate_cardinality("n", bound);
  REQUIRE(!nonpos.ok());
  CHECK(nonpos.error().kind == CardinalityErrorKind::NonPositiveResult);

  auto malformed = evaluate_cardinality("2 +", none);
  REQUIRE(!malformed.ok());
  CHECK(malformed.error().kind == CardinalityErrorKind::Malformed);

  auto noninteger = evaluate_cardinality("3 * 1.5", none);
  REQUIRE(!noninteger.ok());
  CHECK(noninteger.error().kind == CardinalityErrorKind::NonIntegerResult);
}

TEST_CASE("validate_formulation: coffee IR with 8 variables is valid") {
  auto issues = validate_formulation(coffee_ir_eight_vars(), coffee_like_input());
  CHECK(issues.empty());
}

TEST_CASE("validate_formulation: unresolved data_source reference") {
  auto ir = coffee_ir_eight_vars();
  ir.sections[0].vars[1].second.data_source = std::vector<std::string>{"variable_99"};
  auto issues = validate_formulation(ir, coffee_like_input());
  REQUIRE(issues.size() == 1);
  CHECK(issues[0].kind == IssueKind::UnresolvedReference);
  CHECK(issues[0].detail == "variable_99");
}

TEST_CASE("validate_formulation: multi_step missing update section") {
  FormulationIR ir;
  ir.kind = FormulationKind::multi_step;
  for (const char* name : {"objects", "predicates", "actions", "goal"}) {
    IRSection s;
    s.name = name;
    s.vars.emplace_back(std::string("variable_") + name,
                        var_full(name, "1", {"query"}, "stub", std::nullopt));
    ir.sections.push_back(std::move(s));
  }
  auto issues = validate_formulation(ir, coffee_like_input());
  bool found = false;
  for (const auto& issue : issues)
    if (issue.kind == IssueKind::MissingSection && issue.where == "update") found = true;
  CHECK(found);
}

TEST_CASE("validate_formulation: idempotent and side-effect free") {
  auto ir = coffee_ir_eight_vars();
  auto input = coffee_like_input();
  auto first = validate_formulation(ir, input);
  auto second = validate_formulation(ir, input);
  CHECK(first == second);
}

TEST_CASE("validate_formulation: forward reference and six-field check") {
  auto ir = coffee_ir_eight_vars();
  ir.sections[0].vars[0].second.data_source = std::vector<std::string>{"variable_3"};
  ir.sections[0].vars[2].second.present_keys.erase("value");
  auto issues = validate_formulation(ir, coffee_like_input());
  bool fwd = false, missing = false;
  for (const auto& issue : issues) {
    if (issue.kind == IssueKind::ForwardReference) fwd = true;
    if (issue.kind == IssueKind::MissingField && issue.where == "variable_3") missing = true;
  }
  CHECK(fwd);
  CHECK(missing);
}

TEST_CASE("data_source normalization strips call syntax and suffix words") {
  CHECK(normalize_reference("BlockSearch.run()") == "BlockSearch.run");
  CHECK(normalize_reference("variable_2 variables") == "variable_2");
  CHECK(normalize_reference(" query ") == "query");
}

namespace {

std::string random_token(std::mt19937_64& rng, size_t len) {
  static const char alphabet[] = "abcdefghijklmnopqrstuvwxyz_0123456789";
  std::uniform_int_distribution<size_t> pick(0, sizeof(alphabet) - 2);
  std::string out;
  for (size_t i = 0; i < len; ++i) out += alphabet[pick(rng)];
  if (std::isdigit(static_cast<unsigned char>(out[0]))) out[0] = 'v';
  return out;
}

IRVariable random_var(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coin(0, 1);
  IRVariable v;
  v.present_keys = {"name", "SMT_variable", "number_of_variables", "data_source",
                    "value", "specific_requirement"};
  v.name = random_token(rng, 6);
  v.smt_variable = coin(rng) == 1;
  v.number_of_variables = coin(rng) ? std::to_string(1 + (rng() % 40))
                                    : "ceil(" + std::to_string(1 + (rng() % 9)) + " * 1.5)";
  if (coin(rng))
    v.data_source = std::vector<std::string>{random_token(rng, 5), random_token(rng, 4)};
  v.value = random_token(rng, 10);
  if (coin(rng)) v.value_as_how_to_pick = true;
  if (coin(rng)) v.specific_requirement = random_token(rng, 8);
  return v;
}

} // namespace

TEST_CASE("serialization round-trip over randomized instances") {
  std::mt19937_64 rng(20240917);
  for (int iter = 0; iter < 200; ++iter) {
    SUBCASE("") {}
    IRVariable v = random_var(rng);
    auto decoded = decode_ir_variable(encode(v));
    REQUIRE(decoded.ok());
    CHECK(decoded.value() == v);
  }

  for (int iter = 0; iter < 50; ++iter) {
    FormulationIR ir;
    ir.kind = iter % 2 == 0 ? FormulationKind::single_step : FormulationKind::multi_step;
    if (ir.kind == FormulationKind::single_step) {
      IRSection s;
      for (int k = 0; k < 1 + static_cast<int>(rng() % 6); ++k)
        s.vars.emplace_back("variable_" + std::to_string(k + 1), random_var(rng));
      ir.sections.push_back(std::move(s));
    } else {
      int k = 0;
      for (const char* name : kMultiStepSections) {
        IRSection s;
        s.name = name;
        for (int j = 0; j < 1 + static_cast<int>(rng() % 3); ++j)
          s.vars.emplace_back("variable_" + std::to_string(++k), random_var(rng));
        ir.sections.push_back(std::move(s));
      }
    }
    auto decoded = decode_formulation(encode(ir));
    REQUIRE(decoded.ok());
    CHECK(decoded.value() == ir);
  }
}

TEST_CASE("problem input round-trip and invariants") {
  auto input = coffee_like_input();
  auto decoded = decode_problem_input(encode(input));
  REQUIRE(decoded.ok());
  CHECK(decoded.value() == input);

  auto bad = encode(input);
  bad["query"] = "";
  CHECK(!decode_problem_input(bad).ok());
}

TEST_CASE("plan result round-trip") {
  PlanResult result;
  result.status = PlanStatus::plan;
  result.plan = json{{"actions", json::array({"pickup a", "stack a b"})}};
  result.objective_value = 2.0;
  result.horizon = 2;
  result.stage_trace.push_back({"formulator", 1, 0.25, 120, 300, ""});
  AssessmentReport report;
  report.step_ratings = {1, 0, 1};
  report.reasoning = {"ok", "bad", "ok"};
  report.modification = Modification{AssessedStep::formulation, "{}"};
  result.assessments.push_back(report);

  auto decoded = decode_plan_result(encode(result));
  REQUIRE(decoded.ok());
  CHECK(decoded.value() == result);

  // Timing-stripped encoding zeroes durations but keeps everything else.
  auto stripped = encode(result, false);
  CHECK(stripped["stage_trace"][0]["duration_s"].get<double>() == 0.0);
}

TEST_CASE("how_to_pick alias preserved through round-trip") {
  IRVariable v;
  v.present_keys = {"name", "SMT_variable", "number_of_variables", "data_source",
                    "value", "specific_requirement"};
  v.name = "cities";
  v.smt_variable = true;
  v.number_of_variables = "10";
  v.value = "selecting 10 cities from 10 cities";
  v.value_as_how_to_pick = true;
  json j = encode(v);
  CHECK(j.contains("how_to_pick"));
  CHECK(!j.contains("value"));
  auto decoded = decode_ir_variable(j);
  REQUIRE(decoded.ok());
  CHECK(decoded.value() == v);
}
