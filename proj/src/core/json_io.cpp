// SPDX-License-Identifier: Apache-2.0
#include "formplan/core/json_io.hpp"

#include "formplan/common/util.hpp"

namespace formplan::core {

namespace {

using R_Input = Result<ProblemInput, DecodeError>;
using R_Def = Result<ProblemDefinition, DecodeError>;
using R_Var = Result<IRVariable, DecodeError>;
using R_IR = Result<FormulationIR, DecodeError>;
using R_Assess = Result<AssessmentReport, DecodeError>;
using R_Plan = Result<PlanResult, DecodeError>;

constexpr const char* kSchemaVersion = "1";

json data_source_to_json(const std::vector<std::string>& refs) {
  // The wire format joins references with ", " (matching exhibited outputs).
  return util::join(refs, ", ");
}

std::vector<std::string> data_source_from_json(const json& j) {
  std::vector<std::string> out;
  if (j.is_string()) {
    for (auto& part : util::split(j.get<std::string>(), ',')) {
      auto t = util::trim(part);
      if (!t.empty()) out.push_back(t);
    }
  } else if (j.is_array()) {
    for (const auto& e : j)
      if (e.is_string()) out.push_back(util::trim(e.get<std::string>()));
  }
  return out;
}

} // namespace

json encode(const ProblemInput& input) {
  json tables = json::object();
  json order = json::array();
  for (const auto& [name, value] : input.background.tables) {
    tables[name] = value;
    order.push_back(name);
  }
  json apis = json::array();
  for (const auto& api : input.background.apis)
    apis.push_back({{"name", api.name}, {"arity", api.arity}, {"doc", api.doc}});
  json j = {
      {"task_description", input.task_description},
      {"background", {{"tables", tables}, {"table_order", order}, {"apis", apis}}},
      {"query", input.query},
  };
  if (input.domain_id) j["domain_id"] = *input.domain_id;
  return j;
}

Result<ProblemInput, DecodeError> decode_problem_input(const json& j) {
  if (!j.is_object()) return R_Input::err({"problem input must be an object"});
  ProblemInput input;
  if (!j.contains("task_description") || !j["task_description"].is_string())
    return R_Input::err({"missing task_description"});
  input.task_description = j["task_description"].get<std::string>();
  if (!j.contains("query") || !j["query"].is_string()) return R_Input::err({"missing query"});
  input.query = j["query"].get<std::string>();
  if (j.contains("domain_id") && j["domain_id"].is_string())
    input.domain_id = j["domain_id"].get<std::string>();
  if (j.contains("background")) {
    const auto& bg = j["background"];
    if (bg.contains("tables") && bg["tables"].is_object()) {
      std::vector<std::string> order;
      if (bg.contains("table_order") && bg["table_order"].is_array())
        for (const auto& n : bg["table_order"]) order.push_back(n.get<std::string>());
      else
        for (auto it = bg["tables"].begin(); it != bg["tables"].end(); ++it)
          order.push_back(it.key());
      for (const auto& name : order) {
        if (!bg["tables"].contains(name)) return R_Input::err({"table_order names unknown table " + name});
        input.background.tables.emplace_back(name, bg["tables"][name]);
      }
    }
    if (bg.contains("apis") && bg["apis"].is_array()) {
      for (const auto& a : bg["apis"]) {
        ApiEntry api;
        api.name = a.value("name", "");
        api.arity = a.value("arity", 0);
        api.doc = a.value("doc", "");
        input.background.apis.push_back(api);
      }
    }
  }
  if (input.task_description.empty()) return R_Input::err({"task_description is empty"});
  if (input.query.empty()) return R_Input::err({"query is empty"});
  std::set<std::string> seen;
  for (const auto& name : input.background.names())
    if (!seen.insert(name).second) return R_Input::err({"duplicate background name " + name});
  return R_Input::ok(std::move(input));
}

json encode(const ProblemDefinition& def) {
  return {
      {"goal", def.goal},
      {"decision_variables", def.decision_variables},
      {"constraint_reasoning", def.constraint_reasoning},
      {"constraints", def.constraints},
  };
}

Result<ProblemDefinition, DecodeError> decode_problem_definition(const json& j) {
  if (!j.is_object()) return R_Def::err({"definition must be an object"});
  ProblemDefinition def;
  def.goal = j.value("goal", "");
  def.constraint_reasoning = j.value("constraint_reasoning", "");
  if (j.contains("decision_variables"))
    for (const auto& v : j["decision_variables"]) def.decision_variables.push_back(v.get<std::string>());
  if (j.contains("constraints"))
    for (const auto& v : j["constraints"]) def.constraints.push_back(v.get<std::string>());
  return R_Def::ok(std::move(def));
}

json encode(const IRVariable& var) {
  json j = json::object();
  j["name"] = var.name ? json(*var.name) : json(nullptr);
  j["SMT_variable"] = var.smt_variable ? json(*var.smt_variable) : json(nullptr);
  if (var.number_of_variables) {
    // Integer literals round-trip as JSON numbers, expressions as strings.
    const std::string& text = *var.number_of_variables;
    bool all_digits = !text.empty() && text.size() <= 18 &&
                      text.find_first_not_of("0123456789") == std::string::npos;
    j["number_of_variables"] = all_digits ? json(std::stoll(text)) : json(text);
  } else {
    j["number_of_variables"] = nullptr;
  }
  j["data_source"] = var.data_source ? data_source_to_json(*var.data_source) : json(nullptr);
  const char* value_key = var.value_as_how_to_pick ? "how_to_pick" : "value";
  j[value_key] = var.value ? json(*var.value) : json(nullptr);
  j["specific_requirement"] =
      var.specific_requirement ? json(*var.specific_requirement) : json(nullptr);
  return j;
}

Result<IRVariable, DecodeError> decode_ir_variable(const json& j) {
  if (!j.is_object()) return R_Var::err({"variable entry must be an object"});
  IRVariable var;
  for (auto it = j.begin(); it != j.end(); ++it) var.present_keys.insert(it.key());
  if (j.contains("name") && j["name"].is_string()) var.name = j["name"].get<std::string>();
  if (j.contains("SMT_variable") && j["SMT_variable"].is_boolean())
    var.smt_variable = j["SMT_variable"].get<bool>();
  if (j.contains("number_of_variables")) {
    const auto& n = j["number_of_variables"];
    if (n.is_number_integer())
      var.number_of_variables = std::to_string(n.get<long long>());
    else if (n.is_string())
      var.number_of_variables = n.get<std::string>();
  }
  if (j.contains("data_source") && !j["data_source"].is_null())
    var.data_source = data_source_from_json(j["data_source"]);
  if (j.contains("how_to_pick")) {
    var.value_as_how_to_pick = true;
    if (j["how_to_pick"].is_string()) var.value = j["how_to_pick"].get<std::string>();
    var.present_keys.erase("how_to_pick");
    var.present_keys.insert("value");
  } else if (j.contains("value") && j["value"].is_string()) {
    var.value = j["value"].get<std::string>();
  }
  if (j.contains("specific_requirement") && j["specific_requirement"].is_string())
    var.specific_requirement = j["specific_requirement"].get<std::string>();
  return R_Var::ok(std::move(var));
}

json encode(const FormulationIR& ir) {
  json j = json::object();
  if (ir.kind == FormulationKind::single_step) {
    for (const auto& [id, var] : ir.sections.front().vars) j[id] = encode(var);
  } else {
    for (const auto& section : ir.sections) {
      json vars = json::object();
      for (const auto& [id, var] : section.vars) vars[id] = encode(var);
      j[section.name] = vars;
    }
  }
  return j;
}

namespace {

Result<IRSection, DecodeError> decode_section(const std::string& name, const json& j) {
  using R = Result<IRSection, DecodeError>;
  IRSection section;
  section.name = name;
  if (!j.is_object()) return R::err({"section " + name + " must be an object"});
  for (auto it = j.begin(); it != j.end(); ++it) {
    auto var = decode_ir_variable(it.value());
    if (!var.ok()) return R::err(var.error());
    section.vars.emplace_back(it.key(), std::move(var.value()));
  }
  return R::ok(std::move(section));
}

} // namespace

Result<FormulationIR, DecodeError> decode_formulation(const json& j) {
  if (!j.is_object()) return R_IR::err({"formulation must be a JSON object"});
  FormulationIR ir;
  bool multi = true;
  int section_hits = 0;
  for (const char* name : kMultiStepSections)
    if (j.contains(name) && j[name].is_object()) ++section_hits;
  multi = section_hits >= 2; // tolerate missing sections; validation reports them
  if (multi) {
    ir.kind = FormulationKind::multi_step;
    for (const char* name : kMultiStepSections) {
      if (!j.contains(name)) continue;
      auto section = decode_section(name, j[name]);
      if (!section.ok()) return R_IR::err(section.error());
      ir.sections.push_back(std::move(section.value()));
    }
  } else {
    ir.kind = FormulationKind::single_step;
    auto section = decode_section("", j);
    if (!section.ok()) return R_IR::err(section.error());
    ir.sections.push_back(std::move(section.value()));
  }
  return R_IR::ok(std::move(ir));
}

json encode(const AssessmentReport& report) {
  json j = {
      {"step_ratings", report.step_ratings},
      {"reasoning", report.reasoning},
  };
  if (report.modification) {
    j["modification"] = {
        {"step", static_cast<int>(report.modification->step)},
        {"artifact", report.modification->artifact_text},
    };
  } else {
    j["modification"] = nullptr;
  }
  return j;
}

Result<AssessmentReport, DecodeError> decode_assessment(const json& j) {
  if (!j.is_object()) return R_Assess::err({"assessment must be an object"});
  AssessmentReport report;
  if (j.contains("step_ratings") && j["step_ratings"].is_array() && j["step_ratings"].size() == 3)
    for (int i = 0; i < 3; ++i) report.step_ratings[static_cast<size_t>(i)] = j["step_ratings"][static_cast<size_t>(i)].get<int>();
  if (j.contains("reasoning") && j["reasoning"].is_array() && j["reasoning"].size() == 3)
    for (int i = 0; i < 3; ++i) report.reasoning[static_cast<size_t>(i)] = j["reasoning"][static_cast<size_t>(i)].get<std::string>();
  if (j.contains("modification") && j["modification"].is_object()) {
    Modification mod;
    mod.step = static_cast<AssessedStep>(j["modification"].value("step", 0));
    mod.artifact_text = j["modification"].value("artifact", "");
    report.modification = std::move(mod);
  }
  return R_Assess::ok(std::move(report));
}

json encode(const PlanResult& result, bool include_timings) {
  json trace = json::array();
  for (const auto& entry : result.stage_trace) {
    trace.push_back({
        {"stage", entry.stage},
        {"attempt", entry.attempt},
        {"duration_s", include_timings ? entry.duration_s : 0.0},
        {"prompt_tokens", entry.prompt_tokens},
        {"completion_tokens", entry.completion_tokens},
        {"note", entry.note},
    });
  }
  json assessments = json::array();
  for (const auto& a : result.assessments) assessments.push_back(encode(a));
  return {
      {"schema_version", kSchemaVersion},
      {"status", plan_status_name(result.status)},
      {"plan", result.plan ? *result.plan : json(nullptr)},
      {"objective_value", result.objective_value ? json(*result.objective_value) : json(nullptr)},
      {"horizon", result.horizon ? json(*result.horizon) : json(nullptr)},
      {"stage_trace", trace},
      {"assessments", assessments},
  };
}

bool semantic_equal(const json& a, const json& b) {
  if (a.is_object() && b.is_object()) {
    if (a.size() != b.size()) return false;
    for (auto it = a.begin(); it != a.end(); ++it) {
      if (!b.contains(it.key())) return false;
      if (!semantic_equal(it.value(), b[it.key()])) return false;
    }
    return true;
  }
  if (a.is_array() && b.is_array()) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
      if (!semantic_equal(a[i], b[i])) return false;
    return true;
  }
  if (a.is_number() && b.is_number())
    return a.get<double>() == b.get<double>();
  return a == b;
}

Result<PlanResult, DecodeError> decode_plan_result(const json& j) {
  if (!j.is_object()) return R_Plan::err({"plan result must be an object"});
  PlanResult result;
  std::string status = j.value("status", "");
  if (status == "plan")
    result.status = PlanStatus::plan;
  else if (status == "infeasible")
    result.status = PlanStatus::infeasible;
  else if (status == "runtime_error")
    result.status = PlanStatus::runtime_error;
  else if (status == "budget_exhausted")
    result.status = PlanStatus::budget_exhausted;
  else
    return R_Plan::err({"unknown status " + status});
  if (j.contains("plan") && !j["plan"].is_null()) result.plan = j["plan"];
  if (j.contains("objective_value") && j["objective_value"].is_number())
    result.objective_value = j["objective_value"].get<double>();
  if (j.contains("horizon") && j["horizon"].is_number_integer())
    result.horizon = j["horizon"].get<int>();
  if (j.contains("stage_trace"))
    for (const auto& e : j["stage_trace"]) {
      StageTraceEntry entry;
      entry.stage = e.value("stage", "");
      entry.attempt = e.value("attempt", 1);
      entry.duration_s = e.value("duration_s", 0.0);
      entry.prompt_tokens = e.value("prompt_tokens", 0L);
      entry.completion_tokens = e.value("completion_tokens", 0L);
      entry.note = e.value("note", "");
      result.stage_trace.push_back(std::move(entry));
    }
  if (j.contains("assessments"))
    for (const auto& a : j["assessments"]) {
      auto report = decode_assessment(a);
      if (!report.ok()) return R_Plan::err(report.error());
      result.assessments.push_back(std::move(report.value()));
    }
  return R_Plan::ok(std::move(result));
}

} // namespace formplan::core
