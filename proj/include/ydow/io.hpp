// Copyright 2026 The ydow Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// JSON and CSV encodings used by the ydow command. The schemas are listed
// in docs/formats.md.

#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "ydow/calendar.hpp"
#include "ydow/divisor.hpp"
#include "ydow/dow.hpp"
#include "ydow/registry.hpp"
#include "ydow/trace.hpp"

namespace ydow::io {

using nlohmann::json;

inline std::string sign_code(SignConvention c) { return c == SignConvention::PositiveShare ? "pos" : "neg"; }

inline json share_json(std::string const& method, Year2 y, ShareResult const& r) {
  return {{"method", method},
          {"year", y.value()},
          {"raw", r.raw},
          {"convention", std::string(to_string(r.convention))},
          {"raw_residue", r.raw_residue().value()},
          {"normalized", r.normalized_positive.value()}};
}

inline json trace_json(StepTrace const& tr) {
  json steps = json::array();
  for (Step const& s : tr.steps) {
    steps.push_back({{"kind", std::string(to_string(s.kind))},
                     {"description", s.description},
                     {"operands", s.operands},
                     {"result", s.result}});
  }
  return steps;
}

/// "Step 1: ..." lines, one per step.
inline std::string render_trace(StepTrace const& tr) {
  std::ostringstream out;
  int n = 0;
  for (Step const& s : tr.steps) out << "Step " << ++n << ": " << s.description << '\n';
  return out.str();
}

inline json spec_json(DivisorSpec const& s) {
  return {{"d", s.d},           {"sign", sign_code(s.convention)}, {"alpha", s.coef_q},  {"beta", s.coef_r},
          {"gamma", s.coef_floor}, {"delta_q", s.inner_q},            {"delta_r", s.inner_r}};
}

inline DivisorSpec spec_from_json(json const& j) {
  DivisorSpec s;
  s.d = j.at("d").get<int>();
  std::string const sign = j.at("sign").get<std::string>();
  if (sign != "pos" && sign != "neg") throw error("sign must be 'pos' or 'neg'");
  s.convention = sign == "pos" ? SignConvention::PositiveShare : SignConvention::NegativeShare;
  s.coef_q = j.at("alpha").get<int>();
  s.coef_r = j.at("beta").get<int>();
  s.coef_floor = j.at("gamma").get<int>();
  s.inner_q = j.at("delta_q").get<int>();
  s.inner_r = j.at("delta_r").get<int>();
  validate(s);
  return s;
}

inline json report_json(VerificationReport const& r) {
  json failures = json::array();
  for (auto const& f : r.failures) failures.push_back({{"y", f.y}, {"expected", f.expected}, {"got", f.got}});
  return {{"method", r.method}, {"total", r.total}, {"passed", r.passed()}, {"pass", r.pass()}, {"failures", failures}};
}

inline json reports_json(std::vector<VerificationReport> const& reports) {
  json arr = json::array();
  bool all = true;
  for (auto const& r : reports) {
    arr.push_back(report_json(r));
    all = all && r.pass();
  }
  return {{"all_pass", all}, {"reports", arr}};
}

/// One row per report: method,total,passed,failed,pass.
inline std::string reports_csv(std::vector<VerificationReport> const& reports) {
  std::ostringstream out;
  out << "method,total,passed,failed,pass\n";
  for (auto const& r : reports) {
    out << r.method << ',' << r.total << ',' << r.passed() << ',' << r.failures.size() << ','
        << (r.pass() ? "true" : "false") << '\n';
  }
  return out.str();
}

struct TableRow {
  int y;
  int raw;
  int residue;
};

inline std::vector<TableRow> method_table(MethodDescriptor const& m) {
  std::vector<TableRow> rows;
  for (int v = 0; v <= 99; ++v) {
    ShareResult const r = m.evaluate(Year2(v)).share;
    rows.push_back({v, r.raw, r.normalized_positive.value()});
  }
  return rows;
}

inline std::string table_csv(std::vector<TableRow> const& rows) {
  std::ostringstream out;
  out << "y,raw,residue\n";
  for (auto const& r : rows) out << r.y << ',' << r.raw << ',' << r.residue << '\n';
  return out.str();
}

inline json table_json(std::string const& method, std::vector<TableRow> const& rows) {
  json arr = json::array();
  for (auto const& r : rows) arr.push_back({{"y", r.y}, {"raw", r.raw}, {"residue", r.residue}});
  return {{"method", method}, {"rows", arr}};
}

inline std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

inline std::string cost_csv(std::vector<CostRow> const& rows) {
  std::ostringstream out;
  out << "method,min_cost,max_cost,mean_cost,max_intermediate\n";
  for (auto const& r : rows) {
    out << r.method << ',' << r.min_cost << ',' << r.max_cost << ',' << fixed2(r.mean_cost) << ','
        << r.max_intermediate << '\n';
  }
  return out.str();
}

inline json cost_json(std::string const& model, std::vector<CostRow> const& rows) {
  json arr = json::array();
  for (auto const& r : rows) {
    arr.push_back({{"method", r.method},
                   {"min_cost", r.min_cost},
                   {"max_cost", r.max_cost},
                   {"mean_cost", r.mean_cost},
                   {"max_intermediate", r.max_intermediate}});
  }
  return {{"model", model}, {"rows", arr}};
}

/// {"name": "...", "weights": {"Halve": 2, ...}}. Kinds not listed keep
/// their default weight.
inline CostModel cost_model_from_json(json const& j) {
  CostModel m = CostModel::defaults();
  m.name = j.value("name", std::string("custom"));
  if (j.contains("weights")) {
    for (auto const& [key, value] : j.at("weights").items()) {
      auto const kind = step_kind_from_string(key);
      if (!kind) throw error("unknown step kind '" + key + "' in cost model");
      if (!value.is_number_integer()) throw error("weight for '" + key + "' must be an integer");
      m.set(*kind, value.get<int>());
    }
  }
  return m;
}

inline CostModel load_cost_model(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open cost model '" + path + "'");
  try {
    return cost_model_from_json(json::parse(in));
  } catch (json::exception const& e) {
    throw error("invalid cost model '" + path + "': " + e.what());
  }
}

inline json dow_json(CivilDate date, std::string const& method, PipelineId pipeline, DowResult const& r) {
  return {{"date", format_date(date)},
          {"method", method},
          {"pipeline", std::string(to_string(pipeline))},
          {"weekday", std::string(r.weekday.name())},
          {"number", r.weekday.number()}};
}

}  // namespace ydow::io
