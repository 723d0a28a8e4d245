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

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ydow/io.hpp"
#include "ydow/ydow.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

using ydow::io::json;

ydow::Registry const& active_registry() {
#ifdef YDOW_CORRUPT_DIV11
  // Negative-control build: div11 quarters with truncating division.
  static ydow::Registry const corrupted = [] {
    auto methods = ydow::Registry::builtin().methods();
    for (auto& m : methods) {
      if (m.id == "div11") {
        m = ydow::divisor_method("div11", "Division by 11 (truncating)", m.citation, 11, ydow::Rounding::Truncate);
      }
    }
    return ydow::Registry(std::move(methods));
  }();
  return corrupted;
#else
  return ydow::Registry::builtin();
#endif
}

void print_json(json const& j) { std::cout << j.dump(2) << '\n'; }

std::vector<std::string> select_ids(ydow::Registry const& reg, std::string const& method) {
  if (method.empty()) return reg.ids();
  reg.find(method);
  return {method};
}

int run_compute(std::string const& method, int year, bool as_json) {
  auto const& reg = active_registry();
  ydow::Year2 const y(year);
  auto const e = reg.evaluate(method, y);
  if (as_json) {
    print_json(ydow::io::share_json(method, y, e.share));
  } else {
    std::cout << "method:     " << method << '\n'
              << "year:       " << year << '\n'
              << "raw:        " << e.share.raw << '\n'
              << "convention: " << ydow::to_string(e.share.convention) << '\n'
              << "residue:    " << e.share.normalized_positive.value() << '\n';
  }
  return kExitOk;
}

int run_explain(std::string const& method, int year, bool as_json) {
  auto const& reg = active_registry();
  ydow::Year2 const y(year);
  auto const& desc = reg.find(method);
  auto const e = desc.evaluate(y);
  if (as_json) {
    json j = ydow::io::share_json(method, y, e.share);
    j["steps"] = ydow::io::trace_json(e.trace);
    print_json(j);
  } else {
    std::cout << desc.display_name << ", y = " << year << '\n' << ydow::io::render_trace(e.trace);
    std::cout << "Result: " << e.share.raw << " (" << ydow::to_string(e.share.convention) << " share";
    std::cout << ", year share " << e.share.normalized_positive.value() << " mod 7)\n";
  }
  return kExitOk;
}

int run_verify(std::string const& method, bool as_json) {
  auto const& reg = active_registry();
  std::vector<ydow::VerificationReport> reports;
  for (auto const& id : select_ids(reg, method)) reports.push_back(reg.verify_method(id));
  bool all = true;
  for (auto const& r : reports) all = all && r.pass();
  if (as_json) {
    print_json(ydow::io::reports_json(reports));
  } else {
    for (auto const& r : reports) {
      std::cout << (r.pass() ? "PASS " : "FAIL ") << r.method << ' ' << r.passed() << '/' << r.total << '\n';
      for (auto const& f : r.failures) {
        std::cout << "  y=" << f.y << " expected " << f.expected << " got " << f.got << '\n';
      }
    }
  }
  return all ? kExitOk : kExitFailed;
}

int run_derive(int divisor, std::string const& sign, bool as_json) {
  auto const conv = sign == "pos" ? ydow::SignConvention::PositiveShare : ydow::SignConvention::NegativeShare;
  try {
    auto const spec = ydow::derive_divisor_formula(divisor, conv);
    if (as_json) {
      print_json(ydow::io::spec_json(spec));
    } else {
      std::cout << "d = " << divisor << ", " << ydow::to_string(conv) << " year share = " << ydow::formula_string(spec)
                << "  (y = " << divisor << "q + r)\n";
    }
    return kExitOk;
  } catch (ydow::not_representable const& e) {
    if (as_json) {
      print_json({{"d", divisor}, {"sign", sign}, {"representable", false}, {"error", e.what()}});
    } else {
      std::cout << "not representable: " << e.what() << '\n';
    }
    return kExitFailed;
  }
}

int run_table(std::string const& method, std::string const& format) {
  auto const& reg = active_registry();
  auto const rows = ydow::io::method_table(reg.find(method));
  if (format == "csv") {
    std::cout << ydow::io::table_csv(rows);
  } else {
    print_json(ydow::io::table_json(method, rows));
  }
  return kExitOk;
}

int run_cost(std::string const& method, std::string const& model_path, std::string const& format) {
  auto const& reg = active_registry();
  auto const model = model_path.empty() ? ydow::CostModel::defaults() : ydow::io::load_cost_model(model_path);
  auto const rows = reg.cost_report(select_ids(reg, method), model);
  if (format == "csv") {
    std::cout << ydow::io::cost_csv(rows);
  } else {
    print_json(ydow::io::cost_json(model.name, rows));
  }
  return kExitOk;
}

int run_dow(std::string const& date_text, std::string const& method, std::string const& pipeline_name,
            bool proleptic, bool as_json) {
  auto const& reg = active_registry();
  auto const date = ydow::parse_date(date_text);
  auto const pipeline = ydow::pipeline_from_string(pipeline_name);
  if (!pipeline) throw ydow::error("unknown pipeline '" + pipeline_name + "'");
  auto const r = ydow::dow(date, reg.find(method), *pipeline, ydow::CalendarPolicy{proleptic});
  if (as_json) {
    print_json(ydow::io::dow_json(date, method, *pipeline, r));
  } else {
    std::cout << ydow::format_date(date) << ' ' << r.weekday.name() << " (" << r.weekday.number() << ")\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ydow: year-share methods for mental day-of-week calculation"};
  app.require_subcommand(1);

  int year = 0;
  int divisor = 0;
  bool as_json = false;
  bool all = false;
  bool proleptic = false;
  std::string method;
  std::string sign;
  std::string format;
  std::string model_path;
  std::string date_text;
  std::string pipeline = "doomsday";

  auto* compute = app.add_subcommand("compute", "Evaluate one method for a two-digit year");
  compute->add_option("--year", year, "Two-digit year (0-99)")->required();
  compute->add_option("--method", method, "Method id")->required();
  compute->add_flag("--json", as_json, "JSON output");

  auto* explain = app.add_subcommand("explain", "Show the step trace of a method");
  explain->add_option("--year", year, "Two-digit year (0-99)")->required();
  explain->add_option("--method", method, "Method id")->required();
  explain->add_flag("--json", as_json, "JSON output");

  auto* verify = app.add_subcommand("verify", "Check methods against floor(5y/4) mod 7 for every y");
  auto* verify_method = verify->add_option("--method", method, "Method id");
  verify->add_flag("--all", all, "All methods (default)")->excludes(verify_method);
  verify->add_flag("--json", as_json, "JSON output");

  auto* derive = app.add_subcommand("derive", "Derive a divisor formula");
  derive->add_option("--divisor", divisor, "Divisor d (2-28)")->required();
  derive->add_option("--sign", sign, "Desired share sign")->required()->check(CLI::IsMember({"pos", "neg"}));
  derive->add_flag("--json", as_json, "JSON output");

  auto* table = app.add_subcommand("table", "Print y, raw, residue for y = 0..99");
  table->add_option("--method", method, "Method id")->required();
  table->add_option("--format", format, "csv or json")->required()->check(CLI::IsMember({"csv", "json"}));

  auto* cost = app.add_subcommand("cost", "Mental-cost statistics over y = 0..99");
  auto* cost_method = cost->add_option("--method", method, "Method id");
  cost->add_flag("--all", all, "All methods (default)")->excludes(cost_method);
  cost->add_option("--model", model_path, "Cost model JSON file");
  cost->add_option("--format", format, "csv or json")->required()->check(CLI::IsMember({"csv", "json"}));

  auto* dow = app.add_subcommand("dow", "Day of the week of a full date");
  dow->add_option("--date", date_text, "Date as YYYY-MM-DD")->required();
  dow->add_option("--method", method, "Year-share method id (default odd11)");
  dow->add_option("--pipeline", pipeline, "doomsday or first-sunday")
      ->check(CLI::IsMember({"doomsday", "first-sunday"}));
  dow->add_flag("--proleptic", proleptic, "Allow dates before 1583");
  dow->add_flag("--json", as_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*compute) return run_compute(method, year, as_json);
    if (*explain) return run_explain(method, year, as_json);
    if (*verify) return run_verify(method, as_json);
    if (*derive) return run_derive(divisor, sign, as_json);
    if (*table) return run_table(method, format);
    if (*cost) return run_cost(method, model_path, format);
    if (*dow) return run_dow(date_text, method.empty() ? "odd11" : method, pipeline, proleptic, as_json);
  } catch (ydow::error const& e) {
    std::cerr << "ydow: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
