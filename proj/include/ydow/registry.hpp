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

#pragma once

#include <algorithm>
#include <functional>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ydow/arith.hpp"
#include "ydow/digit.hpp"
#include "ydow/divisor.hpp"
#include "ydow/special.hpp"
#include "ydow/trace.hpp"

namespace ydow {

class unknown_method : public error {
 public:
  using error::error;
};

enum class Category { Special, Divisor, Digit };

constexpr std::string_view to_string(Category c) {
  switch (c) {
    case Category::Special: return "special";
    case Category::Divisor: return "divisor";
    case Category::Digit: return "digit";
  }
  return "?";
}

using MethodFn = std::function<Evaluation(Year2)>;

struct MethodDescriptor {
  std::string id;
  std::string display_name;
  Category category = Category::Special;
  SignConvention convention = SignConvention::PositiveShare;
  std::string citation;
  MethodFn evaluate;
};

struct VerificationFailure {
  int y;
  int expected;
  int got;
  friend bool operator==(VerificationFailure const&, VerificationFailure const&) = default;
};

struct VerificationReport {
  std::string method;
  int total = 0;
  std::vector<VerificationFailure> failures;

  bool pass() const { return failures.empty(); }
  int passed() const { return total - static_cast<int>(failures.size()); }
};

/// Checks `fn` against the oracle for every two-digit year.
inline VerificationReport verify_function(std::string name, MethodFn const& fn) {
  VerificationReport report{std::move(name), 0, {}};
  for (int v = 0; v <= 99; ++v) {
    Year2 const y(v);
    int const expected = oracle_year_share(y).value();
    int const got = fn(y).share.normalized_positive.value();
    ++report.total;
    if (got != expected) report.failures.push_back({v, expected, got});
  }
  return report;
}

inline VerificationReport verify_spec(DivisorSpec const& spec, Rounding rounding = Rounding::Floor) {
  return verify_function("d=" + std::to_string(spec.d) + " " + formula_string(spec),
                         [spec, rounding](Year2 y) { return eval_divisor(spec, y, rounding); });
}

struct CostRow {
  std::string method;
  int min_cost = 0;
  int max_cost = 0;
  double mean_cost = 0.0;
  int max_intermediate = 0;
};

/// Immutable set of methods keyed by id.
class Registry {
 public:
  explicit Registry(std::vector<MethodDescriptor> methods) : methods_(std::move(methods)) {
    for (std::size_t i = 0; i < methods_.size(); ++i) {
      if (!methods_[i].evaluate) throw error("method '" + methods_[i].id + "' has no evaluate function");
      for (std::size_t j = 0; j < i; ++j) {
        if (methods_[i].id == methods_[j].id) throw error("duplicate method id '" + methods_[i].id + "'");
      }
    }
  }

  /// The fourteen shipped methods.
  static Registry const& builtin();

  std::vector<MethodDescriptor> const& methods() const { return methods_; }

  std::vector<std::string> ids() const {
    std::vector<std::string> out;
    out.reserve(methods_.size());
    for (auto const& m : methods_) out.push_back(m.id);
    return out;
  }

  bool contains(std::string_view id) const {
    return std::any_of(methods_.begin(), methods_.end(), [&](auto const& m) { return m.id == id; });
  }

  MethodDescriptor const& find(std::string_view id) const {
    for (auto const& m : methods_) {
      if (m.id == id) return m;
    }
    throw unknown_method("unknown method '" + std::string(id) + "'");
  }

  Evaluation evaluate(std::string_view id, Year2 y) const { return find(id).evaluate(y); }

  VerificationReport verify_method(std::string_view id) const {
    auto const& m = find(id);
    return verify_function(m.id, m.evaluate);
  }

  /// Reports in registry order.
  std::vector<VerificationReport> verify_all() const {
    std::vector<VerificationReport> out;
    for (auto const& m : methods_) out.push_back(verify_function(m.id, m.evaluate));
    return out;
  }

  std::vector<CostRow> cost_report(std::vector<std::string> const& ids, CostModel const& model) const {
    std::vector<CostRow> rows;
    for (auto const& id : ids) {
      auto const& m = find(id);
      CostRow row{m.id, std::numeric_limits<int>::max(), 0, 0.0, 0};
      long total = 0;
      for (int v = 0; v <= 99; ++v) {
        Evaluation const e = m.evaluate(Year2(v));
        int const c = trace_cost(e.trace, model);
        row.min_cost = std::min(row.min_cost, c);
        row.max_cost = std::max(row.max_cost, c);
        row.max_intermediate = std::max(row.max_intermediate, max_magnitude(e.trace));
        total += c;
      }
      row.mean_cost = static_cast<double>(total) / 100.0;
      rows.push_back(row);
    }
    return rows;
  }

 private:
  std::vector<MethodDescriptor> methods_;
};

inline MethodDescriptor divisor_method(std::string id, std::string display_name, std::string citation, int d,
                                       Rounding rounding = Rounding::Floor) {
  DivisorSpec const spec = builtin_divisor_spec(d);
  return {std::move(id),      std::move(display_name),
          Category::Divisor,  spec.convention,
          std::move(citation), [spec, rounding](Year2 y) { return eval_divisor(spec, y, rounding); }};
}

inline Registry const& Registry::builtin() {
  static Registry const registry(std::vector<MethodDescriptor>{
      {"odd11", "Odd+11", Category::Special, SignConvention::NegativeShare, "M. Walters; C. Fong and M. Walters (2011)",
       odd11},
      {"parity3", "Parity Minus 3", Category::Special, SignConvention::NegativeShare, "variant of Odd+11", parity3},
      divisor_method("div4", "Division by 4 (Highest Multiple of Four)", "Y. Yu; C. Willmann", 4),
      divisor_method("div5", "Division by 5", "divisor family", 5),
      divisor_method("div11", "Division by 11", "divisor family", 11),
      divisor_method("div12", "Division by 12 (dozens)", "L. Carroll; J. H. Conway", 12),
      divisor_method("div16", "Division by 16", "divisor family", 16),
      divisor_method("div17", "Division by 17", "divisor family", 17),
      {"eisele", "Digits of 4q (Eisele)", Category::Digit, SignConvention::PositiveShare, "M. Eisele", eisele},
      {"harringer", "Digits of 4q (Harringer)", Category::Digit, SignConvention::PositiveShare, "A. Harringer",
       harringer},
      {"digits-aa", "Digits (Aa)", Category::Digit, SignConvention::NegativeShare, "tens/units digits", digits_aa},
      {"fong", "Digits (Fong)", Category::Digit, SignConvention::PositiveShare, "C. Fong; Y. Yu", fong},
      {"wang", "Digits (Wang)", Category::Digit, SignConvention::PositiveShare, "X.-S. Wang", wang},
      {"digits-ab", "Digits (Ab)", Category::Digit, SignConvention::NegativeShare, "tens/units digits, signed",
       digits_ab},
  });
  return registry;
}

}  // namespace ydow
