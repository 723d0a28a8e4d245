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
#include <array>
#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ydow/arith.hpp"

namespace ydow {

/// Elementary mental operations. The kind of a step fixes how its result
/// is recomputed from its operands during replay:
///
///   Set          {v}               -> v
///   ParityTest   {v, ref, delta}   -> v + delta if parity(v) != ref, else v
///   AddConst     {a, b, ...}       -> a + b + ...
///   SubConst     {a, b}            -> a - b
///   Halve        {v}               -> v / 2   (v must be even)
///   QuarterFloor {p}               -> floor(p / 4)
///   DivSplit     {y, d, r}         -> q       (y = d*q + r, 0 <= r < d)
///   MulSmall     {a, b}            -> a * b
///   Mod7Reduce   {v}               -> v mod 7
///   SignFlip     {v}               -> -v
enum class StepKind {
  Set,
  ParityTest,
  AddConst,
  SubConst,
  Halve,
  QuarterFloor,
  DivSplit,
  MulSmall,
  Mod7Reduce,
  SignFlip,
};

inline constexpr std::size_t kStepKindCount = 10;

inline constexpr std::array<StepKind, kStepKindCount> kAllStepKinds = {
    StepKind::Set,          StepKind::ParityTest, StepKind::AddConst, StepKind::SubConst,
    StepKind::Halve,        StepKind::QuarterFloor, StepKind::DivSplit, StepKind::MulSmall,
    StepKind::Mod7Reduce,   StepKind::SignFlip,
};

constexpr std::string_view to_string(StepKind k) {
  switch (k) {
    case StepKind::Set: return "Set";
    case StepKind::ParityTest: return "ParityTest";
    case StepKind::AddConst: return "AddConst";
    case StepKind::SubConst: return "SubConst";
    case StepKind::Halve: return "Halve";
    case StepKind::QuarterFloor: return "QuarterFloor";
    case StepKind::DivSplit: return "DivSplit";
    case StepKind::MulSmall: return "MulSmall";
    case StepKind::Mod7Reduce: return "Mod7Reduce";
    case StepKind::SignFlip: return "SignFlip";
  }
  return "?";
}

inline std::optional<StepKind> step_kind_from_string(std::string_view name) {
  for (StepKind k : kAllStepKinds) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

struct Step {
  StepKind kind = StepKind::Set;
  std::string description;
  std::vector<int> operands;
  int result = 0;
  // Elementary operations charged by the cost model. Empty means {kind}.
  std::vector<StepKind> charges;
};

struct StepTrace {
  std::vector<Step> steps;

  bool empty() const { return steps.empty(); }
  std::size_t size() const { return steps.size(); }
  Step const& back() const { return steps.back(); }

  int push(StepKind kind, std::string description, std::vector<int> operands, int result,
           std::vector<StepKind> charges = {}) {
    steps.push_back(Step{kind, std::move(description), std::move(operands), result, std::move(charges)});
    return result;
  }
};

/// Recomputes a single step from its operand snapshot. Returns nullopt when
/// the operands do not fit the kind (wrong arity, odd value halved, bad split).
inline std::optional<int> recompute(Step const& s) {
  auto const& o = s.operands;
  auto parity = [](int v) { return floor_mod(v, 2); };
  switch (s.kind) {
    case StepKind::Set:
      if (o.size() != 1) return std::nullopt;
      return o[0];
    case StepKind::ParityTest:
      if (o.size() != 3 || (o[1] != 0 && o[1] != 1)) return std::nullopt;
      return parity(o[0]) != o[1] ? o[0] + o[2] : o[0];
    case StepKind::AddConst: {
      if (o.size() < 2) return std::nullopt;
      int sum = 0;
      for (int v : o) sum += v;
      return sum;
    }
    case StepKind::SubConst:
      if (o.size() != 2) return std::nullopt;
      return o[0] - o[1];
    case StepKind::Halve:
      if (o.size() != 1 || parity(o[0]) != 0) return std::nullopt;
      return o[0] / 2;
    case StepKind::QuarterFloor:
      if (o.size() != 1) return std::nullopt;
      return floor_div(o[0], 4);
    case StepKind::DivSplit: {
      if (o.size() != 3 || o[1] < 1 || o[2] < 0 || o[2] >= o[1]) return std::nullopt;
      if ((o[0] - o[2]) % o[1] != 0) return std::nullopt;
      return (o[0] - o[2]) / o[1];
    }
    case StepKind::MulSmall:
      if (o.size() != 2) return std::nullopt;
      return o[0] * o[1];
    case StepKind::Mod7Reduce:
      if (o.size() != 1) return std::nullopt;
      return mod7(o[0]).value();
    case StepKind::SignFlip:
      if (o.size() != 1) return std::nullopt;
      return -o[0];
  }
  return std::nullopt;
}

/// Re-executes every step. Returns the recomputed result of the final step,
/// or nullopt if the trace is empty or any step disagrees with its snapshot.
inline std::optional<int> replay(StepTrace const& trace) {
  if (trace.empty()) return std::nullopt;
  std::optional<int> last;
  for (Step const& s : trace.steps) {
    last = recompute(s);
    if (!last || *last != s.result) return std::nullopt;
  }
  return last;
}

/// Largest absolute value among all operands and results of a trace.
inline int max_magnitude(StepTrace const& trace) {
  int m = 0;
  for (Step const& s : trace.steps) {
    m = std::max(m, std::abs(s.result));
    for (int v : s.operands) m = std::max(m, std::abs(v));
  }
  return m;
}

/// Smallest and largest step result, i.e. the range of running values.
inline std::pair<int, int> value_range(StepTrace const& trace) {
  int lo = 0, hi = 0;
  bool first = true;
  auto take = [&](int v) {
    if (first) {
      lo = hi = v;
      first = false;
    } else {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  };
  for (Step const& s : trace.steps) take(s.result);
  return {lo, hi};
}

/// Per-operation weights for estimating the mental effort of a trace.
struct CostModel {
  std::string name = "default";
  std::array<int, kStepKindCount> weights{};

  int weight(StepKind k) const { return weights[static_cast<std::size_t>(k)]; }
  void set(StepKind k, int w) {
    if (w < 0) throw error("cost weight for " + std::string(to_string(k)) + " must be nonnegative");
    weights[static_cast<std::size_t>(k)] = w;
  }

  static CostModel defaults() {
    CostModel m;
    m.name = "default";
    m.set(StepKind::Set, 0);
    m.set(StepKind::ParityTest, 1);
    m.set(StepKind::AddConst, 1);
    m.set(StepKind::SubConst, 1);
    m.set(StepKind::Halve, 2);
    m.set(StepKind::QuarterFloor, 3);
    m.set(StepKind::DivSplit, 3);
    m.set(StepKind::MulSmall, 2);
    m.set(StepKind::Mod7Reduce, 2);
    m.set(StepKind::SignFlip, 1);
    return m;
  }
};

inline int trace_cost(StepTrace const& trace, CostModel const& model) {
  int total = 0;
  for (Step const& s : trace.steps) {
    if (s.charges.empty()) {
      total += model.weight(s.kind);
    } else {
      for (StepKind k : s.charges) total += model.weight(k);
    }
  }
  return total;
}

/// A method's share together with the steps that produced it.
struct Evaluation {
  ShareResult share;
  StepTrace trace;
};

}  // namespace ydow
