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

// Divisor-family year shares. Writing y = d*q + r (0 <= r < d), every
// method here evaluates
//
//   alpha*q + beta*r + gamma*floor((delta_q*q + delta_r*r) / 4)
//
// and the coefficients live in a DivisorSpec record.

#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "ydow/arith.hpp"
#include "ydow/trace.hpp"

namespace ydow {

class not_representable : public error {
 public:
  using error::error;
};

struct DivisorSpec {
  int d = 2;
  SignConvention convention = SignConvention::PositiveShare;
  int coef_q = 0;      // alpha
  int coef_r = 1;      // beta
  int coef_floor = 0;  // gamma, in {-1, 0, 1}
  int inner_q = 0;     // delta_q
  int inner_r = 0;     // delta_r

  friend bool operator==(DivisorSpec const&, DivisorSpec const&) = default;
};

inline void validate(DivisorSpec const& spec) {
  if (spec.d < 2) throw invalid_divisor("divisor must be >= 2, got " + std::to_string(spec.d));
  if (spec.coef_floor < -1 || spec.coef_floor > 1) {
    throw error("floor coefficient must be -1, 0 or 1, got " + std::to_string(spec.coef_floor));
  }
}

struct QuotRem {
  int q;
  int r;
  friend bool operator==(QuotRem, QuotRem) = default;
};

inline QuotRem divmod_split(Year2 y, int d) {
  if (d < 2) throw invalid_divisor("divisor must be >= 2, got " + std::to_string(d));
  int const q = floor_div(y.value(), d);
  return {q, y.value() - d * q};
}

/// Rounding used for the quarter term. Only Floor is correct; Truncate
/// exists to build negative controls.
enum class Rounding { Floor, Truncate };

/// Formula value without tracing.
inline int divisor_value(DivisorSpec const& spec, int q, int r, Rounding rounding = Rounding::Floor) {
  int const inner = spec.inner_q * q + spec.inner_r * r;
  int const quarter = rounding == Rounding::Floor ? floor_div(inner, 4) : trunc_div(inner, 4);
  return spec.coef_q * q + spec.coef_r * r + spec.coef_floor * quarter;
}

namespace detail {

struct SignedTerm {
  int value;
  bool negative;
  std::string label;
};

// |coef| * value, multiplied out as a step when |coef| > 1.
inline std::optional<SignedTerm> scaled(StepTrace& tr, int coef, int value, std::string const& name) {
  if (coef == 0) return std::nullopt;
  int const mag = std::abs(coef);
  if (mag == 1) return SignedTerm{value, coef < 0, name};
  int const prod = tr.push(StepKind::MulSmall,
                           std::to_string(mag) + name + " = " + std::to_string(mag) + "*" + std::to_string(value) +
                               " = " + std::to_string(mag * value),
                           {mag, value}, mag * value);
  return SignedTerm{prod, coef < 0, std::to_string(mag) + name};
}

// Sums signed terms left to right, positive terms first so that a sign flip
// is only needed when every term is subtracted. The last step's result is
// always the sum.
inline int fold(StepTrace& tr, std::vector<SignedTerm> terms, std::string const& what) {
  std::stable_partition(terms.begin(), terms.end(), [](SignedTerm const& t) { return !t.negative; });
  if (terms.empty()) {
    return tr.push(StepKind::Set, what + " = 0", {0}, 0);
  }
  int acc = terms.front().value;
  std::string expr = terms.front().label;
  bool fresh = false;
  if (terms.front().negative) {
    acc = tr.push(StepKind::SignFlip, what + " = -" + expr + " = " + std::to_string(-acc), {acc}, -acc);
    expr = "-" + expr;
    fresh = true;
  }
  for (std::size_t i = 1; i < terms.size(); ++i) {
    SignedTerm const& t = terms[i];
    expr += (t.negative ? " - " : " + ") + t.label;
    int const next = t.negative ? acc - t.value : acc + t.value;
    acc = tr.push(t.negative ? StepKind::SubConst : StepKind::AddConst,
                  what + " = " + expr + " = " + std::to_string(acc) + (t.negative ? " - " : " + ") +
                      std::to_string(t.value) + " = " + std::to_string(next),
                  {acc, t.value}, next);
    fresh = true;
  }
  if (!fresh) {
    acc = tr.push(StepKind::Set, what + " = " + expr + " = " + std::to_string(acc), {acc}, acc);
  }
  return acc;
}

inline std::string split_text(int y, int d, int q, int r) {
  std::string const ys = std::to_string(y), qs = std::to_string(q), rs = std::to_string(r);
  if (d == 12) return ys + " holds " + qs + " dozen(s), remainder " + rs + ": q = " + qs + ", r = " + rs;
  if (d == 4) {
    return "highest multiple of four not above " + ys + " is " + std::to_string(4 * q) + " = 4*" + qs +
           ", remainder " + rs;
  }
  return ys + " = " + std::to_string(d) + "*" + qs + " + " + rs + ": q = " + qs + ", r = " + rs;
}

}  // namespace detail

/// Evaluates a divisor spec for `y` and records the mental steps.
inline Evaluation eval_divisor(DivisorSpec const& spec, Year2 y, Rounding rounding = Rounding::Floor) {
  validate(spec);
  auto const [q, r] = divmod_split(y, spec.d);
  StepTrace tr;
  tr.push(StepKind::DivSplit, detail::split_text(y.value(), spec.d, q, r), {y.value(), spec.d, r}, q,
          {StepKind::DivSplit});

  std::vector<detail::SignedTerm> terms;
  if (auto t = detail::scaled(tr, spec.coef_q, q, "q")) terms.push_back(*t);
  if (auto t = detail::scaled(tr, spec.coef_r, r, "r")) terms.push_back(*t);

  if (spec.coef_floor != 0) {
    std::vector<detail::SignedTerm> inner_terms;
    if (auto t = detail::scaled(tr, spec.inner_q, q, "q")) inner_terms.push_back(*t);
    if (auto t = detail::scaled(tr, spec.inner_r, r, "r")) inner_terms.push_back(*t);
    int const inner = detail::fold(tr, std::move(inner_terms), "dividend");
    int const quarter = rounding == Rounding::Floor ? floor_div(inner, 4) : trunc_div(inner, 4);
    tr.push(StepKind::QuarterFloor,
            std::string(spec.d == 12 ? "fours in the remainder" : "quarter") + ": floor(" + std::to_string(inner) +
                "/4) = " + std::to_string(quarter),
            {inner}, quarter);
    terms.push_back({quarter, spec.coef_floor < 0, "floor(" + std::to_string(inner) + "/4)"});
  }

  int const raw = detail::fold(tr, std::move(terms), "YS");
  return {normalize(raw, spec.convention), std::move(tr)};
}

/// The six built-in divisor formulas, each checked exhaustively in tests.
/// d = 12 is the Lewis Carroll / Conway dozens rule and yields the positive
/// share: q + r + floor(r/4) is congruent to 15q + r + floor(r/4).
inline constexpr std::array<DivisorSpec, 6> kBuiltinDivisorTable = {{
    // d   convention                      alpha beta gamma dq dr
    {4, SignConvention::NegativeShare, 2, -1, 0, 0, 0},     // 2q - r
    {5, SignConvention::NegativeShare, 1, -1, -1, 1, 1},    // q - r - floor((q + r)/4)
    {11, SignConvention::PositiveShare, 0, 1, 1, -1, 1},    // r + floor((r - q)/4)
    {12, SignConvention::PositiveShare, 1, 1, 1, 0, 1},     // q + r + floor(r/4)
    {16, SignConvention::PositiveShare, -1, 1, 1, 0, 1},    // -q + r + floor(r/4)
    {17, SignConvention::PositiveShare, 0, 1, 1, 1, 1},     // r + floor((q + r)/4)
}};

inline DivisorSpec const& builtin_divisor_spec(int d) {
  for (auto const& s : kBuiltinDivisorTable) {
    if (s.d == d) return s;
  }
  throw invalid_divisor("no built-in formula for divisor " + std::to_string(d));
}

inline constexpr int kMaxDerivedCoefQ = 3;
inline constexpr int kMinDerivableDivisor = 2;
inline constexpr int kMaxDerivableDivisor = 28;

/// Derives alpha*q + r + floor((b*q + r)/4) (or its negative) for divisor d.
///
/// 5y/4 = (5d*q + 5r)/4. Any multiple of 28 may be dropped from 5d, and
/// 5r = 4r + r, so the positive share is congruent to
/// a*q + r + floor((b*q + r)/4) whenever 4a + b = 5d (mod 28). The search
/// walks representatives 5d + 28k and shifts (a + k, b - 4k), keeping
/// |b| <= 1 and |a| <= kMaxDerivedCoefQ. Since 28 = 0 (mod 4), b is fixed
/// mod 4 by d, so divisors d = 2 (mod 4) are never representable.
inline DivisorSpec derive_divisor_formula(int d, SignConvention desired) {
  if (d < kMinDerivableDivisor || d > kMaxDerivableDivisor) {
    throw invalid_divisor("derivation supports divisors in [2, 28], got " + std::to_string(d));
  }
  int const sign = desired == SignConvention::PositiveShare ? 1 : -1;
  int const base = floor_mod(5 * d, 28);

  std::vector<DivisorSpec> candidates;
  for (int k = -2; k <= 2; ++k) {
    int const m = base + 28 * k;
    for (int a = -2 * kMaxDerivedCoefQ - 1; a <= 2 * kMaxDerivedCoefQ + 1; ++a) {
      int const b = m - 4 * a;
      if (std::abs(b) > 1 || std::abs(a) > kMaxDerivedCoefQ) continue;
      DivisorSpec s{d, desired, sign * a, sign, sign, b, 1};
      if (std::find(candidates.begin(), candidates.end(), s) == candidates.end()) candidates.push_back(s);
    }
  }
  if (candidates.empty()) {
    throw not_representable("divisor " + std::to_string(d) + " has no formula with |delta_q| <= 1 and |alpha| <= " +
                            std::to_string(kMaxDerivedCoefQ));
  }

  auto rank = [](DivisorSpec const& s) {
    return std::make_tuple(std::max(std::abs(s.coef_q), std::abs(s.inner_q)), std::abs(s.coef_q),
                           s.inner_r == 1 ? 0 : 1, s.coef_floor == 1 ? 0 : 1);
  };
  DivisorSpec best = *std::min_element(candidates.begin(), candidates.end(),
                                       [&](auto const& x, auto const& y) { return rank(x) < rank(y); });

  // floor(r/4) vanishes when r < 4.
  if (best.inner_q == 0 && best.d <= 4) {
    best.coef_floor = 0;
    best.inner_r = 0;
  }
  return best;
}

/// Shifts alpha by k and delta_q by -4k. The shifted spec has the same
/// value for every y because floor((x - 4kq)/4) = floor(x/4) - kq.
inline DivisorSpec shift_coefficients(DivisorSpec spec, int k) {
  if (spec.coef_floor == 0) return spec;
  spec.coef_q += spec.coef_floor * k;
  spec.inner_q -= 4 * k;
  return spec;
}

/// Human-readable formula, e.g. "r + floor((r - q)/4)".
inline std::string formula_string(DivisorSpec const& s) {
  auto term = [](int coef, char const* name) -> std::string {
    if (coef == 0) return {};
    if (coef == 1) return std::string("+ ") + name;
    if (coef == -1) return std::string("- ") + name;
    return (coef < 0 ? "- " : "+ ") + std::to_string(std::abs(coef)) + name;
  };
  auto join = [](std::vector<std::string> const& parts) {
    std::string out;
    for (auto const& p : parts) {
      if (p.empty()) continue;
      if (out.empty()) {
        out = p[0] == '+' ? p.substr(2) : "-" + p.substr(2);
      } else {
        out += " " + p;
      }
    }
    return out.empty() ? std::string("0") : out;
  };
  std::vector<std::string> parts{term(s.coef_q, "q"), term(s.coef_r, "r")};
  if (s.coef_floor != 0) {
    std::string inner = s.inner_q < 0 ? join({term(s.inner_r, "r"), term(s.inner_q, "q")})
                                      : join({term(s.inner_q, "q"), term(s.inner_r, "r")});
    bool const compound = (s.inner_q != 0) + (s.inner_r != 0) > 1 || std::abs(s.inner_q) > 1 ||
                          std::abs(s.inner_r) > 1 || inner[0] == '-';
    std::string fl = "floor(" + (compound ? "(" + inner + ")" : inner) + "/4)";
    parts.push_back((s.coef_floor < 0 ? "- " : "+ ") + fl);
  }
  return join(parts);
}

}  // namespace ydow
