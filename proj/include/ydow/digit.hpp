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

// Methods working on the tens digit t and units digit u of y = 10t + u.
// Eisele and Harringer use the digits of 4q, the largest multiple of four
// not above y, instead.

#pragma once

#include <cassert>
#include <cstdlib>
#include <string>

#include "ydow/arith.hpp"
#include "ydow/trace.hpp"

namespace ydow {

struct DigitPair {
  int t;  // tens
  int u;  // units
  friend bool operator==(DigitPair, DigitPair) = default;
};

constexpr DigitPair split_digits(Year2 y) { return {y.value() / 10, y.value() % 10}; }

enum class Sign { Plus, Minus };

struct SignedMagnitude {
  int magnitude;
  Sign sign;
  friend bool operator==(SignedMagnitude, SignedMagnitude) = default;
};

/// Zero counts as Plus.
constexpr SignedMagnitude signed_magnitude(int v) {
  return v < 0 ? SignedMagnitude{-v, Sign::Minus} : SignedMagnitude{v, Sign::Plus};
}

namespace detail {

inline std::string s(int v) { return std::to_string(v); }

inline int push_digit_split(StepTrace& tr, int value, std::string const& what) {
  int const t = value / 10, u = value % 10;
  return tr.push(StepKind::DivSplit, what + " " + s(value) + ": t = " + s(t) + ", u = " + s(u), {value, 10, u}, t);
}

struct MultipleOfFour {
  int q, r, t, u;
};

inline MultipleOfFour push_multiple_of_four(StepTrace& tr, Year2 y) {
  int const q = y.value() / 4, r = y.value() % 4;
  tr.push(StepKind::DivSplit, s(y.value()) + " = 4*" + s(q) + " + " + s(r) + ": r = " + s(r), {y.value(), 4, r}, q);
  int const m = tr.push(StepKind::MulSmall, "largest multiple of four: 4q = " + s(4 * q), {4, q}, 4 * q);
  int const t = push_digit_split(tr, m, "digits of");
  return {q, r, t, m % 10};
}

}  // namespace detail

/// Eisele: 2t - u/2 + r over the digits of 4q. u is always even.
inline Evaluation eisele(Year2 y) {
  using detail::s;
  StepTrace tr;
  auto const m = detail::push_multiple_of_four(tr, y);
  // 10t + u is a multiple of 4, and 10t is even.
  assert(m.u % 2 == 0 && "units digit of a multiple of four must be even");
  if (m.u % 2 != 0) throw error("eisele: odd units digit in multiple of four");
  int const two_t = tr.push(StepKind::MulSmall, "2t = " + s(2 * m.t), {2, m.t}, 2 * m.t);
  int const half_u = tr.push(StepKind::Halve, "u/2 = " + s(m.u / 2), {m.u}, m.u / 2);
  int const diff = tr.push(StepKind::SubConst, "2t - u/2 = " + s(two_t - half_u), {two_t, half_u}, two_t - half_u);
  int const raw = tr.push(StepKind::AddConst, "YS = 2t - u/2 + r = " + s(diff + m.r), {diff, m.r}, diff + m.r);
  return {normalize(raw, SignConvention::PositiveShare), std::move(tr)};
}

/// Harringer: 2t + 3u + r over the digits of 4q; exceeds Eisele by 7u/2.
inline Evaluation harringer(Year2 y) {
  using detail::s;
  StepTrace tr;
  auto const m = detail::push_multiple_of_four(tr, y);
  int const two_t = tr.push(StepKind::MulSmall, "2t = " + s(2 * m.t), {2, m.t}, 2 * m.t);
  int const three_u = tr.push(StepKind::MulSmall, "3u = " + s(3 * m.u), {3, m.u}, 3 * m.u);
  int const sum = tr.push(StepKind::AddConst, "2t + 3u = " + s(two_t + three_u), {two_t, three_u}, two_t + three_u);
  int const raw = tr.push(StepKind::AddConst, "YS = 2t + 3u + r = " + s(sum + m.r), {sum, m.r}, sum + m.r);
  return {normalize(raw, SignConvention::PositiveShare), std::move(tr)};
}

/// Aa: 2t - (floor((2t + u)/4) + u), the negative share.
inline Evaluation digits_aa(Year2 y) {
  using detail::s;
  StepTrace tr;
  int const t = detail::push_digit_split(tr, y.value(), "digits of");
  int const u = y.value() % 10;
  int const two_t = tr.push(StepKind::MulSmall, "2t = " + s(2 * t), {2, t}, 2 * t);
  int const dividend = tr.push(StepKind::AddConst, "2t + u = " + s(two_t + u), {two_t, u}, two_t + u);
  int const quarter = tr.push(StepKind::QuarterFloor, "quarter of " + s(dividend) + " is " + s(floor_div(dividend, 4)),
                              {dividend}, floor_div(dividend, 4));
  int const sum = tr.push(StepKind::AddConst, "add u: " + s(quarter) + " + " + s(u) + " = " + s(quarter + u),
                          {quarter, u}, quarter + u);
  int const raw = tr.push(StepKind::SubConst, "subtract from 2t: " + s(two_t) + " - " + s(sum) + " = " + s(two_t - sum),
                          {two_t, sum}, two_t - sum);
  return {normalize(raw, SignConvention::NegativeShare), std::move(tr)};
}

/// Fong: 2t + 10(t mod 2) + u + floor((2(t mod 2) + u)/4).
inline Evaluation fong(Year2 y) {
  using detail::s;
  StepTrace tr;
  int const t = detail::push_digit_split(tr, y.value(), "digits of");
  int const u = y.value() % 10;
  int const odd = t % 2;
  tr.push(StepKind::DivSplit, "t mod 2 = " + s(odd), {t, 2, odd}, t / 2, {StepKind::ParityTest});
  int const two_t = tr.push(StepKind::MulSmall, "2t = " + s(2 * t), {2, t}, 2 * t);
  int const ten_odd = tr.push(StepKind::MulSmall, "10(t mod 2) = " + s(10 * odd), {10, odd}, 10 * odd);
  int const two_odd = tr.push(StepKind::MulSmall, "2(t mod 2) = " + s(2 * odd), {2, odd}, 2 * odd);
  int const dividend = tr.push(StepKind::AddConst, "2(t mod 2) + u = " + s(two_odd + u), {two_odd, u}, two_odd + u);
  int const quarter = tr.push(StepKind::QuarterFloor, "floor(" + s(dividend) + "/4) = " + s(floor_div(dividend, 4)),
                              {dividend}, floor_div(dividend, 4));
  int acc = tr.push(StepKind::AddConst, "2t + 10(t mod 2) = " + s(two_t + ten_odd), {two_t, ten_odd}, two_t + ten_odd);
  acc = tr.push(StepKind::AddConst, "+ u = " + s(acc + u), {acc, u}, acc + u);
  acc = tr.push(StepKind::AddConst, "YS = " + s(acc) + " + " + s(quarter) + " = " + s(acc + quarter), {acc, quarter},
                acc + quarter);
  return {normalize(acc, SignConvention::PositiveShare), std::move(tr)};
}

/// Wang: (u - t) + floor(u/4 - t/2), evaluated as floor((u - 2t)/4). The
/// dividend is negative whenever u < 2t.
inline Evaluation wang(Year2 y) {
  using detail::s;
  StepTrace tr;
  int const t = detail::push_digit_split(tr, y.value(), "digits of");
  int const u = y.value() % 10;
  int const diff = tr.push(StepKind::SubConst, "u - t = " + s(u - t), {u, t}, u - t);
  int const two_t = tr.push(StepKind::MulSmall, "2t = " + s(2 * t), {2, t}, 2 * t);
  int const dividend = tr.push(StepKind::SubConst, "u - 2t = " + s(u - two_t), {u, two_t}, u - two_t);
  int const quarter = tr.push(StepKind::QuarterFloor, "floor(" + s(dividend) + "/4) = " + s(floor_div(dividend, 4)),
                              {dividend}, floor_div(dividend, 4));
  int const raw = tr.push(StepKind::AddConst, "YS = " + s(diff) + " + " + s(quarter) + " = " + s(diff + quarter),
                          {diff, quarter}, diff + quarter);
  return {normalize(raw, SignConvention::PositiveShare), std::move(tr)};
}

/// Ab in closed form: -floor((5u - 6t)/4).
constexpr int digits_ab_closed(DigitPair p) { return -floor_div(5 * p.u - 6 * p.t, 4); }

/// Ab, one number at a time: take |5u - 6t| and remember the sign, quarter
/// it (rounding up on a remainder when the sign was minus), then attach the
/// opposite sign. Gives the negative share.
inline Evaluation digits_ab(Year2 y) {
  using detail::s;
  StepTrace tr;
  int const t = detail::push_digit_split(tr, y.value(), "digits of");
  int const u = y.value() % 10;
  int const five_u = tr.push(StepKind::MulSmall, "5u = " + s(5 * u), {5, u}, 5 * u);
  int const six_t = tr.push(StepKind::MulSmall, "6t = " + s(6 * t), {6, t}, 6 * t);
  int const v = tr.push(StepKind::SubConst, "5u - 6t = " + s(five_u - six_t), {five_u, six_t}, five_u - six_t);

  SignedMagnitude const sm = signed_magnitude(v);
  bool const minus = sm.sign == Sign::Minus;
  if (minus) {
    tr.push(StepKind::SignFlip, "a = " + s(sm.magnitude) + ", sign minus", {v}, sm.magnitude);
  }
  int const a = sm.magnitude;
  int const rem = a % 4;
  int b = tr.push(StepKind::DivSplit, "b = floor(" + s(a) + "/4) = " + s(a / 4) + ", remainder " + s(rem), {a, 4, rem},
                  a / 4);
  if (rem != 0 && minus) {
    b = tr.push(StepKind::AddConst, "nonzero remainder and sign minus: b = " + s(b + 1), {b, 1}, b + 1);
  }
  int raw = 0;
  if (minus) {
    raw = tr.push(StepKind::Set, "sign was minus, attach plus: YS = " + s(b), {b}, b);
  } else {
    raw = tr.push(StepKind::SignFlip, "sign was plus, attach minus: YS = " + s(-b), {b}, -b);
  }
  return {normalize(raw, SignConvention::NegativeShare), std::move(tr)};
}

}  // namespace ydow
