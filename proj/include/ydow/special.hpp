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

// Single-variable methods: the running value YS is tested, adjusted and
// halved in place. Both return the negative year share.

#pragma once

#include <string>

#include "ydow/arith.hpp"
#include "ydow/trace.hpp"

namespace ydow {

namespace detail {

inline std::string parity_word(int v) { return floor_mod(v, 2) == 0 ? "even" : "odd"; }

inline std::string num(int v) { return std::to_string(v); }

}  // namespace detail

/// Odd+11: YS <- y; if odd YS += 11; YS /= 2; if odd YS += 11.
inline Evaluation odd11(Year2 year) {
  using detail::num;
  using detail::parity_word;
  StepTrace tr;
  int ys = tr.push(StepKind::Set, "YS = y = " + num(year.value()), {year.value()}, year.value());

  bool odd = floor_mod(ys, 2) == 1;
  int next = odd ? ys + 11 : ys;
  ys = tr.push(StepKind::ParityTest,
               num(ys) + " is " + parity_word(ys) + (odd ? ", add 11: YS = " + num(next) : ", unchanged: YS = " + num(next)),
               {ys, 0, 11}, next,
               odd ? std::vector{StepKind::ParityTest, StepKind::AddConst} : std::vector{StepKind::ParityTest});

  next = ys / 2;
  ys = tr.push(StepKind::Halve, "halve " + num(ys) + ": YS = " + num(next), {ys}, next);

  odd = floor_mod(ys, 2) == 1;
  next = odd ? ys + 11 : ys;
  ys = tr.push(StepKind::ParityTest,
               num(ys) + " is " + parity_word(ys) + (odd ? ", add 11: YS = " + num(next) : ", unchanged: YS = " + num(next)),
               {ys, 0, 11}, next,
               odd ? std::vector{StepKind::ParityTest, StepKind::AddConst} : std::vector{StepKind::ParityTest});

  return {normalize(ys, SignConvention::NegativeShare), std::move(tr)};
}

/// Parity Minus 3: YS <- y; remember parity, if odd YS -= 3; YS /= 2;
/// if the parity differs from the remembered one, YS -= 3.
inline Evaluation parity3(Year2 year) {
  using detail::num;
  using detail::parity_word;
  StepTrace tr;
  int ys = tr.push(StepKind::Set, "YS = y = " + num(year.value()), {year.value()}, year.value());

  int const remembered = floor_mod(ys, 2);
  bool fire = remembered == 1;
  int next = fire ? ys - 3 : ys;
  ys = tr.push(StepKind::ParityTest,
               num(ys) + " is " + parity_word(ys) + " (remembered)" +
                   (fire ? ", subtract 3: YS = " + num(next) : ", unchanged: YS = " + num(next)),
               {ys, 0, -3}, next,
               fire ? std::vector{StepKind::ParityTest, StepKind::SubConst} : std::vector{StepKind::ParityTest});

  next = ys / 2;
  ys = tr.push(StepKind::Halve, "halve " + num(ys) + ": YS = " + num(next), {ys}, next);

  fire = floor_mod(ys, 2) != remembered;
  next = fire ? ys - 3 : ys;
  ys = tr.push(StepKind::ParityTest,
               num(ys) + " is " + parity_word(ys) +
                   (fire ? ", parity changed, subtract 3: YS = " + num(next)
                         : ", parity unchanged: YS = " + num(next)),
               {ys, remembered, -3}, next,
               fire ? std::vector{StepKind::ParityTest, StepKind::SubConst} : std::vector{StepKind::ParityTest});

  return {normalize(ys, SignConvention::NegativeShare), std::move(tr)};
}

}  // namespace ydow
