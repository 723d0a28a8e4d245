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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ydow/digit.hpp"

namespace {

using ydow::SignConvention;
using ydow::Year2;

int expected_share(int y) { return oracle::mod7(5 * y / 4); }

TEST(SplitDigits, Examples) {
  EXPECT_EQ(ydow::split_digits(Year2(59)), (ydow::DigitPair{5, 9}));
  EXPECT_EQ(ydow::split_digits(Year2(87)), (ydow::DigitPair{8, 7}));
  EXPECT_EQ(ydow::split_digits(Year2(0)), (ydow::DigitPair{0, 0}));
}

TEST(SignedMagnitude, Basics) {
  EXPECT_EQ(ydow::signed_magnitude(-13), (ydow::SignedMagnitude{13, ydow::Sign::Minus}));
  EXPECT_EQ(ydow::signed_magnitude(15), (ydow::SignedMagnitude{15, ydow::Sign::Plus}));
  EXPECT_EQ(ydow::signed_magnitude(0), (ydow::SignedMagnitude{0, ydow::Sign::Plus}));
}

TEST(Eisele, Examples) {
  auto const e87 = ydow::eisele(Year2(87));
  EXPECT_EQ(e87.share.raw, 17);
  EXPECT_EQ(e87.share.normalized_positive.value(), 3);
  EXPECT_EQ(ydow::eisele(Year2(0)).share.raw, 0);
  auto const e59 = ydow::eisele(Year2(59));
  EXPECT_EQ(e59.share.raw, 10);
  EXPECT_EQ(e59.share.normalized_positive.value(), 3);
}

TEST(Harringer, Examples) {
  auto const e87 = ydow::harringer(Year2(87));
  EXPECT_EQ(e87.share.raw, 31);
  EXPECT_EQ(e87.share.normalized_positive.value(), 3);
  EXPECT_EQ(ydow::harringer(Year2(0)).share.raw, 0);
  auto const e24 = ydow::harringer(Year2(24));
  EXPECT_EQ(e24.share.raw, 16);
  EXPECT_EQ(e24.share.normalized_positive.value(), 2);
}

TEST(DigitsAa, Examples) {
  auto const e59 = ydow::digits_aa(Year2(59));
  EXPECT_EQ(e59.share.raw, -3);
  EXPECT_EQ(e59.share.raw_residue().value(), 4);
  EXPECT_EQ(e59.share.normalized_positive.value(), 3);
  EXPECT_EQ(ydow::digits_aa(Year2(0)).share.raw, 0);
  auto const e87 = ydow::digits_aa(Year2(87));
  EXPECT_EQ(e87.share.raw, 4);
  EXPECT_EQ(e87.share.raw_residue().value(), 4);
}

TEST(DigitsAa, WorkedExampleSteps) {
  // 59: 2t + u = 19, quarter 4, plus u = 13, 10 - 13 = -3.
  auto const e = ydow::digits_aa(Year2(59));
  std::vector<int> results;
  for (auto const& s : e.trace.steps) results.push_back(s.result);
  EXPECT_EQ(results, (std::vector<int>{5, 10, 19, 4, 13, -3}));
}

TEST(Fong, Examples) {
  auto const e59 = ydow::fong(Year2(59));
  EXPECT_EQ(e59.share.raw, 31);
  EXPECT_EQ(e59.share.normalized_positive.value(), 3);
  EXPECT_EQ(ydow::fong(Year2(0)).share.raw, 0);
  auto const e24 = ydow::fong(Year2(24));
  EXPECT_EQ(e24.share.raw, 9);
  EXPECT_EQ(e24.share.normalized_positive.value(), 2);
}

TEST(Wang, Examples) {
  auto const e59 = ydow::wang(Year2(59));
  EXPECT_EQ(e59.share.raw, 3);
  EXPECT_EQ(e59.share.normalized_positive.value(), 3);
  EXPECT_EQ(ydow::wang(Year2(0)).share.raw, 0);
  auto const e87 = ydow::wang(Year2(87));
  EXPECT_EQ(e87.share.raw, -4);
  EXPECT_EQ(e87.share.normalized_positive.value(), 3);
}

TEST(DigitsAb, Examples) {
  auto const e87 = ydow::digits_ab(Year2(87));
  EXPECT_EQ(e87.share.raw, 4);
  EXPECT_EQ(e87.share.convention, SignConvention::NegativeShare);
  EXPECT_EQ(ydow::digits_ab(Year2(0)).share.raw, 0);
  auto const e59 = ydow::digits_ab(Year2(59));
  EXPECT_EQ(e59.share.raw, -3);
  EXPECT_EQ(e59.share.raw, ydow::digits_aa(Year2(59)).share.raw);
}

TEST(DigitsAb, WorkedExampleSteps) {
  // 87: 5u - 6t = -13, a = 13 minus, b = 3, remainder so b = 4, result +4.
  auto const e = ydow::digits_ab(Year2(87));
  std::vector<int> results;
  for (auto const& s : e.trace.steps) results.push_back(s.result);
  EXPECT_EQ(results, (std::vector<int>{8, 35, 48, -13, 13, 3, 4, 4}));
}

TEST(DigitMethods, ExhaustiveOracle) {
  for (int y = 0; y <= 99; ++y) {
    Year2 const v(y);
    int const want = expected_share(y);
    EXPECT_EQ(oracle::mod7(ydow::eisele(v).share.raw), want) << y;
    EXPECT_EQ(oracle::mod7(ydow::harringer(v).share.raw), want) << y;
    EXPECT_EQ(oracle::mod7(-ydow::digits_aa(v).share.raw), want) << y;
    EXPECT_EQ(oracle::mod7(ydow::fong(v).share.raw), want) << y;
    EXPECT_EQ(oracle::mod7(ydow::wang(v).share.raw), want) << y;
    EXPECT_EQ(oracle::mod7(-ydow::digits_ab(v).share.raw), want) << y;
  }
}

TEST(Eisele, MultipleOfFourDigits) {
  for (int y = 0; y <= 99; ++y) {
    int const q = y / 4, t = (4 * q) / 10, u = (4 * q) % 10;
    EXPECT_EQ(u % 2, 0) << y;
    EXPECT_EQ(2 * q, 5 * t + u / 2) << y;
    EXPECT_EQ(ydow::eisele(Year2(y)).share.raw, 2 * t - u / 2 + y % 4) << y;
  }
}

TEST(Harringer, ExceedsEiseleBySevenHalvesU) {
  for (int y = 0; y <= 99; ++y) {
    int const u = (4 * (y / 4)) % 10;
    int const diff = ydow::harringer(Year2(y)).share.raw - ydow::eisele(Year2(y)).share.raw;
    EXPECT_EQ(diff, 7 * u / 2) << y;
    EXPECT_EQ(diff % 7, 0) << y;
  }
}

TEST(DigitsAb, ProcedureMatchesClosedForm) {
  for (int t = 0; t <= 9; ++t) {
    for (int u = 0; u <= 9; ++u) {
      int const closed = -oracle::three_case_floor(5 * u - 6 * t, 4);
      EXPECT_EQ(ydow::digits_ab_closed({t, u}), closed);
      EXPECT_EQ(ydow::digits_ab(Year2(10 * t + u)).share.raw, closed) << t << u;
    }
  }
}

TEST(Wang, TruncationBreaksOracle) {
  int broken = 0;
  for (int y = 0; y <= 99; ++y) {
    int const t = y / 10, u = y % 10;
    int const truncated = (u - t) + (u - 2 * t) / 4;  // native division
    if (oracle::mod7(truncated) != expected_share(y)) ++broken;
  }
  EXPECT_GT(broken, 0);
  // 59 is a witness: u - 2t = -1.
  EXPECT_NE(oracle::mod7((9 - 5) + (9 - 10) / 4), expected_share(59));
}

TEST(Fong, ExpansionTermwise) {
  for (int y = 0; y <= 99; ++y) {
    int const t = y / 10, u = y % 10, t1 = t / 2, t2 = t % 2;
    int const expanded = 4 * t1 + 12 * t2 + u + oracle::three_case_floor(2 * t2 + u, 4);
    EXPECT_EQ(ydow::fong(Year2(y)).share.raw, expanded) << y;
    EXPECT_EQ(2 * t + 10 * t2, 4 * t1 + 12 * t2) << y;
  }
}

TEST(DigitMethods, TraceReplay) {
  for (int y = 0; y <= 99; ++y) {
    Year2 const v(y);
    for (auto const& e : {ydow::eisele(v), ydow::harringer(v), ydow::digits_aa(v), ydow::fong(v), ydow::wang(v),
                          ydow::digits_ab(v)}) {
      auto const r = ydow::replay(e.trace);
      ASSERT_TRUE(r.has_value()) << y;
      EXPECT_EQ(*r, e.share.raw) << y;
    }
  }
}

}  // namespace
