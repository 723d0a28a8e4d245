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

#include <algorithm>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ydow/special.hpp"

namespace {

using ydow::Year2;

TEST(Odd11, Examples) {
  EXPECT_EQ(ydow::odd11(Year2(0)).share.raw, 0);
  auto const e99 = ydow::odd11(Year2(99));
  EXPECT_EQ(e99.share.raw, 66);
  EXPECT_EQ(e99.share.normalized_positive.value(), 4);
  auto const e85 = ydow::odd11(Year2(85));
  EXPECT_EQ(e85.share.raw, 48);
  EXPECT_EQ(e85.share.normalized_positive.value(), 1);
}

TEST(Odd11, TraceFollowsFourSteps) {
  auto const e = ydow::odd11(Year2(99));
  ASSERT_EQ(e.trace.size(), 4u);
  EXPECT_EQ(e.trace.steps[0].result, 99);
  EXPECT_EQ(e.trace.steps[1].result, 110);
  EXPECT_EQ(e.trace.steps[2].result, 55);
  EXPECT_EQ(e.trace.steps[3].result, 66);
  EXPECT_EQ(e.share.convention, ydow::SignConvention::NegativeShare);
}

TEST(Parity3, WorkedExamples) {
  EXPECT_EQ(ydow::parity3(Year2(24)).share.raw, 12);
  EXPECT_EQ(ydow::parity3(Year2(37)).share.raw, 17);
  EXPECT_EQ(ydow::parity3(Year2(58)).share.raw, 26);
  EXPECT_EQ(ydow::parity3(Year2(79)).share.raw, 35);
}

TEST(Parity3, TraceIntermediates) {
  // 79: odd -> 76, halve -> 38, parity changed -> 35.
  auto const e = ydow::parity3(Year2(79));
  ASSERT_EQ(e.trace.size(), 4u);
  EXPECT_EQ(e.trace.steps[1].result, 76);
  EXPECT_EQ(e.trace.steps[2].result, 38);
  EXPECT_EQ(e.trace.steps[3].result, 35);
  // The step-4 reference parity is the one remembered in step 2.
  EXPECT_EQ(e.trace.steps[3].operands[1], 1);
}

TEST(Parity3, SmallYearsGoNegative) {
  EXPECT_EQ(ydow::parity3(Year2(1)).share.raw, -1);
  EXPECT_EQ(ydow::parity3(Year2(2)).share.raw, -2);
  EXPECT_EQ(ydow::parity3(Year2(3)).share.raw, -3);
}

TEST(SpecialMethods, ExhaustiveOracle) {
  for (int v = 0; v <= 99; ++v) {
    int const expected = oracle::mod7(5 * v / 4);
    EXPECT_EQ(oracle::mod7(-ydow::odd11(Year2(v)).share.raw), expected) << v;
    EXPECT_EQ(oracle::mod7(-ydow::parity3(Year2(v)).share.raw), expected) << v;
  }
}

TEST(SpecialMethods, Decomposition) {
  for (int v = 0; v <= 99; ++v) {
    int const a = v / 4, b = (v % 4) / 2, c = v % 2;
    EXPECT_EQ(ydow::odd11(Year2(v)).share.raw, 2 * a + 12 * b + 6 * c) << v;
    EXPECT_EQ(ydow::parity3(Year2(v)).share.raw, 2 * a - 2 * b - c) << v;
  }
}

TEST(SpecialMethods, ParityProperties) {
  for (int v = 0; v <= 99; ++v) {
    EXPECT_EQ(ydow::odd11(Year2(v)).share.raw % 2, 0) << v;
    int const p3 = ydow::parity3(Year2(v)).share.raw;
    EXPECT_EQ(((p3 % 2) + 2) % 2, v % 2) << v;
  }
}

TEST(SpecialMethods, IntermediateBounds) {
  int odd11_hi = 0;
  for (int v = 0; v <= 99; ++v) {
    for (auto const& s : ydow::odd11(Year2(v)).trace.steps) {
      EXPECT_GE(s.result, 0);
      EXPECT_LE(s.result, 110);
      odd11_hi = std::max(odd11_hi, s.result);
    }
    for (auto const& s : ydow::parity3(Year2(v)).trace.steps) {
      EXPECT_GE(s.result, -3);
      EXPECT_LE(s.result, 99);
    }
  }
  EXPECT_EQ(odd11_hi, 110);
}

TEST(SpecialMethods, TraceReplay) {
  for (int v = 0; v <= 99; ++v) {
    for (auto const& e : {ydow::odd11(Year2(v)), ydow::parity3(Year2(v))}) {
      auto const r = ydow::replay(e.trace);
      ASSERT_TRUE(r.has_value()) << v;
      EXPECT_EQ(*r, e.share.raw) << v;
    }
  }
}

}  // namespace
