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

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ydow {

/// Base class of every error thrown by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class invalid_divisor : public error {
 public:
  using error::error;
};

class invalid_year : public error {
 public:
  using error::error;
};

/// Integer quotient rounded toward negative infinity. The remainder
/// `p - q * floor_div(p, q)` always lies in [0, q).
constexpr int floor_div(int p, int q) {
  if (q <= 0) {
    throw invalid_divisor("floor_div: divisor must be positive, got " + std::to_string(q));
  }
  if (p >= 0) {
    return p / q;
  }
  // Native division truncates toward zero, so spell out the negative cases.
  long long const mag = -static_cast<long long>(p);
  long long const quot = mag / q;
  return static_cast<int>((mag % q == 0) ? -quot : -(quot + 1));
}

constexpr int floor_mod(int p, int q) {
  return static_cast<int>(p - static_cast<long long>(q) * floor_div(p, q));
}

/// C++ native division (truncation toward zero). Only used to build
/// negative controls; never correct for the year-share formulas.
constexpr int trunc_div(int p, int q) {
  if (q <= 0) {
    throw invalid_divisor("trunc_div: divisor must be positive, got " + std::to_string(q));
  }
  return p / q;
}

/// A residue modulo 7, always in [0, 6].
class Mod7 {
 public:
  constexpr Mod7() = default;
  constexpr explicit Mod7(int n) : residue_(floor_mod(n, 7)) {}

  constexpr int value() const { return residue_; }

  friend constexpr bool operator==(Mod7, Mod7) = default;
  friend constexpr auto operator<=>(Mod7, Mod7) = default;

 private:
  int residue_ = 0;
};

constexpr Mod7 mod7(int n) { return Mod7(n); }

/// Two-digit year part of a date, in [0, 99].
class Year2 {
 public:
  constexpr explicit Year2(int value) : value_(value) {
    if (value < 0 || value > 99) {
      throw invalid_year("two-digit year must be in [0, 99], got " + std::to_string(value));
    }
  }

  constexpr int value() const { return value_; }

  friend constexpr bool operator==(Year2, Year2) = default;

 private:
  int value_;
};

/// Whether a method output X is the year share itself (X = floor(5y/4)
/// mod 7) or its negative (-X = floor(5y/4) mod 7).
enum class SignConvention { PositiveShare, NegativeShare };

constexpr std::string_view to_string(SignConvention c) {
  return c == SignConvention::PositiveShare ? "positive" : "negative";
}

/// The year share floor(5y/4) reduced mod 7.
constexpr Mod7 oracle_year_share(Year2 y) { return mod7(floor_div(5 * y.value(), 4)); }

struct ShareResult {
  int raw = 0;  // unreduced method output
  SignConvention convention = SignConvention::PositiveShare;
  Mod7 normalized_positive;

  /// `raw` reduced mod 7 without any sign change.
  constexpr Mod7 raw_residue() const { return mod7(raw); }

  friend constexpr bool operator==(ShareResult const&, ShareResult const&) = default;
};

constexpr ShareResult normalize(int raw, SignConvention convention) {
  Mod7 const positive = convention == SignConvention::PositiveShare ? mod7(raw) : mod7(-raw);
  return ShareResult{raw, convention, positive};
}

}  // namespace ydow
