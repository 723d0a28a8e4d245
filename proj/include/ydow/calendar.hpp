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

#include <array>
#include <cstddef>
#include <cstdio>
#include <string>
#include <string_view>

#include "ydow/arith.hpp"

namespace ydow {

class parse_error : public error {
 public:
  parse_error(std::string const& what, std::size_t position)
      : error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class validation_error : public error {
 public:
  using error::error;
};

constexpr bool is_leap_year(int year) { return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0; }

constexpr int days_in_month(int year, int month) {
  constexpr std::array<int, 12> lengths = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  return month == 2 && is_leap_year(year) ? 29 : lengths[static_cast<std::size_t>(month - 1)];
}

inline constexpr int kMinYear = 0;
inline constexpr int kMaxYear = 9999;

/// Proleptic Gregorian date.
struct CivilDate {
  int year = 2000;
  int month = 1;
  int day = 1;

  friend constexpr bool operator==(CivilDate, CivilDate) = default;
  friend constexpr auto operator<=>(CivilDate, CivilDate) = default;
};

inline CivilDate make_date(int year, int month, int day) {
  if (year < kMinYear || year > kMaxYear) throw validation_error("year " + std::to_string(year) + " out of range");
  if (month < 1 || month > 12) throw validation_error("month " + std::to_string(month) + " out of range");
  if (day < 1 || day > days_in_month(year, month)) {
    throw validation_error("day " + std::to_string(day) + " out of range for " + std::to_string(year) + "-" +
                           std::to_string(month));
  }
  return {year, month, day};
}

/// Accepts exactly YYYY-MM-DD.
inline CivilDate parse_date(std::string_view text) {
  constexpr std::string_view pattern = "dddd-dd-dd";
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (i >= text.size()) throw parse_error("unexpected end of date, expected YYYY-MM-DD", i);
    char const c = text[i];
    if (pattern[i] == 'd' ? (c < '0' || c > '9') : c != '-') {
      throw parse_error(std::string("unexpected character '") + c + "', expected YYYY-MM-DD", i);
    }
  }
  if (text.size() != pattern.size()) throw parse_error("trailing characters after date", pattern.size());
  auto field = [&](std::size_t pos, std::size_t len) {
    int v = 0;
    for (std::size_t i = pos; i < pos + len; ++i) v = v * 10 + (text[i] - '0');
    return v;
  };
  return make_date(field(0, 4), field(5, 2), field(8, 2));
}

inline std::string format_date(CivilDate d) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", d.year, d.month, d.day);
  return buf;
}

/// 0 = Sunday ... 6 = Saturday.
class Weekday {
 public:
  constexpr Weekday() = default;
  constexpr explicit Weekday(int n) : number_(floor_mod(n, 7)) {}

  constexpr int number() const { return number_; }
  std::string_view name() const {
    static constexpr std::array<std::string_view, 7> names = {"Sunday",   "Monday", "Tuesday", "Wednesday",
                                                              "Thursday", "Friday", "Saturday"};
    return names[static_cast<std::size_t>(number_)];
  }

  friend constexpr bool operator==(Weekday, Weekday) = default;

 private:
  int number_ = 0;
};

/// Number of days from 0000-01-01 to `d`, by summing year and month lengths.
constexpr long day_number(CivilDate d) {
  long const y = d.year;
  // Leap years in [0, y): 0, 4, 8, ... minus centuries plus 400s.
  long const leaps = y == 0 ? 0 : (y - 1) / 4 - (y - 1) / 100 + (y - 1) / 400 + 1;
  long days = 365 * y + leaps;
  for (int m = 1; m < d.month; ++m) days += days_in_month(d.year, m);
  return days + d.day - 1;
}

struct AnchorConfig {
  CivilDate reference_date{2000, 1, 1};
  Weekday reference_weekday{6};  // Saturday

  static AnchorConfig defaults() { return {}; }
};

/// Weekday by counting days from a single known reference date.
constexpr Weekday daycount_weekday(CivilDate date, AnchorConfig const& anchor = {}) {
  long const diff = day_number(date) - day_number(anchor.reference_date);
  return Weekday(static_cast<int>(diff % 7) + anchor.reference_weekday.number());
}

}  // namespace ydow
