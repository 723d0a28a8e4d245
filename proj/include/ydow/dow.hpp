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

// Full-date weekday assembly: century term + year share + month/day term.
//
// Doomsday: the year's doomsday is anchor(C) + share(y); the weekday then
// follows by counting from the month's doomsday date.
// First Sunday: the first Sunday of the month falls on
// 1 + mod7(-anchor(C) + negative_share(y) + doomsday_date - 1), and the
// weekday is mod7(day - first_sunday).

#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "ydow/arith.hpp"
#include "ydow/calendar.hpp"
#include "ydow/registry.hpp"
#include "ydow/trace.hpp"

namespace ydow {

class calendar_policy_error : public error {
 public:
  using error::error;
};

enum class PipelineId { Doomsday, FirstSunday };

constexpr std::string_view to_string(PipelineId p) {
  return p == PipelineId::Doomsday ? "doomsday" : "first-sunday";
}

inline std::optional<PipelineId> pipeline_from_string(std::string_view s) {
  if (s == "doomsday") return PipelineId::Doomsday;
  if (s == "first-sunday") return PipelineId::FirstSunday;
  return std::nullopt;
}

inline constexpr int kFirstGregorianYear = 1583;

struct CalendarPolicy {
  bool proleptic = false;  // allow years before 1583
};

/// Doomsday weekday of C00 for C mod 4 = 0, 1, 2, 3 (Tue, Sun, Fri, Wed).
constexpr int century_anchor(int century) {
  constexpr std::array<int, 4> anchors = {2, 0, 5, 3};
  return anchors[static_cast<std::size_t>(floor_mod(century, 4))];
}

/// A day of `month` that falls on the year's doomsday.
constexpr int doomsday_date(int month, bool leap) {
  constexpr std::array<int, 12> dates = {3, 28, 14, 4, 9, 6, 11, 8, 5, 10, 7, 12};
  int const d = dates[static_cast<std::size_t>(month - 1)];
  return leap && month <= 2 ? d + 1 : d;
}

struct DowResult {
  Weekday weekday;
  Evaluation year_share;
  // Value the pipeline adds for the two-digit year: the positive share for
  // Doomsday, the negative share for First Sunday.
  int year_share_term = 0;
  StepTrace trace;
};

inline DowResult dow(CivilDate date, MethodDescriptor const& method, PipelineId pipeline,
                     CalendarPolicy policy = {}) {
  if (date.year < kFirstGregorianYear && !policy.proleptic) {
    throw calendar_policy_error(format_date(date) + " is before " + std::to_string(kFirstGregorianYear) +
                                "; use proleptic mode for earlier dates");
  }
  auto s = [](int v) { return std::to_string(v); };
  int const century = date.year / 100;
  Year2 const y(date.year % 100);
  Evaluation share = method.evaluate(y);
  int const raw = share.share.raw;
  int const anchor = century_anchor(century);
  int const dd = doomsday_date(date.month, is_leap_year(date.year));

  StepTrace tr;
  tr.push(StepKind::Set, "year share of " + s(y.value()) + " by " + method.id + ": " + s(raw) + " (" +
                             std::string(to_string(share.share.convention)) + ")",
          {raw}, raw);
  int term = raw;
  int weekday = 0;

  if (pipeline == PipelineId::Doomsday) {
    if (share.share.convention == SignConvention::NegativeShare) {
      term = tr.push(StepKind::SignFlip, "positive share = " + s(-raw), {raw}, -raw);
    }
    int const sum = tr.push(StepKind::AddConst,
                            "century " + s(century) + " anchor " + s(anchor) + " + share = " + s(anchor + term),
                            {anchor, term}, anchor + term);
    int const doomsday = tr.push(StepKind::Mod7Reduce, "doomsday of " + s(date.year) + " = " + s(mod7(sum).value()),
                                 {sum}, mod7(sum).value());
    int const offset = tr.push(StepKind::SubConst,
                               "day " + s(date.day) + " minus doomsday date " + s(dd) + " = " + s(date.day - dd),
                               {date.day, dd}, date.day - dd);
    int const total = tr.push(StepKind::AddConst, "doomsday + offset = " + s(doomsday + offset), {doomsday, offset},
                              doomsday + offset);
    weekday = tr.push(StepKind::Mod7Reduce, "weekday = " + s(mod7(total).value()), {total}, mod7(total).value());
  } else {
    if (share.share.convention == SignConvention::PositiveShare) {
      term = tr.push(StepKind::SignFlip, "negative share = " + s(-raw), {raw}, -raw);
    }
    int const century_term = mod7(-anchor).value();
    int const month_term = dd - 1;
    int const sum = tr.push(StepKind::AddConst,
                            "century term " + s(century_term) + " + negative share + month term " + s(month_term) +
                                " = " + s(century_term + term + month_term),
                            {century_term, term, month_term}, century_term + term + month_term);
    int const reduced = tr.push(StepKind::Mod7Reduce, "reduce: " + s(mod7(sum).value()), {sum}, mod7(sum).value());
    int const first_sunday =
        tr.push(StepKind::AddConst, "first Sunday is day " + s(reduced + 1), {reduced, 1}, reduced + 1);
    int const offset = tr.push(StepKind::SubConst, "day " + s(date.day) + " minus " + s(first_sunday),
                               {date.day, first_sunday}, date.day - first_sunday);
    weekday = tr.push(StepKind::Mod7Reduce, "weekday = " + s(mod7(offset).value()), {offset}, mod7(offset).value());
  }

  return {Weekday(weekday), std::move(share), term, std::move(tr)};
}

inline DowResult dow(CivilDate date, std::string_view method_id, PipelineId pipeline, CalendarPolicy policy = {},
                     Registry const& registry = Registry::builtin()) {
  return dow(date, registry.find(method_id), pipeline, policy);
}

}  // namespace ydow
