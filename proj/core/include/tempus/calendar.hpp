// Copyright 2026 The Tempus Authors.
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

#ifndef TEMPUS_CALENDAR_HPP_
#define TEMPUS_CALENDAR_HPP_

#include <optional>
#include <string>
#include <string_view>

namespace tempus {

// A calendar date. The document creation time is one of these plus an
// optional time-of-day; relative expressions are resolved against it.
struct CivilDate {
  int year = 0;
  int month = 0;  // 1..12
  int day = 0;    // 1..31

  bool ok() const;
  friend bool operator==(const CivilDate&, const CivilDate&) = default;
};

// Minutes since midnight, 0..1439.
struct CivilTime {
  int minutes = 0;
  friend bool operator==(const CivilTime&, const CivilTime&) = default;
};

struct DocumentTime {
  CivilDate date;
  std::optional<CivilTime> time;
  friend bool operator==(const DocumentTime&, const DocumentTime&) = default;
};

CivilDate add_days(CivilDate d, int days);
// Month arithmetic clamps the day to the target month's length
// (Jan 31 + 1 month = Feb 28/29).
CivilDate add_months(CivilDate d, int months);
CivilDate add_years(CivilDate d, int years);

// ISO-8601 weekday, Monday = 1 .. Sunday = 7.
int iso_weekday(CivilDate d);

int days_in_month(int year, int month);

struct IsoWeek {
  int year = 0;
  int week = 0;  // 1..53
};
IsoWeek iso_week(CivilDate d);

std::string format_date(CivilDate d);                       // YYYY-MM-DD
std::string format_year_month(CivilDate d);                 // YYYY-MM
std::string format_year(CivilDate d);                       // YYYY
std::string format_iso_week(IsoWeek w);                     // YYYY-Wnn
std::string format_time(CivilTime t);                       // THH:MM

// Parses YYYY-MM-DD with optional THH:MM suffix.
std::optional<DocumentTime> parse_document_time(std::string_view s);

}  // namespace tempus

#endif  // TEMPUS_CALENDAR_HPP_
