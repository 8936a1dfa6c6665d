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

#include "tempus/calendar.hpp"

#include "doctest.h"
#include "support/oracles.hpp"
#include "tempus/util.hpp"

using namespace tempus;

TEST_CASE("add_days agrees with the integer-arithmetic calendar oracle") {
  Rng rng(2024);
  for (int i = 0; i < 2000; ++i) {
    const int y = static_cast<int>(rng.range(1900, 2100));
    const int m = static_cast<int>(rng.range(1, 12));
    const int d = static_cast<int>(rng.range(1, 28));
    const int delta = static_cast<int>(rng.range(-1000, 1000));

    const CivilDate got = add_days(CivilDate{y, m, d}, delta);
    const auto want = oracles::civil_from_days(oracles::days_from_civil(y, m, d) + delta);
    CHECK(got.year == want.year);
    CHECK(got.month == want.month);
    CHECK(got.day == want.day);
  }
}

TEST_CASE("iso_weekday agrees with the oracle and pinned dates") {
  CHECK(iso_weekday(CivilDate{2018, 5, 15}) == 2);   // Tuesday
  CHECK(iso_weekday(CivilDate{1998, 2, 27}) == 5);   // Friday
  CHECK(iso_weekday(CivilDate{2000, 2, 29}) == 2);   // Tuesday
  CHECK(iso_weekday(CivilDate{1970, 1, 1}) == 4);    // Thursday

  Rng rng(5);
  for (int i = 0; i < 1000; ++i) {
    const int y = static_cast<int>(rng.range(1800, 2200));
    const int m = static_cast<int>(rng.range(1, 12));
    const int d = static_cast<int>(rng.range(1, days_in_month(y, m)));
    CHECK(iso_weekday(CivilDate{y, m, d}) == oracles::iso_weekday(y, m, d));
  }
}

TEST_CASE("iso_week handles year-boundary weeks") {
  auto week = [](int y, int m, int d) { return format_iso_week(iso_week(CivilDate{y, m, d})); };
  CHECK(week(2018, 5, 15) == "2018-W20");
  CHECK(week(2016, 1, 1) == "2015-W53");   // Friday of the previous ISO year
  CHECK(week(2015, 12, 31) == "2015-W53");
  CHECK(week(2017, 1, 1) == "2016-W52");   // Sunday closing the previous year
  CHECK(week(2019, 12, 30) == "2020-W01"); // Monday opening the next year
  CHECK(week(2021, 1, 1) == "2020-W53");
  CHECK(week(2024, 12, 31) == "2025-W01");

  Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    const int y = static_cast<int>(rng.range(1950, 2100));
    const int m = static_cast<int>(rng.range(1, 12));
    const int d = static_cast<int>(rng.range(1, days_in_month(y, m)));
    const IsoWeek got = iso_week(CivilDate{y, m, d});
    const auto want = oracles::iso_week(y, m, d);
    CHECK(got.year == want.year);
    CHECK(got.week == want.week);
  }
}

TEST_CASE("add_months clamps to the end of shorter months") {
  const CivilDate jan31{2021, 1, 31};
  CHECK(format_date(add_months(jan31, 1)) == "2021-02-28");
  CHECK(format_date(add_months(CivilDate{2020, 1, 31}, 1)) == "2020-02-29");
  CHECK(format_date(add_months(CivilDate{2021, 3, 31}, -1)) == "2021-02-28");
  CHECK(format_date(add_months(CivilDate{2021, 10, 15}, 5)) == "2022-03-15");
  CHECK(format_date(add_years(CivilDate{2020, 2, 29}, 1)) == "2021-02-28");
}

TEST_CASE("days_in_month knows leap years") {
  CHECK(days_in_month(2000, 2) == 29);   // divisible by 400
  CHECK(days_in_month(1900, 2) == 28);   // centurial non-leap
  CHECK(days_in_month(2024, 2) == 29);
  CHECK(days_in_month(2023, 2) == 28);
  CHECK(days_in_month(2023, 4) == 30);
  CHECK(days_in_month(2023, 12) == 31);
}

TEST_CASE("CivilDate::ok rejects impossible dates") {
  CHECK(CivilDate{2023, 2, 28}.ok());
  CHECK(!CivilDate{2023, 2, 29}.ok());
  CHECK(!CivilDate{2023, 13, 1}.ok());
  CHECK(!CivilDate{2023, 0, 1}.ok());
  CHECK(!CivilDate{2023, 6, 31}.ok());
}

TEST_CASE("format helpers produce zero-padded fields") {
  CHECK(format_date(CivilDate{987, 3, 4}) == "0987-03-04");
  CHECK(format_year_month(CivilDate{2018, 5, 15}) == "2018-05");
  CHECK(format_year(CivilDate{42, 1, 1}) == "0042");
  CHECK(format_iso_week(IsoWeek{2020, 1}) == "2020-W01");
  CHECK(format_time(CivilTime{8 * 60 + 5}) == "T08:05");
  CHECK(format_time(CivilTime{0}) == "T00:00");
  CHECK(format_time(CivilTime{23 * 60 + 59}) == "T23:59");
}

TEST_CASE("parse_document_time accepts dates with and without a clock") {
  auto dt = parse_document_time("2018-05-15");
  REQUIRE(dt.has_value());
  CHECK(format_date(dt->date) == "2018-05-15");
  CHECK(!dt->time.has_value());

  dt = parse_document_time("2018-05-15T08:30");
  REQUIRE(dt.has_value());
  REQUIRE(dt->time.has_value());
  CHECK(dt->time->minutes == 8 * 60 + 30);

  CHECK(!parse_document_time("2018-13-01").has_value());
  CHECK(!parse_document_time("2018-02-30").has_value());
  CHECK(!parse_document_time("2018-05-15T25:00").has_value());
  CHECK(!parse_document_time("2018-05-15X08:30").has_value());
  CHECK(!parse_document_time("nonsense").has_value());
}
