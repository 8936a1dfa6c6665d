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

#include <chrono>
#include <cstdio>

namespace tempus {

namespace {

namespace chr = std::chrono;

chr::year_month_day to_ymd(CivilDate d) {
  return chr::year{d.year} / d.month / d.day;
}

CivilDate from_ymd(chr::year_month_day ymd) {
  return CivilDate{int(ymd.year()), int(unsigned(ymd.month())), int(unsigned(ymd.day()))};
}

}  // namespace

bool CivilDate::ok() const { return to_ymd(*this).ok(); }

CivilDate add_days(CivilDate d, int days) {
  chr::sys_days sd{to_ymd(d)};
  sd += chr::days{days};
  return from_ymd(chr::year_month_day{sd});
}

CivilDate add_months(CivilDate d, int months) {
  chr::year_month ym{chr::year{d.year}, chr::month{unsigned(d.month)}};
  ym += chr::months{months};
  chr::year_month_day ymd = ym / d.day;
  if (!ymd.ok()) ymd = ym / chr::last;
  return from_ymd(ymd);
}

CivilDate add_years(CivilDate d, int years) { return add_months(d, 12 * years); }

int iso_weekday(CivilDate d) {
  chr::weekday wd{chr::sys_days{to_ymd(d)}};
  return static_cast<int>(wd.iso_encoding());
}

int days_in_month(int year, int month) {
  chr::year_month_day_last last{chr::year{year} / chr::month{unsigned(month)} / chr::last};
  return static_cast<int>(unsigned(last.day()));
}

IsoWeek iso_week(CivilDate d) {
  // The ISO week of a date is the week of its Thursday; week 1 is the week
  // containing the year's first Thursday.
  CivilDate thursday = add_days(d, 4 - iso_weekday(d));
  chr::sys_days th{to_ymd(thursday)};
  chr::sys_days jan1{chr::year{thursday.year} / 1 / 1};
  int week = static_cast<int>((th - jan1).count()) / 7 + 1;
  return IsoWeek{thursday.year, week};
}

std::string format_date(CivilDate d) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", d.year, d.month, d.day);
  return buf;
}

std::string format_year_month(CivilDate d) {
  char buf[12];
  std::snprintf(buf, sizeof buf, "%04d-%02d", d.year, d.month);
  return buf;
}

std::string format_year(CivilDate d) {
  char buf[8];
  std::snprintf(buf, sizeof buf, "%04d", d.year);
  return buf;
}

std::string format_iso_week(IsoWeek w) {
  char buf[12];
  std::snprintf(buf, sizeof buf, "%04d-W%02d", w.year, w.week);
  return buf;
}

std::string format_time(CivilTime t) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "T%02d:%02d", t.minutes / 60, t.minutes % 60);
  return buf;
}

std::optional<DocumentTime> parse_document_time(std::string_view s) {
  int y = 0, m = 0, d = 0, hh = 0, mm = 0;
  char tsep = 0;
  int n = std::sscanf(std::string(s).c_str(), "%4d-%2d-%2d%c%2d:%2d", &y, &m, &d, &tsep, &hh, &mm);
  if (n < 3) return std::nullopt;
  CivilDate date{y, m, d};
  if (!date.ok()) return std::nullopt;
  DocumentTime dt{date, std::nullopt};
  if (n == 6 && tsep == 'T') {
    if (hh < 0 || hh > 23 || mm < 0 || mm > 59) return std::nullopt;
    dt.time = CivilTime{hh * 60 + mm};
  } else if (n > 3) {
    return std::nullopt;
  }
  return dt;
}

}  // namespace tempus
