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

#include "tempus/normalize.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <optional>

#include "tempus/preprocess.hpp"
#include "tempus/util.hpp"

namespace tempus {
namespace {

struct Phrase {
  std::vector<std::string> words;  // lowercased, outer punctuation stripped
  const Gazetteer* gaz = nullptr;
  const DocumentTime* dct = nullptr;

  int size() const { return static_cast<int>(words.size()); }
  const std::string& at(int i) const {
    static const std::string empty;
    return (i >= 0 && i < size()) ? words[static_cast<std::size_t>(i)] : empty;
  }
  bool is(int i, std::string_view w) const { return at(i) == w; }
  int month(int i) const { return gaz->month_number(at(i)); }
  int weekday(int i) const { return gaz->weekday_number(at(i)); }
};

std::optional<int> parse_int(std::string_view s) {
  if (s.empty() || s.size() > 9) return std::nullopt;
  int value = 0;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    value = value * 10 + (c - '0');
  }
  return value;
}

// Day-of-month as plain digits ("27") or an ordinal ("27th", "third").
// Cardinal words do not qualify: "february three" is not a date.
int day_number(const Phrase& p, int i) {
  if (auto n = parse_int(p.at(i))) return (*n >= 1 && *n <= 31) ? *n : 0;
  const int n = Gazetteer::ordinal_value(p.at(i));
  return (n >= 1 && n <= 31) ? n : 0;
}

int year_of(const Phrase& p, int i) {
  if (!Gazetteer::year_like(p.at(i))) return 0;
  return *parse_int(p.at(i));
}

// A cardinal count. consumed = number of tokens read; x = plural but
// unspecified ("a few", "several").
struct Count {
  int n = 0;
  bool x = false;
};

std::optional<Count> parse_count(const Phrase& p, int i, int* consumed) {
  int at = i;
  if (p.is(at, "a") || p.is(at, "an")) {
    if (p.is(at + 1, "few") || p.is(at + 1, "several") || p.is(at + 1, "couple")) {
      *consumed = 2;
      return Count{0, true};
    }
    *consumed = 1;
    return Count{1, false};
  }
  if (p.is(at, "few") || p.is(at, "several")) {
    *consumed = 1;
    return Count{0, true};
  }
  if (auto n = parse_int(p.at(at)); n && *n >= 1) {
    *consumed = 1;
    return Count{*n, false};
  }
  const int n = Gazetteer::number_value(p.at(at));
  if (n > 0 && !std::isdigit(static_cast<unsigned char>(p.at(at)[0]))) {
    *consumed = 1;
    return Count{n, false};
  }
  return std::nullopt;
}

enum class Unit { Second, Minute, Hour, Day, Week, Month, Year, Decade, None };

Unit unit_of(std::string_view w) {
  if (w == "second" || w == "seconds") return Unit::Second;
  if (w == "minute" || w == "minutes") return Unit::Minute;
  if (w == "hour" || w == "hours") return Unit::Hour;
  if (w == "day" || w == "days") return Unit::Day;
  if (w == "week" || w == "weeks") return Unit::Week;
  if (w == "month" || w == "months") return Unit::Month;
  if (w == "year" || w == "years") return Unit::Year;
  if (w == "decade" || w == "decades") return Unit::Decade;
  return Unit::None;
}

std::string duration_value(Count c, Unit u) {
  const char* letter = nullptr;
  bool time_part = false;
  switch (u) {
    case Unit::Second: letter = "S"; time_part = true; break;
    case Unit::Minute: letter = "M"; time_part = true; break;
    case Unit::Hour: letter = "H"; time_part = true; break;
    case Unit::Day: letter = "D"; break;
    case Unit::Week: letter = "W"; break;
    case Unit::Month: letter = "M"; break;
    case Unit::Year: letter = "Y"; break;
    case Unit::Decade: letter = "DE"; break;
    case Unit::None: return "";
  }
  char buf[24];
  if (c.x)
    std::snprintf(buf, sizeof buf, "P%sX%s", time_part ? "T" : "", letter);
  else
    std::snprintf(buf, sizeof buf, "P%s%d%s", time_part ? "T" : "", c.n, letter);
  return buf;
}

std::string decade_value(int year) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%03dX", year / 10);
  return buf;
}

// "8", "8:30", "noon" (+ optional am/pm/o'clock) -> "THH:MM".
std::optional<std::string> parse_time_of_day(const Phrase& p, int from, int to) {
  const int n = to - from;
  if (n < 1 || n > 2) return std::nullopt;

  auto fmt = [](int h, int m) { return format_time(CivilTime{h * 60 + m}); };

  if (n == 1) {
    const std::string& w = p.at(from);
    if (w == "noon" || w == "midday") return fmt(12, 0);
    if (w == "midnight") return fmt(0, 0);
    int h = 0, m = 0;
    char extra = 0;
    if (std::sscanf(w.c_str(), "%d:%d%c", &h, &m, &extra) == 2 && h >= 0 && h <= 23 &&
        m >= 0 && m <= 59)
      return fmt(h, m);
    return std::nullopt;
  }

  // hour [":"minutes] followed by am/pm/o'clock
  const std::string& head = p.at(from);
  const std::string& tail = p.at(from + 1);
  int h = -1, m = 0;
  if (auto v = parse_int(head); v) {
    h = *v;
  } else {
    char extra = 0;
    int hh = 0, mm = 0;
    if (std::sscanf(head.c_str(), "%d:%d%c", &hh, &mm, &extra) == 2) {
      h = hh;
      m = mm;
    } else {
      const int word = Gazetteer::number_value(head);
      if (word >= 1 && word <= 12 && !std::isdigit(static_cast<unsigned char>(head[0])))
        h = word;
    }
  }
  if (h < 0 || h > 12 || m < 0 || m > 59 || (h == 0)) return std::nullopt;

  if (tail == "am" || tail == "a.m" || tail == "a.m.")
    return fmt(h == 12 ? 0 : h, m);
  if (tail == "pm" || tail == "p.m" || tail == "p.m.")
    return fmt(h == 12 ? 12 : h + 12, m);
  if (tail == "o'clock" || tail == "oclock") return fmt(h, m);
  return std::nullopt;
}

NormalizationResult make(TimexType type, std::string value) {
  NormalizationResult r;
  r.matched = true;
  r.type = type;
  r.value = std::move(value);
  return r;
}

// ---- rules ------------------------------------------------------------

using Matcher = bool (*)(const Phrase&, NormalizationResult*);

bool rule_iso_date(const Phrase& p, NormalizationResult* out) {
  if (p.size() != 1 || p.at(0).size() != 10) return false;
  int y = 0, m = 0, d = 0;
  char extra = 0;
  if (std::sscanf(p.at(0).c_str(), "%4d-%2d-%2d%c", &y, &m, &d, &extra) != 3)
    return false;
  const CivilDate date{y, m, d};
  if (!date.ok()) return false;
  *out = make(TimexType::Date, format_date(date));
  return true;
}

bool rule_slash_date(const Phrase& p, NormalizationResult* out) {
  if (p.size() != 1) return false;
  int a = 0, b = 0, y = 0;
  char extra = 0;
  if (std::sscanf(p.at(0).c_str(), "%d/%d/%d%c", &a, &b, &y, &extra) != 3)
    return false;
  // Month-first convention; two-digit years stay unresolved.
  if (y < 1000 || y > 2999 || a < 1 || a > 12) return false;
  if (b < 1 || b > days_in_month(y, a)) return false;
  *out = make(TimexType::Date, format_date(CivilDate{y, a, b}));
  return true;
}

bool rule_month_day_year(const Phrase& p, NormalizationResult* out) {
  // february 27 1998 | february 27 , 1998
  const int n = p.size();
  if (n != 3 && n != 4) return false;
  if (n == 4 && !p.is(2, ",")) return false;
  const int m = p.month(0);
  const int d = day_number(p, 1);
  const int y = year_of(p, n - 1);
  if (!m || !d || !y || d > days_in_month(y, m)) return false;
  *out = make(TimexType::Date, format_date(CivilDate{y, m, d}));
  return true;
}

bool rule_day_month_year(const Phrase& p, NormalizationResult* out) {
  // 27 february 1998 | the 27th of february 1998
  int i = 0;
  if (p.is(0, "the")) i = 1;
  const int n = p.size() - i;
  if (n != 3 && n != 4) return false;
  const int d = day_number(p, i);
  if (!d) return false;
  int mi = i + 1;
  if (n == 4) {
    if (!p.is(i + 1, "of")) return false;
    mi = i + 2;
  }
  const int m = p.month(mi);
  const int y = year_of(p, mi + 1);
  if (!m || !y || d > days_in_month(y, m)) return false;
  *out = make(TimexType::Date, format_date(CivilDate{y, m, d}));
  return true;
}

bool rule_month_year(const Phrase& p, NormalizationResult* out) {
  if (p.size() != 2) return false;
  const int m = p.month(0);
  const int y = year_of(p, 1);
  if (!m || !y) return false;
  *out = make(TimexType::Date, format_year_month(CivilDate{y, m, 1}));
  return true;
}

bool rule_bare_year(const Phrase& p, NormalizationResult* out) {
  if (p.size() != 1) return false;
  const int y = year_of(p, 0);
  if (!y) return false;
  *out = make(TimexType::Date, format_year(CivilDate{y, 1, 1}));
  return true;
}

bool rule_decade(const Phrase& p, NormalizationResult* out) {
  // the 1990s | 1990s
  int i = 0;
  if (p.is(0, "the")) i = 1;
  if (p.size() != i + 1) return false;
  const std::string& w = p.at(i);
  if (w.size() != 5 || w.back() != 's') return false;
  const auto y = parse_int(std::string_view(w).substr(0, 4));
  if (!y || *y < 1000 || *y > 2999 || *y % 10 != 0) return false;
  *out = make(TimexType::Date, decade_value(*y));
  return true;
}

bool rule_month_day(const Phrase& p, NormalizationResult* out) {
  // february 27  (year from the document time)
  if (p.size() != 2) return false;
  const int m = p.month(0);
  const int d = day_number(p, 1);
  if (!m || !d) return false;
  const int y = p.dct->date.year;
  if (d > days_in_month(y, m)) return false;
  *out = make(TimexType::Date, format_date(CivilDate{y, m, d}));
  return true;
}

bool rule_day_month(const Phrase& p, NormalizationResult* out) {
  // 27 february | the 27th of february  (year from the document time)
  int i = 0;
  if (p.is(0, "the")) i = 1;
  const int n = p.size() - i;
  if (n != 2 && n != 3) return false;
  const int d = day_number(p, i);
  if (!d) return false;
  int mi = i + 1;
  if (n == 3) {
    if (!p.is(i + 1, "of")) return false;
    mi = i + 2;
  }
  const int m = p.month(mi);
  if (!m) return false;
  const int y = p.dct->date.year;
  if (d > days_in_month(y, m)) return false;
  *out = make(TimexType::Date, format_date(CivilDate{y, m, d}));
  return true;
}

bool rule_month_alone(const Phrase& p, NormalizationResult* out) {
  if (p.size() != 1) return false;
  const int m = p.month(0);
  if (!m) return false;
  *out = make(TimexType::Date, format_year_month(CivilDate{p.dct->date.year, m, 1}));
  return true;
}

bool rule_deictic_day(const Phrase& p, NormalizationResult* out) {
  if (p.size() != 1) return false;
  int delta = 0;
  if (p.is(0, "today")) delta = 0;
  else if (p.is(0, "tomorrow")) delta = 1;
  else if (p.is(0, "yesterday")) delta = -1;
  else return false;
  *out = make(TimexType::Date, format_date(add_days(p.dct->date, delta)));
  return true;
}

bool rule_tonight(const Phrase& p, NormalizationResult* out) {
  if (p.size() != 1 || !p.is(0, "tonight")) return false;
  *out = make(TimexType::Time, format_date(p.dct->date) + "TXX:XX");
  return true;
}

bool rule_day_part(const Phrase& p, NormalizationResult* out) {
  // this morning | last night | tomorrow evening | yesterday afternoon
  if (p.size() != 2) return false;
  int delta = 0;
  const std::string& head = p.at(0);
  if (head == "this" || head == "today") delta = 0;
  else if (head == "last" || head == "yesterday" || head == "previous") delta = -1;
  else if (head == "next" || head == "tomorrow" || head == "coming") delta = 1;
  else return false;
  const std::string& part = p.at(1);
  if (part != "morning" && part != "afternoon" && part != "evening" && part != "night")
    return false;
  *out = make(TimexType::Time, format_date(add_days(p.dct->date, delta)) + "TXX:XX");
  return true;
}

bool rule_weekday(const Phrase& p, NormalizationResult* out) {
  // monday | this monday | next monday | last monday | coming monday
  int i = 0;
  enum { Bare, Next, Last } mode = Bare;
  if (p.is(0, "next") || p.is(0, "coming")) { mode = Next; i = 1; }
  else if (p.is(0, "last")) { mode = Last; i = 1; }
  else if (p.is(0, "this")) { i = 1; }
  if (p.size() != i + 1) return false;
  const int target = p.weekday(i);
  if (!target) return false;

  const int current = iso_weekday(p.dct->date);
  int delta = 0;
  switch (mode) {
    case Next:
      // Strictly in the future: the same weekday means a week ahead.
      delta = (target - current - 1 + 7) % 7 + 1;
      break;
    case Last:
      delta = -((current - target - 1 + 7) % 7 + 1);
      break;
    case Bare: {
      const int forward = (target - current + 7) % 7;
      const int backward = (current - target + 7) % 7;
      delta = forward <= backward ? forward : -backward;
      break;
    }
  }
  *out = make(TimexType::Date, format_date(add_days(p.dct->date, delta)));
  return true;
}

bool rule_relative_period(const Phrase& p, NormalizationResult* out) {
  // next week | last month | this year | next weekend | last decade
  if (p.size() != 2) return false;
  int delta = 0;
  if (p.is(0, "this") || p.is(0, "current")) delta = 0;
  else if (p.is(0, "next") || p.is(0, "coming")) delta = 1;
  else if (p.is(0, "last") || p.is(0, "previous")) delta = -1;
  else return false;

  const CivilDate base = p.dct->date;
  const std::string& unit = p.at(1);
  if (unit == "week") {
    *out = make(TimexType::Date, format_iso_week(iso_week(add_days(base, 7 * delta))));
  } else if (unit == "weekend") {
    *out = make(TimexType::Date,
                format_iso_week(iso_week(add_days(base, 7 * delta))) + "-WE");
  } else if (unit == "month") {
    *out = make(TimexType::Date, format_year_month(add_months(base, delta)));
  } else if (unit == "year") {
    *out = make(TimexType::Date, format_year(add_years(base, delta)));
  } else if (unit == "decade") {
    *out = make(TimexType::Date, decade_value(add_years(base, 10 * delta).year));
  } else {
    return false;
  }
  return true;
}

bool rule_offset(const Phrase& p, NormalizationResult* out) {
  // three days ago | a year later | two weeks from now | a few months earlier
  int consumed = 0;
  const auto count = parse_count(p, 0, &consumed);
  if (!count) return false;
  const Unit unit = unit_of(p.at(consumed));
  if (unit == Unit::None || unit == Unit::Second || unit == Unit::Minute ||
      unit == Unit::Hour)
    return false;
  const int rest = consumed + 1;
  int direction = 0;
  if (p.size() == rest + 1) {
    if (p.is(rest, "ago") || p.is(rest, "earlier") || p.is(rest, "before")) direction = -1;
    else if (p.is(rest, "later") || p.is(rest, "hence")) direction = 1;
    else return false;
  } else if (p.size() == rest + 2 && p.is(rest, "from") && p.is(rest + 1, "now")) {
    direction = 1;
  } else {
    return false;
  }

  if (count->x) {
    *out = make(TimexType::Date, direction < 0 ? "PAST_REF" : "FUTURE_REF");
    return true;
  }
  const CivilDate base = p.dct->date;
  const int n = count->n * direction;
  switch (unit) {
    case Unit::Day:
      *out = make(TimexType::Date, format_date(add_days(base, n)));
      break;
    case Unit::Week:
      *out = make(TimexType::Date, format_iso_week(iso_week(add_days(base, 7 * n))));
      break;
    case Unit::Month:
      *out = make(TimexType::Date, format_year_month(add_months(base, n)));
      break;
    case Unit::Year:
      *out = make(TimexType::Date, format_year(add_years(base, n)));
      break;
    case Unit::Decade:
      *out = make(TimexType::Date, decade_value(add_years(base, 10 * n).year));
      break;
    default:
      return false;
  }
  return true;
}

bool rule_set_single(const Phrase& p, NormalizationResult* out) {
  if (p.size() != 1) return false;
  const std::string& w = p.at(0);
  if (w == "daily") *out = make(TimexType::Set, "XXXX-XX-XX");
  else if (w == "weekly") *out = make(TimexType::Set, "XXXX-WXX");
  else if (w == "monthly") *out = make(TimexType::Set, "XXXX-XX");
  else if (w == "yearly" || w == "annually") *out = make(TimexType::Set, "XXXX");
  else return false;
  return true;
}

bool rule_set_every(const Phrase& p, NormalizationResult* out) {
  if (p.size() != 2 || (!p.is(0, "every") && !p.is(0, "each"))) return false;
  const std::string& w = p.at(1);
  if (const int wd = p.weekday(1); wd) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "XXXX-WXX-%d", wd);
    *out = make(TimexType::Set, buf);
    return true;
  }
  if (const int m = p.month(1); m) {
    char buf[12];
    std::snprintf(buf, sizeof buf, "XXXX-%02d", m);
    *out = make(TimexType::Set, buf);
    return true;
  }
  if (w == "day") *out = make(TimexType::Set, "XXXX-XX-XX");
  else if (w == "week") *out = make(TimexType::Set, "XXXX-WXX");
  else if (w == "month") *out = make(TimexType::Set, "XXXX-XX");
  else if (w == "year") *out = make(TimexType::Set, "XXXX");
  else return false;
  return true;
}

bool rule_duration(const Phrase& p, NormalizationResult* out) {
  // three years | an hour | a few weeks | half an hour | 90 minutes
  if (p.size() == 3 && p.is(0, "half") && (p.is(1, "an") || p.is(1, "a")) &&
      p.is(2, "hour")) {
    *out = make(TimexType::Duration, "PT30M");
    return true;
  }
  int consumed = 0;
  const auto count = parse_count(p, 0, &consumed);
  if (!count) return false;
  if (p.size() != consumed + 1) return false;
  const Unit unit = unit_of(p.at(consumed));
  if (unit == Unit::None) return false;
  *out = make(TimexType::Duration, duration_value(*count, unit));
  return true;
}

bool rule_clock_time(const Phrase& p, NormalizationResult* out) {
  const auto suffix = parse_time_of_day(p, 0, p.size());
  if (!suffix) return false;
  *out = make(TimexType::Time, format_date(p.dct->date) + *suffix);
  return true;
}

struct Rule {
  const char* name;
  bool needs_dct;
  Matcher match;
};

// First match wins; absolute forms come before document-time-relative ones.
constexpr Rule kRules[] = {
    {"iso_date", false, rule_iso_date},
    {"slash_date", false, rule_slash_date},
    {"month_day_year", false, rule_month_day_year},
    {"day_month_year", false, rule_day_month_year},
    {"month_year", false, rule_month_year},
    {"bare_year", false, rule_bare_year},
    {"decade", false, rule_decade},
    {"month_day", true, rule_month_day},
    {"day_month", true, rule_day_month},
    {"month_alone", true, rule_month_alone},
    {"deictic_day", true, rule_deictic_day},
    {"tonight", true, rule_tonight},
    {"day_part", true, rule_day_part},
    {"weekday", true, rule_weekday},
    {"relative_period", true, rule_relative_period},
    {"offset", true, rule_offset},
    {"set_single", false, rule_set_single},
    {"set_every", false, rule_set_every},
    {"duration", false, rule_duration},
    {"clock_time", true, rule_clock_time},
};

bool is_strippable_preposition(const std::string& w) {
  return w == "on" || w == "in" || w == "during" || w == "by";
}

}  // namespace

NormalizationResult Normalizer::normalize(const std::vector<std::string>& phrase_words,
                                          const std::optional<DocumentTime>& dct) const {
  Phrase phrase;
  phrase.gaz = gaz_;
  phrase.dct = dct ? &*dct : nullptr;
  phrase.words.reserve(phrase_words.size());
  for (const std::string& w : phrase_words) phrase.words.push_back(to_lower(w));

  while (!phrase.words.empty() && is_strippable_preposition(phrase.words.front()))
    phrase.words.erase(phrase.words.begin());
  while (!phrase.words.empty() &&
         (phrase.words.back() == "," || phrase.words.back() == "."))
    phrase.words.pop_back();
  if (phrase.words.empty()) return {};

  // "<date> at <time>": normalize both sides, then splice the time onto the
  // date. This works without a document time when the date is absolute.
  for (int i = 1; i + 1 < phrase.size(); ++i) {
    if (!phrase.is(i, "at")) continue;
    std::vector<std::string> left(phrase.words.begin(), phrase.words.begin() + i);
    const NormalizationResult date = normalize(left, dct);
    if (!date.matched || date.type != TimexType::Date || date.value.size() != 10)
      break;
    const auto time = parse_time_of_day(phrase, i + 1, phrase.size());
    if (!time) break;
    NormalizationResult r = make(TimexType::Time, date.value + *time);
    r.rule = "date_at_time";
    return r;
  }

  for (const Rule& rule : kRules) {
    if (rule.needs_dct && !phrase.dct) continue;
    NormalizationResult result;
    if (rule.match(phrase, &result)) {
      result.rule = rule.name;
      return result;
    }
  }
  return {};
}

NormalizationResult Normalizer::normalize_tokens(
    const std::vector<Token>& tokens, int begin, int end,
    const std::optional<DocumentTime>& dct) const {
  std::vector<std::string> words;
  words.reserve(static_cast<std::size_t>(end - begin));
  for (int i = begin; i < end; ++i)
    words.push_back(tokens[static_cast<std::size_t>(i)].surface);
  return normalize(words, dct);
}

NormalizationResult Normalizer::normalize_text(
    std::string_view phrase, const std::optional<DocumentTime>& dct) const {
  const std::vector<Token> tokens = preprocess::tokenize(phrase);
  std::vector<std::string> words;
  words.reserve(tokens.size());
  for (const Token& t : tokens) words.push_back(t.surface);
  return normalize(words, dct);
}

}  // namespace tempus
