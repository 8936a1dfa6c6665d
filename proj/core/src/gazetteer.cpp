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

#include "tempus/gazetteer.hpp"

#include <cctype>
#include <initializer_list>

namespace tempus {
namespace {

constexpr const char* kMonths[12] = {"january", "february", "march",     "april",
                                     "may",     "june",     "july",      "august",
                                     "september", "october", "november", "december"};
constexpr const char* kMonthAbbrev[12] = {"jan", "feb", "mar", "apr", "may", "jun",
                                          "jul", "aug", "sep", "oct", "nov", "dec"};
constexpr const char* kWeekdays[7] = {"monday", "tuesday",  "wednesday", "thursday",
                                      "friday", "saturday", "sunday"};

struct WordValue {
  const char* word;
  int value;
};

constexpr WordValue kNumberWords[] = {
    {"one", 1},       {"two", 2},       {"three", 3},    {"four", 4},
    {"five", 5},      {"six", 6},       {"seven", 7},    {"eight", 8},
    {"nine", 9},      {"ten", 10},      {"eleven", 11},  {"twelve", 12},
    {"thirteen", 13}, {"fourteen", 14}, {"fifteen", 15}, {"sixteen", 16},
    {"seventeen", 17}, {"eighteen", 18}, {"nineteen", 19}, {"twenty", 20},
    {"thirty", 30},   {"forty", 40},    {"fifty", 50},   {"sixty", 60},
    {"seventy", 70},  {"eighty", 80},   {"ninety", 90},  {"hundred", 100},
    {"dozen", 12},    {"couple", 2},    {"few", 0},      {"several", 0},
};

constexpr WordValue kOrdinalWords[] = {
    {"first", 1},   {"second", 2},  {"third", 3},   {"fourth", 4},
    {"fifth", 5},   {"sixth", 6},   {"seventh", 7}, {"eighth", 8},
    {"ninth", 9},   {"tenth", 10},  {"eleventh", 11}, {"twelfth", 12},
    {"twentieth", 20}, {"thirtieth", 30},
};

}  // namespace

const char* gaz_class_name(GazClass c) {
  switch (c) {
    case GazClass::Month: return "MONTH";
    case GazClass::Weekday: return "WEEKDAY";
    case GazClass::Ordinal: return "ORDINAL";
    case GazClass::TemporalNoun: return "TNOUN";
    case GazClass::Relative: return "REL";
    case GazClass::TimeWord: return "TIMEW";
    case GazClass::NumberWord: return "NUMW";
    case GazClass::Frequency: return "FREQ";
    case GazClass::None: return "NONE";
  }
  return "NONE";
}

Gazetteer::Gazetteer() {
  auto add = [this](GazClass c, std::initializer_list<const char*> words) {
    for (const char* w : words) classes_.emplace(w, c);
  };

  for (int i = 0; i < 12; ++i) {
    classes_.emplace(kMonths[i], GazClass::Month);
    months_.emplace(kMonths[i], i + 1);
    months_.emplace(kMonthAbbrev[i], i + 1);
    months_.emplace(std::string(kMonthAbbrev[i]) + ".", i + 1);
    classes_.emplace(kMonthAbbrev[i], GazClass::Month);
    classes_.emplace(std::string(kMonthAbbrev[i]) + ".", GazClass::Month);
  }
  // "sept" is a common four-letter exception.
  months_.emplace("sept", 9);
  months_.emplace("sept.", 9);
  classes_.emplace("sept", GazClass::Month);
  classes_.emplace("sept.", GazClass::Month);

  for (int i = 0; i < 7; ++i) {
    classes_.emplace(kWeekdays[i], GazClass::Weekday);
    weekdays_.emplace(kWeekdays[i], i + 1);
    std::string abbrev(kWeekdays[i], 3);
    weekdays_.emplace(abbrev, i + 1);
    weekdays_.emplace(abbrev + ".", i + 1);
    classes_.emplace(abbrev + ".", GazClass::Weekday);
  }
  weekdays_.emplace("thurs", 4);
  weekdays_.emplace("tues", 2);

  add(GazClass::TemporalNoun,
      {"day",     "days",     "week",    "weeks",   "month",   "months",
       "year",    "years",    "decade",  "decades", "century", "centuries",
       "hour",    "hours",    "minute",  "minutes", "second",  "seconds",
       "morning", "afternoon", "evening", "night",  "noon",    "midnight",
       "weekend", "weekends", "quarter", "summer",  "winter",  "spring",
       "autumn",  "fall",     "fortnight"});
  add(GazClass::Relative,
      {"today",   "tomorrow", "yesterday", "tonight", "now",     "ago",
       "next",    "last",     "this",      "coming",  "current", "recent",
       "recently", "earlier",  "later",     "future",  "past",    "previous",
       "following", "upcoming", "soon"});
  add(GazClass::TimeWord, {"am", "pm", "a.m", "p.m", "a.m.", "p.m.", "o'clock",
                           "oclock", "midday"});
  add(GazClass::Frequency, {"every", "each", "daily", "weekly", "monthly",
                            "yearly", "annually", "annual", "per"});

  for (const WordValue& w : kNumberWords) classes_.emplace(w.word, GazClass::NumberWord);
  for (const WordValue& w : kOrdinalWords) classes_.emplace(w.word, GazClass::Ordinal);
}

const Gazetteer& Gazetteer::bundled() {
  static const Gazetteer instance;
  return instance;
}

GazClass Gazetteer::word_class(std::string_view lowered) const {
  auto it = classes_.find(std::string(lowered));
  return it == classes_.end() ? GazClass::None : it->second;
}

bool Gazetteer::is_trigger(std::string_view lowered) const {
  return has_digit(lowered) || word_class(lowered) != GazClass::None;
}

int Gazetteer::month_number(std::string_view lowered) const {
  auto it = months_.find(std::string(lowered));
  return it == months_.end() ? 0 : it->second;
}

int Gazetteer::weekday_number(std::string_view lowered) const {
  auto it = weekdays_.find(std::string(lowered));
  return it == weekdays_.end() ? 0 : it->second;
}

int Gazetteer::number_value(std::string_view lowered) {
  for (const WordValue& w : kNumberWords)
    if (lowered == w.word) return w.value;
  return -1;
}

int Gazetteer::ordinal_value(std::string_view lowered) {
  for (const WordValue& w : kOrdinalWords)
    if (lowered == w.word) return w.value;
  // Digit ordinals: 1st, 2nd, 3rd, 4th ... 31st.
  if (lowered.size() >= 3) {
    const std::string_view suffix = lowered.substr(lowered.size() - 2);
    if (suffix == "st" || suffix == "nd" || suffix == "rd" || suffix == "th") {
      const std::string_view digits = lowered.substr(0, lowered.size() - 2);
      bool all = !digits.empty();
      int value = 0;
      for (char c : digits) {
        if (!std::isdigit(static_cast<unsigned char>(c))) { all = false; break; }
        value = value * 10 + (c - '0');
      }
      if (all) return value;
    }
  }
  return -1;
}

bool Gazetteer::year_like(std::string_view token) {
  if (token.size() != 4) return false;
  for (char c : token)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return token[0] == '1' || token[0] == '2';
}

bool Gazetteer::has_digit(std::string_view token) {
  for (char c : token)
    if (std::isdigit(static_cast<unsigned char>(c))) return true;
  return false;
}

}  // namespace tempus
