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

#ifndef TEMPUS_GAZETTEER_HPP_
#define TEMPUS_GAZETTEER_HPP_

#include <string>
#include <string_view>
#include <unordered_map>

namespace tempus {

enum class GazClass {
  Month,
  Weekday,
  Ordinal,
  TemporalNoun,  // day, week, morning, summer, decade, ...
  Relative,      // today, ago, next, last, ...
  TimeWord,      // am, pm, o'clock, ...
  NumberWord,    // one..twenty, few, several, ...
  Frequency,     // every, daily, weekly, ...
  None,
};

const char* gaz_class_name(GazClass c);

// Word lists behind both the chunker's trigger prefilter and the
// normalization rules. Lookups take lowercased surface forms.
class Gazetteer {
 public:
  Gazetteer();
  static const Gazetteer& bundled();

  GazClass word_class(std::string_view lowered) const;

  // A token can start or continue a timex candidate window. Any listed word
  // and any token containing a digit qualifies.
  bool is_trigger(std::string_view lowered) const;

  // 1..12, or 0 when the word is not a month name or abbreviation.
  int month_number(std::string_view lowered) const;
  // ISO numbering, Monday = 1 .. Sunday = 7; 0 when not a weekday.
  int weekday_number(std::string_view lowered) const;
  // Cardinals: "three" -> 3; "few"/"several" yield 0 (known-plural, unknown
  // count); -1 when not a number word.
  static int number_value(std::string_view lowered);
  // Ordinals, both words and digit forms: "third" -> 3, "23rd" -> 23;
  // -1 when not an ordinal.
  static int ordinal_value(std::string_view lowered);

  static bool year_like(std::string_view token);    // 1000..2999, four digits
  static bool has_digit(std::string_view token);

 private:
  std::unordered_map<std::string, GazClass> classes_;
  std::unordered_map<std::string, int> months_;
  std::unordered_map<std::string, int> weekdays_;
};

}  // namespace tempus

#endif  // TEMPUS_GAZETTEER_HPP_
