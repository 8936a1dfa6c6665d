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

#ifndef TEMPUS_NORMALIZE_HPP_
#define TEMPUS_NORMALIZE_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tempus/calendar.hpp"
#include "tempus/core.hpp"
#include "tempus/gazetteer.hpp"

namespace tempus {

struct NormalizationResult {
  bool matched = false;
  TimexType type = TimexType::Date;
  std::string value;  // ISO-8601 style value string
  std::string rule;   // name of the rule that matched, for diagnostics
};

// Rule-based value assignment for detected temporal expressions. Rules are
// tried in a fixed order and the first match wins; rules that resolve
// relative expressions are skipped when no document time is available, in
// which case normalization reports no match.
//
// Conventions this engine commits to:
//  - slash dates are month-first: 02/03/1998 -> 1998-02-03
//  - "next <weekday>" is strictly in the future (a week ahead when the
//    document is created on that weekday); "last" strictly in the past;
//    a bare weekday resolves to the nearest occurrence, ties to the future
//  - offsets keep the granularity of their unit: "two weeks ago" is an ISO
//    week, "three years ago" just a year
//  - times resolve onto the document date: "8 am" -> YYYY-MM-DDT08:00;
//    "tonight" -> YYYY-MM-DDTXX:XX
//  - unspecified counts use X: "a few days" -> PXD, "every Monday" ->
//    XXXX-WXX-1, "the 1990s" -> 199X
class Normalizer {
 public:
  Normalizer() : gaz_(&Gazetteer::bundled()) {}

  NormalizationResult normalize(const std::vector<std::string>& phrase_words,
                                const std::optional<DocumentTime>& dct) const;

  // Convenience overloads for token spans and raw phrases (tests, CLI).
  NormalizationResult normalize_tokens(const std::vector<Token>& tokens, int begin,
                                       int end,
                                       const std::optional<DocumentTime>& dct) const;
  NormalizationResult normalize_text(std::string_view phrase,
                                     const std::optional<DocumentTime>& dct) const;

 private:
  const Gazetteer* gaz_;
};

}  // namespace tempus

#endif  // TEMPUS_NORMALIZE_HPP_
