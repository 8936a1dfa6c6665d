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

#ifndef TEMPUS_TEMPROB_HPP_
#define TEMPUS_TEMPROB_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "tempus/core.hpp"

namespace tempus {

// Before/after counts for verb lemma pairs, collected from training data and
// fed back to the relation classifier as prior features. Pairs are stored
// under the lexicographically smaller lemma first; asymmetric queries flip.
class TemProb {
 public:
  // Records one observed event pair; only Before and After contribute.
  void add(std::string_view lemma1, std::string_view lemma2, EeRelation label);

  // P(lemma1 before lemma2) with add-one smoothing; 0.5 for unseen pairs.
  double p_before(std::string_view lemma1, std::string_view lemma2) const;
  std::uint64_t count(std::string_view lemma1, std::string_view lemma2) const;
  bool seen(std::string_view lemma1, std::string_view lemma2) const;
  std::size_t size() const { return counts_.size(); }

  // Feature buckets: p_before decile 0..9, and floor(log2(count+1)).
  int decile(std::string_view lemma1, std::string_view lemma2) const;
  int count_bucket(std::string_view lemma1, std::string_view lemma2) const;

  // Tab-separated "lemma1 lemma2 count_before count_after", sorted by key.
  void save(const std::string& path) const;
  static TemProb load(const std::string& path);

 private:
  struct Counts {
    std::uint64_t before = 0;
    std::uint64_t after = 0;
  };
  // Ordered so serialization is canonical.
  std::map<std::pair<std::string, std::string>, Counts> counts_;
};

}  // namespace tempus

#endif  // TEMPUS_TEMPROB_HPP_
