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

#include "tempus/temprob.hpp"

#include <algorithm>
#include <cinttypes>
#include <cstdio>

#include "tempus/util.hpp"

namespace tempus {
namespace {

struct Key {
  std::pair<std::string, std::string> pair;
  bool flipped;  // the queried order was (second, first)
};

Key canonical(std::string_view a, std::string_view b) {
  if (b < a) return {{std::string(b), std::string(a)}, true};
  return {{std::string(a), std::string(b)}, false};
}

}  // namespace

void TemProb::add(std::string_view lemma1, std::string_view lemma2,
                  EeRelation label) {
  if (label != EeRelation::Before && label != EeRelation::After) return;
  const Key key = canonical(lemma1, lemma2);
  const bool before = (label == EeRelation::Before) != key.flipped;
  Counts& c = counts_[key.pair];
  if (before)
    ++c.before;
  else
    ++c.after;
}

double TemProb::p_before(std::string_view lemma1, std::string_view lemma2) const {
  const Key key = canonical(lemma1, lemma2);
  const auto it = counts_.find(key.pair);
  if (it == counts_.end()) return 0.5;
  const double before = static_cast<double>(it->second.before) + 1.0;
  const double after = static_cast<double>(it->second.after) + 1.0;
  const double p = before / (before + after);
  return key.flipped ? 1.0 - p : p;
}

std::uint64_t TemProb::count(std::string_view lemma1, std::string_view lemma2) const {
  const auto it = counts_.find(canonical(lemma1, lemma2).pair);
  return it == counts_.end() ? 0 : it->second.before + it->second.after;
}

bool TemProb::seen(std::string_view lemma1, std::string_view lemma2) const {
  return counts_.find(canonical(lemma1, lemma2).pair) != counts_.end();
}

int TemProb::decile(std::string_view lemma1, std::string_view lemma2) const {
  const double p = p_before(lemma1, lemma2);
  return std::min(9, static_cast<int>(p * 10.0));
}

int TemProb::count_bucket(std::string_view lemma1, std::string_view lemma2) const {
  std::uint64_t n = count(lemma1, lemma2) + 1;
  int bucket = 0;
  while (n > 1) {
    n >>= 1;
    ++bucket;
  }
  return bucket;
}

void TemProb::save(const std::string& path) const {
  std::string out;
  char line[256];
  for (const auto& [key, c] : counts_) {
    std::snprintf(line, sizeof line, "%s\t%s\t%" PRIu64 "\t%" PRIu64 "\n",
                  key.first.c_str(), key.second.c_str(), c.before, c.after);
    out += line;
  }
  atomic_write_file(path, out);
}

TemProb TemProb::load(const std::string& path) {
  const std::string content = read_file(path);
  TemProb table;
  std::size_t line_no = 0;
  for (std::string_view line : split(content, '\n')) {
    ++line_no;
    if (line.empty()) continue;
    const std::vector<std::string_view> fields = split(line, '\t');
    if (fields.size() != 4)
      throw FormatError(path + ": expected 4 tab-separated fields", line_no);
    Counts c;
    char extra = 0;
    if (std::sscanf(std::string(fields[2]).c_str(), "%" SCNu64 "%c", &c.before,
                    &extra) != 1 ||
        std::sscanf(std::string(fields[3]).c_str(), "%" SCNu64 "%c", &c.after,
                    &extra) != 1)
      throw FormatError(path + ": bad count", line_no);
    if (fields[1] < fields[0])
      throw FormatError(path + ": key pair not in canonical order", line_no);
    const auto key = std::pair(std::string(fields[0]), std::string(fields[1]));
    if (!table.counts_.emplace(key, c).second)
      throw FormatError(path + ": duplicate pair", line_no);
  }
  return table;
}

}  // namespace tempus
