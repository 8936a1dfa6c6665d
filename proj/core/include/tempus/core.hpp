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

#ifndef TEMPUS_CORE_HPP_
#define TEMPUS_CORE_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tempus/calendar.hpp"

namespace tempus {

// Half-open character range [start, end) into a document's text.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t length() const { return end - start; }
  bool overlaps(const Span& o) const { return start < o.end && o.start < end; }
  friend bool operator==(const Span&, const Span&) = default;
  friend auto operator<=>(const Span&, const Span&) = default;
};

// Coarse part-of-speech tags. Downstream features only need the
// verb/noun/preposition distinctions, so a full treebank set is not used.
enum class Pos { Noun, Verb, Adj, Adv, Prep, Det, Num, Punct, Other };

std::string_view pos_name(Pos p);
std::optional<Pos> pos_from_name(std::string_view name);

struct Token {
  Span span;
  std::string surface;
  std::string lemma;
  Pos pos = Pos::Other;
  int sentence_index = 0;
};

// One unit of processing: raw text plus its token/sentence structure and the
// document creation time used to resolve relative time expressions.
struct Document {
  std::string id;
  std::string text;
  std::vector<Token> tokens;
  // Sentences as [begin, end) token-index ranges partitioning the token list.
  std::vector<std::pair<int, int>> sentences;
  std::optional<DocumentTime> dct;

  int sentence_of(int token_index) const { return tokens[static_cast<std::size_t>(token_index)].sentence_index; }
  std::string_view token_text(int token_index) const {
    const Token& t = tokens[static_cast<std::size_t>(token_index)];
    return std::string_view(text).substr(t.span.start, t.span.length());
  }
};

enum class TimexType { Date, Time, Duration, Set };

std::string_view timex_type_name(TimexType t);
std::optional<TimexType> timex_type_from_name(std::string_view name);

struct TimexMention {
  int id = -1;
  Span span;
  TimexType type = TimexType::Date;
  std::string value;  // normalized TIMEX3-style value; empty if unnormalized
};

struct EventMention {
  int id = -1;
  int token_index = -1;  // head verb token
  std::string lemma;
};

// Event-Event relation labels. The enum order (Before < After < Equal <
// Vague) is also the tie-break order used by the global solver.
enum class EeRelation { Before, After, Equal, Vague };
inline constexpr int kNumEeLabels = 4;

// Event-Timex labels are only equal / not-equal.
enum class EtRelation { Equal, NotEqual };
inline constexpr int kNumEtLabels = 2;

std::string_view ee_relation_name(EeRelation r);
std::optional<EeRelation> ee_relation_from_name(std::string_view name);
std::string_view et_relation_name(EtRelation r);
std::optional<EtRelation> et_relation_from_name(std::string_view name);

// Swaps Before and After; Equal and Vague are their own reverses.
EeRelation reverse_ee(EeRelation r);

// Softmax scores over the label set of one edge kind, indexed by enum order.
// Probabilities are nonnegative and sum to 1 within 1e-9.
using EeDistribution = std::array<double, kNumEeLabels>;
using EtDistribution = std::array<double, kNumEtLabels>;

bool is_valid_distribution(const double* p, int n);

struct EeEdge {
  int node1 = -1;  // both event node ids, node1 < node2 in document order
  int node2 = -1;
  EeRelation label = EeRelation::Vague;
  EeDistribution dist{};
};

struct EtEdge {
  int event = -1;
  int timex = -1;
  EtRelation label = EtRelation::NotEqual;
  EtDistribution dist{};
};

// Nodes are events and Timexes; node ids are dense integers assigned in
// document order with the two mention kinds interleaved by span start.
struct TemporalGraph {
  std::vector<EventMention> events;
  std::vector<TimexMention> timexes;
  std::vector<EeEdge> ee_edges;
  std::vector<EtEdge> et_edges;

  int node_count() const { return static_cast<int>(events.size() + timexes.size()); }
  bool is_event(int node_id) const;
  const EventMention* event_by_id(int node_id) const;
  const TimexMention* timex_by_id(int node_id) const;

  // Structural checks: ids dense and unique, edge endpoints exist and are of
  // the right kind, at most one edge per unordered pair, distributions valid.
  // Returns a description of the first problem found, or nullopt.
  std::optional<std::string> validate() const;
};

// Assigns dense node ids in document order (span-start interleaving) to the
// given mentions; events tie-break before timexes at equal start offsets.
void assign_node_ids(std::vector<EventMention>& events, std::vector<TimexMention>& timexes,
                     const Document& doc);

// First and one-past-last token index covered by a character span. Throws
// std::invalid_argument when the span does not cover a complete token.
std::pair<int, int> token_range(const Document& doc, const Span& span);

}  // namespace tempus

#endif  // TEMPUS_CORE_HPP_
