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

#include "tempus/core.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace tempus {

std::string_view pos_name(Pos p) {
  switch (p) {
    case Pos::Noun: return "NOUN";
    case Pos::Verb: return "VERB";
    case Pos::Adj: return "ADJ";
    case Pos::Adv: return "ADV";
    case Pos::Prep: return "PREP";
    case Pos::Det: return "DET";
    case Pos::Num: return "NUM";
    case Pos::Punct: return "PUNCT";
    case Pos::Other: return "OTHER";
  }
  return "OTHER";
}

std::optional<Pos> pos_from_name(std::string_view name) {
  static constexpr std::pair<std::string_view, Pos> kTable[] = {
      {"NOUN", Pos::Noun}, {"VERB", Pos::Verb}, {"ADJ", Pos::Adj},
      {"ADV", Pos::Adv},   {"PREP", Pos::Prep}, {"DET", Pos::Det},
      {"NUM", Pos::Num},   {"PUNCT", Pos::Punct}, {"OTHER", Pos::Other},
  };
  for (const auto& [n, p] : kTable)
    if (n == name) return p;
  return std::nullopt;
}

std::string_view timex_type_name(TimexType t) {
  switch (t) {
    case TimexType::Date: return "DATE";
    case TimexType::Time: return "TIME";
    case TimexType::Duration: return "DURATION";
    case TimexType::Set: return "SET";
  }
  return "DATE";
}

std::optional<TimexType> timex_type_from_name(std::string_view name) {
  if (name == "DATE") return TimexType::Date;
  if (name == "TIME") return TimexType::Time;
  if (name == "DURATION") return TimexType::Duration;
  if (name == "SET") return TimexType::Set;
  return std::nullopt;
}

std::string_view ee_relation_name(EeRelation r) {
  switch (r) {
    case EeRelation::Before: return "before";
    case EeRelation::After: return "after";
    case EeRelation::Equal: return "equal";
    case EeRelation::Vague: return "vague";
  }
  return "vague";
}

std::optional<EeRelation> ee_relation_from_name(std::string_view name) {
  if (name == "before") return EeRelation::Before;
  if (name == "after") return EeRelation::After;
  if (name == "equal") return EeRelation::Equal;
  if (name == "vague") return EeRelation::Vague;
  return std::nullopt;
}

std::string_view et_relation_name(EtRelation r) {
  return r == EtRelation::Equal ? "equal" : "not-equal";
}

std::optional<EtRelation> et_relation_from_name(std::string_view name) {
  if (name == "equal") return EtRelation::Equal;
  if (name == "not-equal") return EtRelation::NotEqual;
  return std::nullopt;
}

EeRelation reverse_ee(EeRelation r) {
  switch (r) {
    case EeRelation::Before: return EeRelation::After;
    case EeRelation::After: return EeRelation::Before;
    case EeRelation::Equal: return EeRelation::Equal;
    case EeRelation::Vague: return EeRelation::Vague;
  }
  return r;
}

bool is_valid_distribution(const double* p, int n) {
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    if (!(p[i] >= 0.0) || !std::isfinite(p[i])) return false;
    sum += p[i];
  }
  return std::fabs(sum - 1.0) <= 1e-9;
}

bool TemporalGraph::is_event(int node_id) const { return event_by_id(node_id) != nullptr; }

const EventMention* TemporalGraph::event_by_id(int node_id) const {
  for (const auto& e : events)
    if (e.id == node_id) return &e;
  return nullptr;
}

const TimexMention* TemporalGraph::timex_by_id(int node_id) const {
  for (const auto& t : timexes)
    if (t.id == node_id) return &t;
  return nullptr;
}

std::optional<std::string> TemporalGraph::validate() const {
  std::set<int> ids;
  for (const auto& e : events) {
    if (!ids.insert(e.id).second) return "duplicate node id " + std::to_string(e.id);
  }
  for (const auto& t : timexes) {
    if (!ids.insert(t.id).second) return "duplicate node id " + std::to_string(t.id);
  }
  int n = node_count();
  for (int id = 0; id < n; ++id) {
    if (!ids.count(id)) return "node ids not dense, missing " + std::to_string(id);
  }

  std::set<std::pair<int, int>> pairs;
  for (const auto& e : ee_edges) {
    if (!event_by_id(e.node1) || !event_by_id(e.node2))
      return "ee edge endpoint is not an event node";
    if (e.node1 >= e.node2) return "ee edge endpoints not canonically ordered";
    if (!pairs.insert({e.node1, e.node2}).second) return "duplicate edge on node pair";
    if (!is_valid_distribution(e.dist.data(), kNumEeLabels))
      return "ee edge distribution invalid";
  }
  for (const auto& e : et_edges) {
    if (!event_by_id(e.event)) return "et edge event endpoint missing";
    if (!timex_by_id(e.timex)) return "et edge timex endpoint missing";
    auto key = std::minmax(e.event, e.timex);
    if (!pairs.insert({key.first, key.second}).second) return "duplicate edge on node pair";
    if (!is_valid_distribution(e.dist.data(), kNumEtLabels))
      return "et edge distribution invalid";
  }
  return std::nullopt;
}

void assign_node_ids(std::vector<EventMention>& events, std::vector<TimexMention>& timexes,
                     const Document& doc) {
  struct Entry {
    std::size_t start;
    int kind;  // events first on ties
    std::size_t index;
  };
  std::vector<Entry> order;
  order.reserve(events.size() + timexes.size());
  for (std::size_t i = 0; i < events.size(); ++i) {
    std::size_t start = doc.tokens[static_cast<std::size_t>(events[i].token_index)].span.start;
    order.push_back({start, 0, i});
  }
  for (std::size_t i = 0; i < timexes.size(); ++i) {
    order.push_back({timexes[i].span.start, 1, i});
  }
  std::sort(order.begin(), order.end(), [](const Entry& a, const Entry& b) {
    return std::tie(a.start, a.kind, a.index) < std::tie(b.start, b.kind, b.index);
  });
  int next_id = 0;
  for (const Entry& e : order) {
    if (e.kind == 0)
      events[e.index].id = next_id++;
    else
      timexes[e.index].id = next_id++;
  }
}

std::pair<int, int> token_range(const Document& doc, const Span& span) {
  int first = -1, last = -1;
  for (int i = 0; i < static_cast<int>(doc.tokens.size()); ++i) {
    const Span& t = doc.tokens[static_cast<std::size_t>(i)].span;
    if (t.start >= span.start && t.end <= span.end) {
      if (first < 0) first = i;
      last = i;
    }
  }
  if (first < 0) throw std::invalid_argument("span covers no complete token");
  return {first, last + 1};
}

}  // namespace tempus
