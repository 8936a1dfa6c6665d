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

#include "tempus/eval.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace tempus {

PRF make_prf(int tp, int fp, int fn) {
  PRF out;
  out.tp = tp;
  out.fp = fp;
  out.fn = fn;
  out.scored = tp + fp + fn > 0;
  if (tp + fp > 0) out.precision = static_cast<double>(tp) / (tp + fp);
  if (tp + fn > 0) out.recall = static_cast<double>(tp) / (tp + fn);
  if (out.precision + out.recall > 0)
    out.f1 = 2.0 * out.precision * out.recall / (out.precision + out.recall);
  return out;
}

SpanScores score_spans(std::vector<Span> gold, std::vector<Span> predicted) {
  std::sort(gold.begin(), gold.end());
  std::sort(predicted.begin(), predicted.end());

  int strict_tp = 0;
  {
    std::multiset<Span> pool(gold.begin(), gold.end());
    for (const Span& p : predicted) {
      const auto it = pool.find(p);
      if (it != pool.end()) {
        ++strict_tp;
        pool.erase(it);
      }
    }
  }

  int overlap_tp = 0;
  {
    std::vector<char> used(gold.size(), 0);
    for (const Span& p : predicted) {
      for (std::size_t g = 0; g < gold.size(); ++g) {
        if (used[g] || !p.overlaps(gold[g])) continue;
        used[g] = 1;
        ++overlap_tp;
        break;
      }
    }
  }

  SpanScores out;
  out.strict = make_prf(strict_tp, static_cast<int>(predicted.size()) - strict_tp,
                        static_cast<int>(gold.size()) - strict_tp);
  out.overlap = make_prf(overlap_tp, static_cast<int>(predicted.size()) - overlap_tp,
                         static_cast<int>(gold.size()) - overlap_tp);
  return out;
}

PRF score_event_tokens(const std::vector<int>& gold,
                       const std::vector<int>& predicted) {
  const std::set<int> gold_set(gold.begin(), gold.end());
  const std::set<int> pred_set(predicted.begin(), predicted.end());
  int tp = 0;
  for (const int p : pred_set)
    if (gold_set.count(p)) ++tp;
  return make_prf(tp, static_cast<int>(pred_set.size()) - tp,
                  static_cast<int>(gold_set.size()) - tp);
}

PRF score_timex_values(const std::vector<TimexMention>& gold,
                       const std::vector<TimexMention>& predicted) {
  std::vector<char> used(gold.size(), 0);
  int tp = 0;
  for (const TimexMention& p : predicted) {
    for (std::size_t g = 0; g < gold.size(); ++g) {
      if (used[g]) continue;
      const TimexMention& m = gold[g];
      if (m.span == p.span && m.type == p.type && m.value == p.value) {
        used[g] = 1;
        ++tp;
        break;
      }
    }
  }
  return make_prf(tp, static_cast<int>(predicted.size()) - tp,
                  static_cast<int>(gold.size()) - tp);
}

EeEdgeMap ee_edges_by_token(const TemporalGraph& graph) {
  EeEdgeMap out;
  for (const EeEdge& e : graph.ee_edges) {
    const EventMention* a = graph.event_by_id(e.node1);
    const EventMention* b = graph.event_by_id(e.node2);
    if (!a || !b) throw std::invalid_argument("edge endpoint is not an event");
    int t1 = a->token_index, t2 = b->token_index;
    EeRelation label = e.label;
    if (t1 > t2) {
      std::swap(t1, t2);
      label = reverse_ee(label);
    }
    out[{t1, t2}] = label;
  }
  return out;
}

EtEdgeMap et_edges_by_token(const TemporalGraph& graph) {
  EtEdgeMap out;
  for (const EtEdge& e : graph.et_edges) {
    const EventMention* a = graph.event_by_id(e.event);
    const TimexMention* t = graph.timex_by_id(e.timex);
    if (!a || !t) throw std::invalid_argument("edge endpoints have wrong kinds");
    out[{a->token_index, t->span}] = e.label;
  }
  return out;
}

TempRelScores score_ee(const EeEdgeMap& gold, const EeEdgeMap& predicted) {
  int tp = 0, fp = 0, fn = 0, relaxed_fp = 0;
  for (const auto& [key, plabel] : predicted) {
    if (plabel == EeRelation::Vague) continue;
    const auto it = gold.find(key);
    const EeRelation glabel = it == gold.end() ? EeRelation::Vague : it->second;
    if (plabel == glabel) {
      ++tp;
    } else {
      ++fp;
      const bool excusable = glabel == EeRelation::Vague &&
                             (plabel == EeRelation::Before ||
                              plabel == EeRelation::After);
      if (!excusable) ++relaxed_fp;
    }
  }
  for (const auto& [key, glabel] : gold) {
    if (glabel == EeRelation::Vague) continue;
    const auto it = predicted.find(key);
    if (it == predicted.end() || it->second != glabel) ++fn;
  }
  TempRelScores out;
  out.strict = make_prf(tp, fp, fn);
  out.relaxed = make_prf(tp, relaxed_fp, fn);
  return out;
}

PRF score_et(const EtEdgeMap& gold, const EtEdgeMap& predicted) {
  int tp = 0, fp = 0, fn = 0;
  for (const auto& [key, plabel] : predicted) {
    if (plabel != EtRelation::Equal) continue;
    const auto it = gold.find(key);
    if (it != gold.end() && it->second == EtRelation::Equal)
      ++tp;
    else
      ++fp;
  }
  for (const auto& [key, glabel] : gold) {
    if (glabel != EtRelation::Equal) continue;
    const auto it = predicted.find(key);
    if (it == predicted.end() || it->second != EtRelation::Equal) ++fn;
  }
  return make_prf(tp, fp, fn);
}

}  // namespace tempus
