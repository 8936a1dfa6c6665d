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

#ifndef TEMPUS_EVAL_HPP_
#define TEMPUS_EVAL_HPP_

#include <map>
#include <utility>
#include <vector>

#include "tempus/core.hpp"

namespace tempus {

struct PRF {
  int tp = 0;
  int fp = 0;
  int fn = 0;
  double precision = 0.0;  // 0 when tp+fp == 0
  double recall = 0.0;     // 0 when tp+fn == 0
  double f1 = 0.0;
  bool scored = false;  // false when nothing contributed (tp+fp+fn == 0)
};

PRF make_prf(int tp, int fp, int fn);

struct SpanScores {
  PRF strict;   // exact span equality
  PRF overlap;  // greedy one-to-one overlap matching, in span order
};
SpanScores score_spans(std::vector<Span> gold, std::vector<Span> predicted);

// Events compare by head token index.
PRF score_event_tokens(const std::vector<int>& gold,
                       const std::vector<int>& predicted);

// Strict span match plus exact type and value.
PRF score_timex_values(const std::vector<TimexMention>& gold,
                       const std::vector<TimexMention>& predicted);

// Event-event edges keyed by the two head token indices (ascending), which
// also aligns system output with gold across differing extractions: an edge
// whose endpoint verb was never extracted can't match anything and counts
// against precision or recall.
using EeEdgeMap = std::map<std::pair<int, int>, EeRelation>;
using EtEdgeMap = std::map<std::pair<int, Span>, EtRelation>;

EeEdgeMap ee_edges_by_token(const TemporalGraph& graph);
EtEdgeMap et_edges_by_token(const TemporalGraph& graph);

// Strict: Vague is "no relation" — correct non-Vague labels are hits, wrong
// or spurious non-Vague predictions are false positives, missed non-Vague
// gold labels are false negatives.
// Relaxed: additionally, a Before/After prediction on a gold-Vague pair is
// discarded entirely (it might be right; the gold just doesn't know), so it
// leaves precision's denominator too.
struct TempRelScores {
  PRF strict;
  PRF relaxed;
};
TempRelScores score_ee(const EeEdgeMap& gold, const EeEdgeMap& predicted);

// Equal is the positive class.
PRF score_et(const EtEdgeMap& gold, const EtEdgeMap& predicted);

}  // namespace tempus

#endif  // TEMPUS_EVAL_HPP_
