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

#ifndef TEMPUS_TEMPREL_HPP_
#define TEMPUS_TEMPREL_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tempus/core.hpp"
#include "tempus/ilp.hpp"
#include "tempus/perceptron.hpp"
#include "tempus/temprob.hpp"

namespace tempus {

using perceptron::Example;
using perceptron::FeatureVector;
using perceptron::SparseModel;

// Model label lists, matching the relation enum orders.
const std::vector<std::string>& ee_label_names();  // before after equal vague
const std::vector<std::string>& et_label_names();  // equal not-equal

struct TempRelCandidates {
  std::vector<std::pair<int, int>> ee;  // indices into the event list, i < j
  std::vector<std::pair<int, int>> et;  // (event index, timex index)
};

// All mention pairs within `max_sent_dist` sentences of each other.
TempRelCandidates temprel_candidates(const Document& doc,
                                     const std::vector<EventMention>& events,
                                     const std::vector<TimexMention>& timexes,
                                     int max_sent_dist);

// Connectives that signal an order between clauses; they also bound clauses
// for the event-timex same-clause test.
bool is_order_connective(std::string_view lemma);

// Pair features for an event pair in document order. `priors` contributes
// bucketed corpus-statistics features when present.
FeatureVector ee_pair_features(const Document& doc, const EventMention& e1,
                               const EventMention& e2, const TemProb* priors);
FeatureVector et_pair_features(const Document& doc, const EventMention& event,
                               const TimexMention& timex);

EeDistribution ee_distribution(const SparseModel& model, const FeatureVector& fv);
EtDistribution et_distribution(const SparseModel& model, const FeatureVector& fv);

struct TempRelModels {
  SparseModel ee;
  SparseModel et;
  TemProb priors;
};

struct InferenceOptions {
  int max_sent_dist = 1;
  bool use_ilp = true;  // local argmax when disabled
  ilp::BuildOptions ilp_options;
};

// Assigns node ids, scores every candidate pair locally, and (by default)
// replaces the local argmax labels with the exact joint solution.
TemporalGraph annotate_temprel(const Document& doc, std::vector<EventMention> events,
                               std::vector<TimexMention> timexes,
                               const TempRelModels& models,
                               const InferenceOptions& options = {});

// One training document, gold-labelled. Pairs missing from `ee` are Vague,
// pairs missing from `et` are NotEqual.
struct TempRelGoldDoc {
  Document doc;
  std::vector<EventMention> events;
  std::vector<TimexMention> timexes;
  std::map<std::pair<int, int>, EeRelation> ee;  // key: event index pair
  std::map<std::pair<int, int>, EtRelation> et;  // key: (event, timex) index
};

struct FeedbackEpochStats {
  int epoch = 0;
  std::uint64_t examples = 0;
  std::uint64_t mistakes = 0;     // local prediction != gold
  std::uint64_t ilp_changed = 0;  // joint label != local argmax
  std::uint64_t ilp_fixed = 0;    // changed onto the gold label
  std::uint64_t ilp_broke = 0;    // changed off the gold label
};

struct TempRelTraining {
  TempRelModels models;
  std::vector<FeedbackEpochStats> feedback;  // per epoch when enabled
};

// Builds the prior table from the gold event-event labels, then trains both
// relation models. With `inference_feedback`, every document additionally
// gets a joint-inference pass per epoch (transitivity only) and joint
// mistakes trigger extra perceptron updates; per-epoch repair counts are
// reported.
TempRelTraining train_temprel(const std::vector<TempRelGoldDoc>& docs, int epochs,
                              std::uint64_t seed, int max_sent_dist,
                              bool inference_feedback);

}  // namespace tempus

#endif  // TEMPUS_TEMPREL_HPP_
