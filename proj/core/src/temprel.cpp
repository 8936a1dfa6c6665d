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

#include "tempus/temprel.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include "tempus/util.hpp"

namespace tempus {
namespace {

using perceptron::Trainer;
using perceptron::TrainingMeta;
using perceptron::softmax;

int distance_bucket(int d) {
  if (d <= 4) return d;
  if (d <= 10) return 5;
  return 6;
}

EeDistribution reverse_dist(const EeDistribution& d) {
  EeDistribution r = d;
  std::swap(r[static_cast<int>(EeRelation::Before)],
            r[static_cast<int>(EeRelation::After)]);
  return r;
}

}  // namespace

bool is_order_connective(std::string_view lemma) {
  return lemma == "before" || lemma == "after" || lemma == "when" ||
         lemma == "while" || lemma == "as" || lemma == "then" ||
         lemma == "since" || lemma == "until" || lemma == "later" ||
         lemma == "earlier" || lemma == "meanwhile" || lemma == "and";
}

const std::vector<std::string>& ee_label_names() {
  static const std::vector<std::string> labels = {
      std::string(ee_relation_name(EeRelation::Before)),
      std::string(ee_relation_name(EeRelation::After)),
      std::string(ee_relation_name(EeRelation::Equal)),
      std::string(ee_relation_name(EeRelation::Vague))};
  return labels;
}

const std::vector<std::string>& et_label_names() {
  static const std::vector<std::string> labels = {
      std::string(et_relation_name(EtRelation::Equal)),
      std::string(et_relation_name(EtRelation::NotEqual))};
  return labels;
}

TempRelCandidates temprel_candidates(const Document& doc,
                                     const std::vector<EventMention>& events,
                                     const std::vector<TimexMention>& timexes,
                                     int max_sent_dist) {
  TempRelCandidates out;
  const int ne = static_cast<int>(events.size());
  for (int i = 0; i < ne; ++i) {
    const int si = doc.sentence_of(events[static_cast<std::size_t>(i)].token_index);
    for (int j = i + 1; j < ne; ++j) {
      const int sj = doc.sentence_of(events[static_cast<std::size_t>(j)].token_index);
      if (std::abs(si - sj) <= max_sent_dist) out.ee.emplace_back(i, j);
    }
    for (int t = 0; t < static_cast<int>(timexes.size()); ++t) {
      const auto [tb, te] =
          token_range(doc, timexes[static_cast<std::size_t>(t)].span);
      (void)te;
      const int st = doc.sentence_of(tb);
      if (std::abs(si - st) <= max_sent_dist) out.et.emplace_back(i, t);
    }
  }
  return out;
}

FeatureVector ee_pair_features(const Document& doc, const EventMention& e1,
                               const EventMention& e2, const TemProb* priors) {
  FeatureVector fv;
  fv.add("bias");
  char key[128];

  const EventMention* nodes[2] = {&e1, &e2};
  for (int k = 0; k < 2; ++k) {
    const int t = nodes[k]->token_index;
    std::snprintf(key, sizeof key, "e%d:lemma=%s", k + 1, nodes[k]->lemma.c_str());
    fv.add(key);
    for (int off : {-2, -1, 1, 2}) {
      const int i = t + off;
      const bool in_range = i >= 0 && i < static_cast<int>(doc.tokens.size()) &&
                            doc.sentence_of(i) == doc.sentence_of(t);
      std::snprintf(key, sizeof key, "e%d:l[%d]=%s", k + 1, off,
                    in_range ? doc.tokens[static_cast<std::size_t>(i)].lemma.c_str()
                             : "<pad>");
      fv.add(key);
    }
  }
  std::snprintf(key, sizeof key, "pair=%s|%s", e1.lemma.c_str(), e2.lemma.c_str());
  fv.add(key);

  const int t1 = e1.token_index, t2 = e2.token_index;
  const int s1 = doc.sentence_of(t1), s2 = doc.sentence_of(t2);
  std::snprintf(key, sizeof key, "tokdist=%d", distance_bucket(std::abs(t2 - t1)));
  fv.add(key);
  std::snprintf(key, sizeof key, "sentdist=%d", std::min(std::abs(s2 - s1), 2));
  fv.add(key);

  if (s1 == s2) {
    for (int i = std::min(t1, t2) + 1; i < std::max(t1, t2); ++i) {
      const std::string& lemma = doc.tokens[static_cast<std::size_t>(i)].lemma;
      if (is_order_connective(lemma)) {
        std::snprintf(key, sizeof key, "between=%s", lemma.c_str());
        fv.add(key);
      }
    }
  } else {
    // The word opening the later event's sentence often carries the
    // discourse-level ordering ("Later, ...").
    const auto [sb, se] = doc.sentences[static_cast<std::size_t>(std::max(s1, s2))];
    (void)se;
    std::snprintf(key, sizeof key, "s2start=%s",
                  to_lower(doc.tokens[static_cast<std::size_t>(sb)].surface).c_str());
    fv.add(key);
  }

  if (priors) {
    if (priors->seen(e1.lemma, e2.lemma)) {
      std::snprintf(key, sizeof key, "tp_decile=%d",
                    priors->decile(e1.lemma, e2.lemma));
      fv.add(key);
      std::snprintf(key, sizeof key, "tp_count=%d",
                    priors->count_bucket(e1.lemma, e2.lemma));
      fv.add(key);
    } else {
      fv.add("tp_unseen");
    }
  }

  fv.finalize();
  return fv;
}

FeatureVector et_pair_features(const Document& doc, const EventMention& event,
                               const TimexMention& timex) {
  FeatureVector fv;
  fv.add("bias");
  char key[128];

  std::snprintf(key, sizeof key, "e:lemma=%s", event.lemma.c_str());
  fv.add(key);
  std::snprintf(key, sizeof key, "t:type=%s",
                std::string(timex_type_name(timex.type)).c_str());
  fv.add(key);

  const auto [tb, te] = token_range(doc, timex.span);
  std::snprintf(key, sizeof key, "t:first=%s",
                to_lower(doc.tokens[static_cast<std::size_t>(tb)].surface).c_str());
  fv.add(key);

  const int et = event.token_index;
  const int st = doc.sentence_of(tb);
  const int se = doc.sentence_of(et);
  std::snprintf(key, sizeof key, "sentdist=%d", std::min(std::abs(st - se), 2));
  fv.add(key);

  int dist;
  if (et < tb)
    dist = tb - et;
  else if (et >= te)
    dist = et - (te - 1);
  else
    dist = 0;
  std::snprintf(key, sizeof key, "tokdist=%d", distance_bucket(dist));
  fv.add(key);

  if (se == st) {
    fv.add("same_sent");
    bool boundary = false;
    const int lo = et < tb ? et + 1 : te;
    const int hi = et < tb ? tb : et;
    for (int i = lo; i < hi; ++i)
      if (is_order_connective(doc.tokens[static_cast<std::size_t>(i)].lemma))
        boundary = true;
    if (boundary) fv.add("clause_boundary_between");
  }

  fv.finalize();
  return fv;
}

EeDistribution ee_distribution(const SparseModel& model, const FeatureVector& fv) {
  const std::vector<double> p = softmax(model.score(fv));
  EeDistribution d{};
  std::copy(p.begin(), p.end(), d.begin());
  return d;
}

EtDistribution et_distribution(const SparseModel& model, const FeatureVector& fv) {
  const std::vector<double> p = softmax(model.score(fv));
  EtDistribution d{};
  std::copy(p.begin(), p.end(), d.begin());
  return d;
}

TemporalGraph annotate_temprel(const Document& doc, std::vector<EventMention> events,
                               std::vector<TimexMention> timexes,
                               const TempRelModels& models,
                               const InferenceOptions& options) {
  assign_node_ids(events, timexes, doc);
  const TempRelCandidates cands =
      temprel_candidates(doc, events, timexes, options.max_sent_dist);

  TemporalGraph graph;
  graph.events = std::move(events);
  graph.timexes = std::move(timexes);

  for (const auto& [i, j] : cands.ee) {
    const EventMention& e1 = graph.events[static_cast<std::size_t>(i)];
    const EventMention& e2 = graph.events[static_cast<std::size_t>(j)];
    EeDistribution dist =
        ee_distribution(models.ee, ee_pair_features(doc, e1, e2, &models.priors));
    EeEdge edge;
    edge.node1 = e1.id;
    edge.node2 = e2.id;
    if (edge.node1 > edge.node2) {
      std::swap(edge.node1, edge.node2);
      dist = reverse_dist(dist);
    }
    edge.dist = dist;
    edge.label = static_cast<EeRelation>(
        std::max_element(dist.begin(), dist.end()) - dist.begin());
    graph.ee_edges.push_back(edge);
  }
  for (const auto& [i, t] : cands.et) {
    const EventMention& event = graph.events[static_cast<std::size_t>(i)];
    const TimexMention& timex = graph.timexes[static_cast<std::size_t>(t)];
    EtEdge edge;
    edge.event = event.id;
    edge.timex = timex.id;
    edge.dist = et_distribution(models.et, et_pair_features(doc, event, timex));
    edge.label = static_cast<EtRelation>(
        std::max_element(edge.dist.begin(), edge.dist.end()) - edge.dist.begin());
    graph.et_edges.push_back(edge);
  }

  if (!options.use_ilp || (graph.ee_edges.empty() && graph.et_edges.empty()))
    return graph;

  // Joint inference: solve over all edges, then write the labels back.
  std::vector<ilp::EdgeSpec> specs;
  specs.reserve(graph.ee_edges.size() + graph.et_edges.size());
  for (const EeEdge& e : graph.ee_edges) {
    ilp::EdgeSpec spec;
    spec.node1 = e.node1;
    spec.node2 = e.node2;
    spec.kind = ilp::EdgeKind::EventEvent;
    spec.prob.assign(e.dist.begin(), e.dist.end());
    specs.push_back(std::move(spec));
  }
  for (const EtEdge& e : graph.et_edges) {
    ilp::EdgeSpec spec;
    spec.node1 = std::min(e.event, e.timex);
    spec.node2 = std::max(e.event, e.timex);
    spec.kind = ilp::EdgeKind::EventTimex;
    spec.prob.assign(e.dist.begin(), e.dist.end());
    specs.push_back(std::move(spec));
  }
  const ilp::IlpProblem problem = ilp::build_problem(
      std::move(specs), ilp::CompositionTable::standard(), options.ilp_options);
  const ilp::SolveResult solution = ilp::solve(problem);

  for (std::size_t k = 0; k < problem.edges.size(); ++k) {
    const ilp::EdgeSpec& spec = problem.edges[k];
    const int label = solution.labels[k];
    if (spec.kind == ilp::EdgeKind::EventEvent) {
      for (EeEdge& e : graph.ee_edges)
        if (e.node1 == spec.node1 && e.node2 == spec.node2)
          e.label = static_cast<EeRelation>(label);
    } else {
      for (EtEdge& e : graph.et_edges)
        if (std::min(e.event, e.timex) == spec.node1 &&
            std::max(e.event, e.timex) == spec.node2)
          e.label = static_cast<EtRelation>(label);
    }
  }
  return graph;
}

namespace {

EeRelation ee_gold_label(const TempRelGoldDoc& doc, int i, int j) {
  const auto it = doc.ee.find(std::pair(i, j));
  return it == doc.ee.end() ? EeRelation::Vague : it->second;
}

EtRelation et_gold_label(const TempRelGoldDoc& doc, int i, int t) {
  const auto it = doc.et.find(std::pair(i, t));
  return it == doc.et.end() ? EtRelation::NotEqual : it->second;
}

}  // namespace

TempRelTraining train_temprel(const std::vector<TempRelGoldDoc>& docs, int epochs,
                              std::uint64_t seed, int max_sent_dist,
                              bool inference_feedback) {
  if (epochs < 1) throw std::invalid_argument("epochs must be at least 1");

  TempRelTraining out;

  // Priors come from the gold labels of the training set itself.
  for (const TempRelGoldDoc& doc : docs)
    for (const auto& [pair, label] : doc.ee)
      out.models.priors.add(doc.events[static_cast<std::size_t>(pair.first)].lemma,
                            doc.events[static_cast<std::size_t>(pair.second)].lemma,
                            label);

  // Cache candidates and features once; training only reuses them.
  struct DocData {
    TempRelCandidates cands;
    std::vector<FeatureVector> ee_features;
    std::vector<int> ee_gold;
  };
  std::vector<DocData> data(docs.size());
  std::vector<Example> et_examples;
  for (std::size_t d = 0; d < docs.size(); ++d) {
    const TempRelGoldDoc& doc = docs[d];
    data[d].cands =
        temprel_candidates(doc.doc, doc.events, doc.timexes, max_sent_dist);
    for (const auto& [i, j] : data[d].cands.ee) {
      data[d].ee_features.push_back(
          ee_pair_features(doc.doc, doc.events[static_cast<std::size_t>(i)],
                           doc.events[static_cast<std::size_t>(j)],
                           &out.models.priors));
      data[d].ee_gold.push_back(static_cast<int>(ee_gold_label(doc, i, j)));
    }
    for (const auto& [i, t] : data[d].cands.et)
      et_examples.push_back(
          {et_pair_features(doc.doc, doc.events[static_cast<std::size_t>(i)],
                            doc.timexes[static_cast<std::size_t>(t)]),
           static_cast<int>(et_gold_label(doc, i, t))});
  }

  if (!inference_feedback) {
    std::vector<Example> ee_examples;
    for (const DocData& d : data)
      for (std::size_t k = 0; k < d.ee_features.size(); ++k)
        ee_examples.push_back({d.ee_features[k], d.ee_gold[k]});
    if (!ee_examples.empty())
      out.models.ee =
          perceptron::train(ee_examples, ee_label_names(), epochs, seed);
    else
      out.models.ee = SparseModel(ee_label_names());
  } else {
    Trainer trainer(ee_label_names());
    Rng rng(seed);
    std::vector<std::size_t> order(docs.size());
    for (std::size_t d = 0; d < docs.size(); ++d) order[d] = d;

    for (int epoch = 0; epoch < epochs; ++epoch) {
      FeedbackEpochStats stats;
      stats.epoch = epoch;
      rng.shuffle(order);
      for (const std::size_t d : order) {
        const DocData& dd = data[d];
        if (dd.ee_features.empty()) continue;
        std::vector<int> local(dd.ee_features.size());
        for (std::size_t k = 0; k < dd.ee_features.size(); ++k) {
          local[k] = trainer.predict_raw(dd.ee_features[k]);
          trainer.step(dd.ee_features[k], dd.ee_gold[k], local[k]);
          ++stats.examples;
          if (local[k] != dd.ee_gold[k]) ++stats.mistakes;
        }

        // Joint pass over this document with the weights as they now stand.
        std::vector<ilp::EdgeSpec> specs;
        for (std::size_t k = 0; k < dd.cands.ee.size(); ++k) {
          const auto& [i, j] = dd.cands.ee[k];
          ilp::EdgeSpec spec;
          spec.node1 = i;  // event list indices are already document-ordered
          spec.node2 = j;
          spec.kind = ilp::EdgeKind::EventEvent;
          spec.prob = softmax(trainer.score_raw(dd.ee_features[k]));
          specs.push_back(std::move(spec));
        }
        ilp::BuildOptions opts;
        opts.coupling = false;  // feedback looks at event-event edges only
        const ilp::IlpProblem problem =
            ilp::build_problem(std::move(specs), ilp::CompositionTable::standard(), opts);
        const ilp::SolveResult solution = ilp::solve(problem);

        for (std::size_t k = 0; k < problem.edges.size(); ++k) {
          const auto pair = std::pair(problem.edges[k].node1, problem.edges[k].node2);
          const auto pos = std::find(dd.cands.ee.begin(), dd.cands.ee.end(), pair);
          const std::size_t idx =
              static_cast<std::size_t>(pos - dd.cands.ee.begin());
          const int fresh = trainer.predict_raw(dd.ee_features[idx]);
          const int joint = solution.labels[k];
          const int gold = dd.ee_gold[idx];
          if (joint != fresh) {
            ++stats.ilp_changed;
            if (joint == gold && fresh != gold) ++stats.ilp_fixed;
            if (joint != gold && fresh == gold) ++stats.ilp_broke;
          }
          if (joint != gold) trainer.step(dd.ee_features[idx], gold, joint);
        }
      }
      out.feedback.push_back(stats);
    }
    TrainingMeta meta;
    meta.epochs = static_cast<std::uint32_t>(epochs);
    meta.seed = seed;
    meta.example_count = trainer.presentations();
    out.models.ee = trainer.finalize(meta);
  }

  if (!et_examples.empty())
    out.models.et = perceptron::train(et_examples, et_label_names(), epochs, seed + 1);
  else
    out.models.et = SparseModel(et_label_names());

  return out;
}

}  // namespace tempus
