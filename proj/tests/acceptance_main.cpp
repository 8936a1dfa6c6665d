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

// End-to-end acceptance gate. Every check prints exactly one PASS/FAIL line
// and the process exits nonzero when any of them fails. All thresholds,
// budgets and tolerances are the named constants right below, so a change to
// any of them shows up in review as a one-line diff.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <iterator>
#include <limits>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "support/oracles.hpp"
#include "tempus/calendar.hpp"
#include "tempus/core.hpp"
#include "tempus/corpus.hpp"
#include "tempus/eval.hpp"
#include "tempus/events.hpp"
#include "tempus/gazetteer.hpp"
#include "tempus/ilp.hpp"
#include "tempus/normalize.hpp"
#include "tempus/perceptron.hpp"
#include "tempus/pipeline.hpp"
#include "tempus/preprocess.hpp"
#include "tempus/temprel.hpp"
#include "tempus/timeline.hpp"
#include "tempus/timex.hpp"
#include "tempus/util.hpp"

namespace {

using namespace tempus;
using Clock = std::chrono::steady_clock;

// --- pinned thresholds ------------------------------------------------------
constexpr int kGoldenMinimumRows = 60;        // golden normalization suite size
constexpr double kGoldenBudgetMs = 1000.0;    // whole golden suite
constexpr int kJointInstances = 200;          // solver-vs-enumeration instances
constexpr double kJointBudgetMs = 10000.0;    // all instances together
constexpr int kConsistencyDocs = 100;         // random-model consistency docs
constexpr int kMaxSeparableEpochs = 50;       // zero-error bound
constexpr double kAveragingTolerance = 1e-9;  // lazy vs naive averaged weights
constexpr double kChunkerF1Floor = 0.95;      // held-out strict span F1
constexpr double kEventF1Floor = 0.95;        // held-out event token F1
constexpr double kEeStrictF1Floor = 0.70;     // held-out strict relation F1
constexpr int kTimelineGraphs = 100;          // random-order soundness graphs
constexpr double kSpeedupFloor = 2.0;         // prefilter vs regex baseline
constexpr int kBigCorpusTokens = 100000;      // chunking benchmark size
constexpr double kAnnotateBudgetMs = 50.0;    // ~100-token full annotation

struct Outcome {
  bool ok = false;
  std::string detail;
};

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string format(const char* fmt, ...) {
  char buf[512];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof buf, fmt, args);
  va_end(args);
  return buf;
}

// --- 1: the rule normalizer reproduces the golden suite ---------------------

Outcome golden_normalization() {
  const auto t0 = Clock::now();
  const std::string raw =
      read_file(std::string(TEMPUS_TEST_DATA_DIR) + "/normalization_golden.tsv");
  const Normalizer norm;

  struct SpotCheck {
    const char* phrase;
    const char* value;
    bool seen = false;
  };
  // One canonical expression per rule family; each must appear in the suite.
  SpotCheck spots[] = {{"February 27, 1998", "1998-02-27"},
                       {"8 am", "2018-05-15T08:00"},
                       {"3 years", "P3Y"},
                       {"every Monday", "XXXX-WXX-1"},
                       {"tomorrow", "2018-05-16"}};

  int rows = 0;
  bool type_seen[4] = {false, false, false, false};
  for (const std::string& line : split(raw, '\n')) {
    if (line.empty() || line[0] == '#') continue;
    const std::vector<std::string> cols = split(line, '\t');
    if (cols.size() != 4) return {false, "malformed golden row: " + line};
    ++rows;
    std::optional<DocumentTime> dct;
    if (cols[1] != "-") {
      dct = parse_document_time(cols[1]);
      if (!dct) return {false, "bad dct in golden row: " + line};
    }
    const std::optional<TimexType> want_type = timex_type_from_name(cols[2]);
    if (!want_type) return {false, "bad type in golden row: " + line};
    const NormalizationResult got = norm.normalize_text(cols[0], dct);
    if (!got.matched || got.type != *want_type || got.value != cols[3])
      return {false, format("\"%s\" -> %s, wanted %s", cols[0].c_str(),
                            got.matched ? got.value.c_str() : "<no match>",
                            cols[3].c_str())};
    type_seen[static_cast<int>(*want_type)] = true;
    for (SpotCheck& s : spots)
      if (cols[0] == s.phrase && cols[3] == s.value) s.seen = true;
  }

  if (rows < kGoldenMinimumRows)
    return {false, format("only %d golden rows, need %d", rows, kGoldenMinimumRows)};
  for (bool seen : type_seen)
    if (!seen) return {false, "golden suite does not cover all four timex types"};
  for (const SpotCheck& s : spots)
    if (!s.seen) return {false, format("golden suite is missing \"%s\"", s.phrase)};
  const double ms = ms_since(t0);
  if (ms >= kGoldenBudgetMs) return {false, format("took %.1f ms", ms)};
  return {true, format("%d phrases, all types, %.1f ms", rows, ms)};
}

// --- 2: branch-and-bound equals exhaustive enumeration ----------------------

Outcome joint_exactness() {
  const auto t0 = Clock::now();
  const ilp::CompositionTable& table = ilp::CompositionTable::standard();
  Rng rng(20260825);
  std::uint64_t assignments = 0;
  for (int inst = 0; inst < kJointInstances; ++inst) {
    const int n = 2 + static_cast<int>(rng.below(3));  // 2..4 nodes
    std::vector<char> is_event(static_cast<std::size_t>(n), 0);
    is_event[0] = is_event[1] = 1;  // at least one event-event edge
    for (int i = 2; i < n; ++i) is_event[static_cast<std::size_t>(i)] = rng.chance(0.6);

    std::vector<ilp::EdgeSpec> edges;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (!is_event[static_cast<std::size_t>(i)] && !is_event[static_cast<std::size_t>(j)])
          continue;  // timex-timex pairs are never scored
        ilp::EdgeSpec e;
        e.node1 = i;
        e.node2 = j;
        e.kind = is_event[static_cast<std::size_t>(i)] && is_event[static_cast<std::size_t>(j)]
                     ? ilp::EdgeKind::EventEvent
                     : ilp::EdgeKind::EventTimex;
        const int arity = e.kind == ilp::EdgeKind::EventEvent ? 4 : 2;
        double sum = 0.0;
        for (int k = 0; k < arity; ++k) {
          e.prob.push_back(0.05 + rng.real());
          sum += e.prob.back();
        }
        for (double& p : e.prob) p /= sum;
        edges.push_back(std::move(e));
      }
    }

    const ilp::IlpProblem problem = ilp::build_problem(std::move(edges), table);
    const ilp::SolveResult got = ilp::solve(problem);
    const oracles::BruteForceResult want = oracles::brute_force_solve(problem, table);
    assignments += want.assignments;
    if (!want.found) return {false, format("instance %d: enumeration found nothing", inst)};
    if (got.labels != want.labels)
      return {false, format("instance %d: assignment differs from enumeration", inst)};
    if (got.objective != want.objective)  // bit-exact: both sum in canonical order
      return {false, format("instance %d: objective %.17g vs %.17g", inst,
                            got.objective, want.objective)};
  }
  const double ms = ms_since(t0);
  if (ms >= kJointBudgetMs) return {false, format("took %.1f ms", ms)};
  return {true, format("%d instances, %llu assignments enumerated, %.1f ms",
                       kJointInstances, static_cast<unsigned long long>(assignments), ms)};
}

// --- 3: inference output is closure-consistent for arbitrary models ---------

perceptron::SparseModel random_model(const std::vector<std::string>& labels,
                                     const std::unordered_set<std::uint64_t>& id_set,
                                     Rng& rng) {
  std::vector<std::uint64_t> ids(id_set.begin(), id_set.end());
  std::sort(ids.begin(), ids.end());  // pin iteration order
  perceptron::SparseModel model(labels);
  for (std::uint64_t id : ids)
    for (int l = 0; l < model.num_labels(); ++l)
      if (rng.chance(0.6))
        model.averaged()[static_cast<std::size_t>(l)][id] = rng.real() * 2.0 - 1.0;
  return model;
}

Outcome randomized_consistency() {
  const preprocess::Lexicon& lex = preprocess::Lexicon::bundled();
  const Gazetteer& gaz = Gazetteer::bundled();
  const Normalizer norm;
  Rng rng(31337);

  GeneratorOptions gopt;
  gopt.seed = 555;
  gopt.num_docs = kConsistencyDocs;
  const std::vector<DocumentRecord> recs = generate_corpus(gopt, lex);

  std::vector<Document> docs;
  docs.reserve(recs.size());
  for (const DocumentRecord& r : recs) docs.push_back(record_document(r, lex));

  // Arbitrary (not trained) weights over whatever features actually fire.
  std::unordered_set<std::uint64_t> chunk_ids, event_ids;
  for (const Document& doc : docs) {
    for (int i = 0; i < static_cast<int>(doc.tokens.size()); ++i) {
      for (const auto& [id, v] : timex_token_features(doc, i, gaz).entries())
        chunk_ids.insert(id);
      if (event_candidate(doc, i))
        for (const auto& [id, v] : event_token_features(doc, i).entries())
          event_ids.insert(id);
    }
  }
  const perceptron::SparseModel chunker = random_model(bio_labels(), chunk_ids, rng);
  const perceptron::SparseModel eventer = random_model(event_labels(), event_ids, rng);

  std::vector<std::vector<TimexMention>> timexes(docs.size());
  std::vector<std::vector<EventMention>> events(docs.size());
  TimexOptions topt;
  topt.keep_unnormalized = true;  // keep junk chunks; more edges to stress
  std::unordered_set<std::uint64_t> ee_ids, et_ids;
  const TemProb no_priors;
  for (std::size_t d = 0; d < docs.size(); ++d) {
    timexes[d] = annotate_timexes(docs[d], chunker, norm, gaz, topt);
    events[d] = annotate_events(docs[d], eventer);
    const TempRelCandidates cands = temprel_candidates(docs[d], events[d], timexes[d], 2);
    for (const auto& [i, j] : cands.ee)
      for (const auto& [id, v] :
           ee_pair_features(docs[d], events[d][static_cast<std::size_t>(i)],
                            events[d][static_cast<std::size_t>(j)], &no_priors)
               .entries())
        ee_ids.insert(id);
    for (const auto& [e, t] : cands.et)
      for (const auto& [id, v] :
           et_pair_features(docs[d], events[d][static_cast<std::size_t>(e)],
                            timexes[d][static_cast<std::size_t>(t)])
               .entries())
        et_ids.insert(id);
  }

  TempRelModels rel;
  rel.ee = random_model(ee_label_names(), ee_ids, rng);
  rel.et = random_model(et_label_names(), et_ids, rng);

  InferenceOptions iopt;
  iopt.max_sent_dist = 2;
  std::size_t total_edges = 0;
  for (std::size_t d = 0; d < docs.size(); ++d) {
    const TemporalGraph graph =
        annotate_temprel(docs[d], events[d], timexes[d], rel, iopt);
    total_edges += graph.ee_edges.size() + graph.et_edges.size();
    const auto violations =
        ilp::check_consistency(graph, ilp::CompositionTable::standard());
    if (!violations.empty())
      return {false, format("%s: %zu violations, first: %s", docs[d].id.c_str(),
                            violations.size(), violations.front().describe().c_str())};
  }
  return {true, format("%d documents, %zu edges, zero violations", kConsistencyDocs,
                       total_edges)};
}

// --- 4: two confident links overturn the closing pair's local label ---------

Outcome chain_repair() {
  const ilp::CompositionTable& table = ilp::CompositionTable::standard();
  std::vector<ilp::EdgeSpec> edges;
  ilp::EdgeSpec e01;
  e01.node1 = 0;
  e01.node2 = 1;
  e01.prob = {0.9, 0.04, 0.03, 0.03};
  ilp::EdgeSpec e12 = e01;
  e12.node1 = 1;
  e12.node2 = 2;
  ilp::EdgeSpec e02;
  e02.node1 = 0;
  e02.node2 = 2;
  e02.prob = {0.3, 0.6, 0.05, 0.05};  // local argmax: After
  edges = {e01, e12, e02};

  const auto argmax = std::max_element(e02.prob.begin(), e02.prob.end()) - e02.prob.begin();
  if (argmax != static_cast<long>(EeRelation::After))
    return {false, "closing edge's local argmax is not After"};

  const ilp::IlpProblem problem = ilp::build_problem(std::move(edges), table);
  const ilp::SolveResult got = ilp::solve(problem);
  const oracles::BruteForceResult want = oracles::brute_force_solve(problem, table);
  // Canonical edge order is (0,1), (0,2), (1,2); the closing edge is index 1.
  const std::vector<int> before_chain(3, static_cast<int>(EeRelation::Before));
  if (got.labels != before_chain)
    return {false, "joint assignment is not the all-Before chain"};
  if (!want.found || want.labels != got.labels || want.objective != got.objective)
    return {false, "solver disagrees with 4^3 enumeration"};
  return {true, format("closing label Before, objective %.2f, %llu assignments checked",
                       got.objective, static_cast<unsigned long long>(want.assignments))};
}

// --- 5: averaged perceptron invariants ---------------------------------------

// Disjoint per-label feature pools: weights for one label never touch another
// label's features, so the data is separable by construction.
std::vector<perceptron::Example> separable_examples(std::uint64_t seed, int per_label) {
  Rng rng(seed);
  std::vector<perceptron::Example> out;
  for (int label = 0; label < 3; ++label) {
    for (int i = 0; i < per_label; ++i) {
      perceptron::FeatureVector fv;
      fv.add(format("L%d:anchor", label));
      for (int k = 0; k < 3; ++k)
        fv.add(format("L%d:f%d", label, static_cast<int>(rng.below(6))));
      fv.finalize();
      perceptron::Example ex;
      ex.features = std::move(fv);
      ex.label = label;
      out.push_back(std::move(ex));
    }
  }
  return out;
}

Outcome perceptron_invariants() {
  const std::vector<std::string> labels = {"a", "b", "c"};
  const std::vector<perceptron::Example> examples = separable_examples(29, 40);

  const perceptron::SparseModel model =
      perceptron::train(examples, labels, kMaxSeparableEpochs, 12);
  for (const perceptron::Example& ex : examples) {
    if (model.predict(ex.features) != ex.label)
      return {false, "averaged weights misclassify a training example"};
    if (model.argmax(model.score_raw(ex.features)) != ex.label)
      return {false, "raw weights misclassify a training example"};
  }

  const perceptron::SparseModel lazy = perceptron::train(examples, labels, 7, 99);
  const perceptron::SparseModel naive = oracles::naive_average_train(examples, labels, 7, 99);
  double worst = 0.0;
  for (int l = 0; l < 3; ++l) {
    const auto& a = lazy.averaged()[static_cast<std::size_t>(l)];
    const auto& b = naive.averaged()[static_cast<std::size_t>(l)];
    std::unordered_set<std::uint64_t> keys;
    for (const auto& [id, w] : a) keys.insert(id);
    for (const auto& [id, w] : b) keys.insert(id);
    for (std::uint64_t id : keys) {
      const auto ia = a.find(id);
      const auto ib = b.find(id);
      const double wa = ia == a.end() ? 0.0 : ia->second;
      const double wb = ib == b.end() ? 0.0 : ib->second;
      worst = std::max(worst, std::fabs(wa - wb));
    }
  }
  for (const perceptron::Example& ex : examples) {
    const std::vector<double> sa = lazy.score(ex.features);
    const std::vector<double> sb = naive.score(ex.features);
    for (std::size_t l = 0; l < sa.size(); ++l)
      worst = std::max(worst, std::fabs(sa[l] - sb[l]));
  }
  if (worst > kAveragingTolerance)
    return {false, format("lazy and naive averages differ by %.3g", worst)};

  const std::string path =
      (std::filesystem::temp_directory_path() / "tempus-acceptance-model.bin").string();
  model.save(path);
  const perceptron::SparseModel loaded = perceptron::SparseModel::load(path);
  std::filesystem::remove(path);
  if (loaded.labels() != model.labels()) return {false, "labels changed across save/load"};
  if (loaded.meta().epochs != model.meta().epochs ||
      loaded.meta().seed != model.meta().seed ||
      loaded.meta().example_count != model.meta().example_count)
    return {false, "training metadata changed across save/load"};
  for (const perceptron::Example& ex : examples) {
    const std::vector<double> sa = model.score(ex.features);
    const std::vector<double> sb = loaded.score(ex.features);
    if (sa != sb) return {false, "scores changed across save/load"};
  }
  return {true, format("zero training error in %d epochs, averages within %.1e",
                       kMaxSeparableEpochs, kAveragingTolerance)};
}

// --- 6: learned extraction and relation quality on held-out documents -------

Outcome learned_quality(ModelSet* out) {
  const preprocess::Lexicon& lex = preprocess::Lexicon::bundled();
  const Gazetteer& gaz = Gazetteer::bundled();

  GeneratorOptions gopt;
  gopt.seed = 42;
  gopt.num_docs = 200;
  const std::vector<DocumentRecord> recs = generate_corpus(gopt, lex);
  const std::size_t split = recs.size() * 8 / 10;

  std::vector<perceptron::Example> chunk_examples, event_ex;
  std::vector<TempRelGoldDoc> gold_train;
  for (std::size_t i = 0; i < split; ++i) {
    const Document doc = record_document(recs[i], lex);
    std::vector<Span> spans;
    for (const GoldTimex& t : recs[i].timexes) spans.push_back(t.span);
    for (perceptron::Example& ex : chunker_examples(doc, spans, gaz))
      chunk_examples.push_back(std::move(ex));
    for (perceptron::Example& ex : event_examples(doc, recs[i].event_tokens))
      event_ex.push_back(std::move(ex));
    gold_train.push_back(record_gold(recs[i], lex));
  }
  out->chunker = perceptron::train(chunk_examples, bio_labels(), 10, 1);
  out->events = perceptron::train(event_ex, event_labels(), 10, 2);
  TempRelTraining training = train_temprel(gold_train, 8, 3, 1, false);
  out->temprel = std::move(training.models);

  int ctp = 0, cfp = 0, cfn = 0;  // chunker spans, strict
  int etp = 0, efp = 0, efn = 0;  // event tokens
  int rtp = 0, rfp = 0, rfn = 0;  // event-event edges, strict
  InferenceOptions iopt;
  iopt.max_sent_dist = 1;
  for (std::size_t i = split; i < recs.size(); ++i) {
    const Document doc = record_document(recs[i], lex);

    std::vector<Span> gold_spans;
    for (const GoldTimex& t : recs[i].timexes) gold_spans.push_back(t.span);
    std::vector<Span> pred_spans;
    for (const TimexChunk& c : chunk_timexes(doc, out->chunker, gaz))
      pred_spans.push_back({doc.tokens[static_cast<std::size_t>(c.begin)].span.start,
                            doc.tokens[static_cast<std::size_t>(c.end - 1)].span.end});
    const SpanScores spans = score_spans(gold_spans, pred_spans);
    ctp += spans.strict.tp;
    cfp += spans.strict.fp;
    cfn += spans.strict.fn;

    std::vector<int> pred_tokens;
    for (const EventMention& e : annotate_events(doc, out->events))
      pred_tokens.push_back(e.token_index);
    const PRF ev = score_event_tokens(recs[i].event_tokens, pred_tokens);
    etp += ev.tp;
    efp += ev.fp;
    efn += ev.fn;

    TempRelGoldDoc gold = record_gold(recs[i], lex);
    const TemporalGraph graph =
        annotate_temprel(gold.doc, gold.events, gold.timexes, out->temprel, iopt);
    EeEdgeMap gold_map;
    for (const auto& [key, label] : gold.ee)
      gold_map[{gold.events[static_cast<std::size_t>(key.first)].token_index,
                gold.events[static_cast<std::size_t>(key.second)].token_index}] = label;
    const TempRelScores rel = score_ee(gold_map, ee_edges_by_token(graph));
    rtp += rel.strict.tp;
    rfp += rel.strict.fp;
    rfn += rel.strict.fn;
  }

  const PRF chunk_prf = make_prf(ctp, cfp, cfn);
  const PRF event_prf = make_prf(etp, efp, efn);
  const PRF rel_prf = make_prf(rtp, rfp, rfn);
  const std::string detail =
      format("chunker F1 %.3f, events F1 %.3f, relations strict F1 %.3f (floors %.2f/%.2f/%.2f)",
             chunk_prf.f1, event_prf.f1, rel_prf.f1, kChunkerF1Floor, kEventF1Floor,
             kEeStrictF1Floor);
  const bool ok = chunk_prf.f1 >= kChunkerF1Floor && event_prf.f1 >= kEventF1Floor &&
                  rel_prf.f1 >= kEeStrictF1Floor;
  return {ok, detail};
}

// --- 7: precision/recall arithmetic and the relaxed relation metric ---------

Outcome relaxed_scoring() {
  const PRF prf = make_prf(3, 1, 2);
  if (prf.precision != 0.75 || prf.recall != 0.6 || !prf.scored)
    return {false, format("make_prf(3,1,2) gave P %.4f R %.4f", prf.precision, prf.recall)};
  const double want_f1 = 2.0 * 0.75 * 0.6 / (0.75 + 0.6);
  if (prf.f1 != want_f1) return {false, "F1 is not the harmonic mean"};

  // A confident guess on a pair the gold marks Vague: penalized strictly,
  // discarded in the relaxed view.
  EeEdgeMap gold, predicted;
  gold[{0, 1}] = EeRelation::Vague;
  gold[{1, 2}] = EeRelation::Before;
  predicted[{0, 1}] = EeRelation::Before;
  predicted[{1, 2}] = EeRelation::Before;
  const TempRelScores s = score_ee(gold, predicted);
  if (s.strict.tp != 1 || s.strict.fp != 1 || s.strict.fn != 0)
    return {false, format("strict counts %d/%d/%d", s.strict.tp, s.strict.fp, s.strict.fn)};
  if (s.relaxed.tp != 1 || s.relaxed.fp != 0 || s.relaxed.fn != 0)
    return {false, format("relaxed counts %d/%d/%d", s.relaxed.tp, s.relaxed.fp, s.relaxed.fn)};
  if (!(s.relaxed.f1 >= s.strict.f1) || !(s.relaxed.f1 > s.strict.f1))
    return {false, "relaxed F1 does not dominate strict F1"};
  return {true, format("P %.2f R %.2f, relaxed %.2f > strict %.2f", prf.precision,
                       prf.recall, s.relaxed.f1, s.strict.f1)};
}

// --- 8: timeline ordering soundness ------------------------------------------

Outcome timeline_soundness() {
  static const char* kLemmas[] = {"sign", "adopt", "review", "merge", "expand", "protest"};
  Rng rng(88);
  std::size_t checked_edges = 0;
  for (int trial = 0; trial < kTimelineGraphs; ++trial) {
    const bool all_vague = trial % 5 == 4;
    const int n_events = 2 + static_cast<int>(rng.below(5));
    const int n_timexes = static_cast<int>(rng.below(3));

    TemporalGraph graph;
    for (int i = 0; i < n_events; ++i) {
      EventMention e;
      e.id = i;
      e.token_index = i * 3;
      e.lemma = kLemmas[static_cast<std::size_t>(i) % std::size(kLemmas)];
      graph.events.push_back(std::move(e));
    }
    for (int k = 0; k < n_timexes; ++k) {
      TimexMention t;
      t.id = n_events + k;
      t.span = {static_cast<std::size_t>(100 + 20 * k),
                static_cast<std::size_t>(110 + 20 * k)};
      t.type = TimexType::Date;
      if (rng.chance(0.8)) t.value = format("20%02d", static_cast<int>(rng.below(30)));
      graph.timexes.push_back(std::move(t));
    }

    // Labels read off latent integer times, so the graph is consistent and
    // the before/after edges can never order the groups cyclically.
    std::vector<long long> ts(static_cast<std::size_t>(n_events));
    for (long long& t : ts) t = static_cast<long long>(rng.below(4));
    for (int i = 0; i < n_events; ++i) {
      for (int j = i + 1; j < n_events; ++j) {
        EeRelation label = EeRelation::Vague;
        if (!all_vague) {
          const long long a = ts[static_cast<std::size_t>(i)];
          const long long b = ts[static_cast<std::size_t>(j)];
          label = a < b ? EeRelation::Before : a > b ? EeRelation::After : EeRelation::Equal;
          if (rng.chance(0.25)) continue;  // sparse subsets stay consistent
        }
        graph.ee_edges.push_back({i, j, label, {}});
      }
    }
    std::vector<char> anchored(static_cast<std::size_t>(n_timexes), 0);
    for (int k = 0; k < n_timexes; ++k) {
      const int event = static_cast<int>(rng.below(static_cast<std::uint64_t>(n_events)));
      const bool equal = rng.chance(0.6);
      anchored[static_cast<std::size_t>(k)] = equal;
      graph.et_edges.push_back(
          {event, n_events + k, equal ? EtRelation::Equal : EtRelation::NotEqual, {}});
    }

    const Timeline tl = build_timeline(graph);
    std::vector<int> pos(static_cast<std::size_t>(n_events), -1);
    for (std::size_t g = 0; g < tl.groups.size(); ++g)
      for (int id : tl.groups[g].events) pos[static_cast<std::size_t>(id)] = static_cast<int>(g);
    for (int p : pos)
      if (p < 0) return {false, format("trial %d: an event fell off the timeline", trial)};

    for (const EeEdge& e : graph.ee_edges) {
      const int pa = pos[static_cast<std::size_t>(e.node1)];
      const int pb = pos[static_cast<std::size_t>(e.node2)];
      bool fine = true;
      switch (e.label) {
        case EeRelation::Before: fine = pa < pb; break;
        case EeRelation::After: fine = pa > pb; break;
        case EeRelation::Equal: fine = pa == pb; break;
        case EeRelation::Vague: break;
      }
      if (!fine)
        return {false, format("trial %d: %s edge (%d,%d) not respected", trial,
                              std::string(ee_relation_name(e.label)).c_str(), e.node1,
                              e.node2)};
      ++checked_edges;
    }

    if (all_vague) {
      if (tl.groups.size() != static_cast<std::size_t>(n_events))
        return {false, format("trial %d: vague-only graph not singleton groups", trial)};
      for (int i = 0; i < n_events; ++i)
        if (tl.groups[static_cast<std::size_t>(i)].events != std::vector<int>{i})
          return {false, format("trial %d: vague-only order is not appearance order", trial)};
    }

    for (const EtEdge& e : graph.et_edges) {
      if (e.label != EtRelation::Equal) continue;
      const TimexMention& t = *graph.timex_by_id(e.timex);
      if (t.value.empty()) continue;  // anchored silently
      const auto& anchors =
          tl.groups[static_cast<std::size_t>(pos[static_cast<std::size_t>(e.event)])].anchors;
      if (!std::binary_search(anchors.begin(), anchors.end(), t.value))
        return {false, format("trial %d: anchor %s missing", trial, t.value.c_str())};
    }
    for (int k = 0; k < n_timexes; ++k) {
      const int id = n_events + k;
      const bool listed = std::find(tl.unanchored_timexes.begin(),
                                    tl.unanchored_timexes.end(),
                                    id) != tl.unanchored_timexes.end();
      if (listed == static_cast<bool>(anchored[static_cast<std::size_t>(k)]))
        return {false, format("trial %d: timex %d on the wrong side of unanchored", trial, id)};
    }

    // Rendering must not depend on the order edges arrived in.
    TemporalGraph shuffled = graph;
    rng.shuffle(shuffled.ee_edges);
    rng.shuffle(shuffled.et_edges);
    const std::string a = timeline_to_text(tl, graph);
    const std::string b = timeline_to_text(build_timeline(shuffled), shuffled);
    if (a != b) return {false, format("trial %d: text depends on edge order", trial)};
  }
  return {true, format("%d graphs, %zu edges respected, renders byte-stable",
                       kTimelineGraphs, checked_edges)};
}

// --- 9: prefilter speed and end-to-end latency -------------------------------

Outcome runtime_budgets(const ModelSet& models) {
  if (models.chunker.num_labels() == 0)
    return {false, "no trained models (earlier quality check failed to produce them)"};
  const preprocess::Lexicon& lex = preprocess::Lexicon::bundled();
  const Gazetteer& gaz = Gazetteer::bundled();

  GeneratorOptions gopt;
  gopt.seed = 77;
  gopt.num_docs = 4000;
  const std::vector<DocumentRecord> recs = generate_corpus(gopt, lex);
  std::string big;
  for (const DocumentRecord& r : recs) {
    if (!big.empty()) big += ' ';
    big += r.text;
  }
  const Document doc =
      preprocess::make_document("bench", std::move(big), parse_document_time("2018-05-15"), lex);
  if (doc.tokens.size() < static_cast<std::size_t>(kBigCorpusTokens))
    return {false, format("synthetic corpus only has %zu tokens", doc.tokens.size())};

  ChunkerStats stats;
  auto t0 = Clock::now();
  const std::vector<TimexChunk> chunks = chunk_timexes(doc, models.chunker, gaz, &stats);
  const double prefilter_ms = ms_since(t0);
  t0 = Clock::now();
  const std::vector<TimexChunk> baseline = regex_baseline_chunks(doc);
  const double regex_ms = ms_since(t0);
  if (stats.scored >= stats.tokens) return {false, "prefilter never skipped a token"};
  if (chunks.empty() || baseline.empty()) return {false, "a chunker found nothing at all"};
  const bool speed_ok = regex_ms >= kSpeedupFloor * prefilter_ms;

  std::string small;
  std::size_t small_tokens = 0;
  for (const DocumentRecord& r : recs) {
    if (!small.empty()) small += ' ';
    small += r.text;
    small_tokens =
        preprocess::make_document("probe", small, std::nullopt, lex).tokens.size();
    if (small_tokens >= 100) break;
  }
  double best_ms = std::numeric_limits<double>::infinity();
  for (int rep = 0; rep < 5; ++rep) {
    t0 = Clock::now();
    const AnnotatedDocument ad =
        annotate("latency", small, parse_document_time("2018-05-15"), models, lex);
    best_ms = std::min(best_ms, ms_since(t0));
    if (ad.doc.tokens.size() != small_tokens) return {false, "latency doc changed size"};
  }
  const bool latency_ok = best_ms < kAnnotateBudgetMs;
  const std::string detail = format(
      "prefilter %.1f ms vs regex %.1f ms on %zu tokens (%.1fx); %zu-token annotate %.2f ms",
      prefilter_ms, regex_ms, doc.tokens.size(),
      prefilter_ms > 0 ? regex_ms / prefilter_ms : 0.0, small_tokens, best_ms);
  return {speed_ok && latency_ok, detail};
}

// --- 10: composition table closure properties --------------------------------

Outcome composition_closure() {
  const ilp::CompositionTable& t = ilp::CompositionTable::standard();
  const EeRelation all[] = {EeRelation::Before, EeRelation::After, EeRelation::Equal,
                            EeRelation::Vague};
  if (t.trans(EeRelation::Before, EeRelation::Before) != ilp::label_bit(EeRelation::Before))
    return {false, "Before . Before is not exactly {Before}"};
  if (t.trans(EeRelation::After, EeRelation::After) != ilp::label_bit(EeRelation::After))
    return {false, "After . After is not exactly {After}"};
  for (EeRelation r : all) {
    if (t.trans(EeRelation::Equal, r) != ilp::label_bit(r))
      return {false, "the Equal row is not the identity"};
    if (t.trans(r, EeRelation::Equal) != ilp::label_bit(r))
      return {false, "the Equal column is not the identity"};
  }
  int cells = 0;
  for (EeRelation r1 : all) {
    for (EeRelation r2 : all) {
      ++cells;
      for (EeRelation c : all)
        if (t.permits(r1, r2, c) != t.permits(reverse_ee(r2), reverse_ee(r1), reverse_ee(c)))
          return {false, format("cell (%s,%s) breaks the reversal identity",
                                std::string(ee_relation_name(r1)).c_str(),
                                std::string(ee_relation_name(r2)).c_str())};
    }
  }
  return {true, format("%d cells satisfy the reversal identity, Equal acts as identity",
                       cells)};
}

template <typename Fn>
Outcome guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    return {false, std::string("exception: ") + e.what()};
  }
}

}  // namespace

int main() {
  int failed = 0;
  const auto report = [&failed](int index, const char* name, const Outcome& o) {
    std::printf("%s  %2d  %s", o.ok ? "PASS" : "FAIL", index, name);
    if (!o.detail.empty()) std::printf(" (%s)", o.detail.c_str());
    std::printf("\n");
    std::fflush(stdout);
    if (!o.ok) ++failed;
  };

  report(1, "rule normalizer reproduces the golden suite", guarded(golden_normalization));
  report(2, "joint inference matches exhaustive enumeration", guarded(joint_exactness));
  report(3, "annotated graphs are closure-consistent under arbitrary models",
         guarded(randomized_consistency));
  report(4, "confident chain overrides the local closing label", guarded(chain_repair));
  report(5, "averaged perceptron training invariants", guarded(perceptron_invariants));
  ModelSet trained;
  report(6, "held-out extraction and relation quality",
         guarded([&trained] { return learned_quality(&trained); }));
  report(7, "precision-recall arithmetic and relaxed scoring", guarded(relaxed_scoring));
  report(8, "timeline ordering soundness", guarded(timeline_soundness));
  report(9, "prefilter speed and end-to-end latency",
         guarded([&trained] { return runtime_budgets(trained); }));
  report(10, "composition table closure properties", guarded(composition_closure));

  return failed == 0 ? 0 : 1;
}
