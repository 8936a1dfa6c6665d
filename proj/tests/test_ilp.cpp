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

#include "tempus/ilp.hpp"

#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "support/oracles.hpp"
#include "tempus/util.hpp"

using namespace tempus;
using namespace tempus::ilp;

namespace {

EdgeSpec ee(int a, int b, std::vector<double> prob) {
  EdgeSpec e;
  e.node1 = a;
  e.node2 = b;
  e.kind = EdgeKind::EventEvent;
  e.prob = std::move(prob);
  return e;
}

EdgeSpec et(int a, int b, std::vector<double> prob) {
  EdgeSpec e;
  e.node1 = a;
  e.node2 = b;
  e.kind = EdgeKind::EventTimex;
  e.prob = std::move(prob);
  return e;
}

constexpr EeRelation B = EeRelation::Before;
constexpr EeRelation A = EeRelation::After;
constexpr EeRelation E = EeRelation::Equal;
constexpr EeRelation V = EeRelation::Vague;

}  // namespace

TEST_CASE("composition table cells") {
  const CompositionTable& t = CompositionTable::standard();

  CHECK(t.trans(B, B) == label_bit(B));
  CHECK(t.trans(A, A) == label_bit(A));
  for (EeRelation r : {B, A, E, V}) {
    CHECK(t.trans(E, r) == label_bit(r));
    CHECK(t.trans(r, E) == label_bit(r));
  }
  CHECK(t.trans(B, A) == kAllLabels);
  CHECK(t.trans(A, B) == kAllLabels);
  for (EeRelation r : {B, A, E, V}) {
    CHECK(t.trans(V, r) == (r == E ? label_bit(V) : kAllLabels));
    CHECK(t.trans(r, V) == (r == E ? label_bit(V) : kAllLabels));
  }

  CHECK(t.permits(B, B, B));
  CHECK(!t.permits(B, B, A));
  CHECK(!t.permits(B, B, V));
  CHECK(t.permits(B, A, V));
}

TEST_CASE("composition table respects reverse closure") {
  const CompositionTable& t = CompositionTable::standard();
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      const auto r1 = static_cast<EeRelation>(i);
      const auto r2 = static_cast<EeRelation>(j);
      LabelSet reversed = 0;
      const LabelSet flipped = t.trans(reverse_ee(r2), reverse_ee(r1));
      for (int l = 0; l < 4; ++l) {
        if (flipped & label_bit(static_cast<EeRelation>(l)))
          reversed |= label_bit(reverse_ee(static_cast<EeRelation>(l)));
      }
      CHECK(t.trans(r1, r2) == reversed);
    }
  }
}

TEST_CASE("build_problem lays out variables and constraints") {
  auto problem = build_problem(
      {ee(1, 2, {0.25, 0.25, 0.25, 0.25}), ee(0, 1, {0.7, 0.1, 0.1, 0.1}),
       ee(0, 2, {0.4, 0.3, 0.2, 0.1})},
      CompositionTable::standard());

  // Edges re-sorted canonically regardless of input order.
  REQUIRE(problem.edges.size() == 3);
  CHECK(problem.edges[0].node1 == 0);
  CHECK(problem.edges[0].node2 == 1);
  CHECK(problem.edges[1].node2 == 2);
  CHECK(problem.var_offset == std::vector<int>{0, 4, 8});
  CHECK(problem.num_vars == 12);

  int uniq = 0, trans = 0, coup = 0;
  for (const auto& row : problem.constraints) {
    switch (row.tag) {
      case LinearConstraint::Tag::Uniqueness: ++uniq; break;
      case LinearConstraint::Tag::Transitivity: ++trans; break;
      case LinearConstraint::Tag::Coupling: ++coup; break;
    }
  }
  CHECK(uniq == 3);
  CHECK(trans == 3 * 16);  // three pivots of one full triple
  CHECK(coup == 0);
  CHECK(problem.triples.size() == 3);
  CHECK(problem.couplings.empty());
}

TEST_CASE("build_problem wires coupling triangles") {
  const auto problem = build_problem(
      {ee(0, 1, {0.25, 0.25, 0.25, 0.25}), et(0, 2, {0.5, 0.5}),
       et(1, 2, {0.5, 0.5})},
      CompositionTable::standard());
  CHECK(problem.num_vars == 8);
  REQUIRE(problem.couplings.size() == 1);
  CHECK(problem.couplings[0].ee == 0);
  CHECK(problem.couplings[0].et1 == 1);
  CHECK(problem.couplings[0].et2 == 2);
  CHECK(problem.triples.empty());

  int coup = 0;
  for (const auto& row : problem.constraints) {
    if (row.tag == LinearConstraint::Tag::Coupling) ++coup;
  }
  CHECK(coup == 1);
}

TEST_CASE("build_problem validates its input") {
  const auto& table = CompositionTable::standard();
  const std::vector<double> uni4 = {0.25, 0.25, 0.25, 0.25};

  CHECK_THROWS_AS(build_problem({ee(2, 1, uni4)}, table), std::invalid_argument);
  CHECK_THROWS_AS(build_problem({ee(1, 1, uni4)}, table), std::invalid_argument);
  CHECK_THROWS_AS(build_problem({ee(-1, 1, uni4)}, table), std::invalid_argument);
  CHECK_THROWS_AS(build_problem({ee(0, 1, {0.5, 0.5})}, table),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_problem({et(0, 1, uni4)}, table), std::invalid_argument);
  CHECK_THROWS_AS(build_problem({ee(0, 1, {0.5, 0.5, 0.5, 0.5})}, table),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_problem({ee(0, 1, {1.2, -0.2, 0.0, 0.0})}, table),
                  std::invalid_argument);
  CHECK_THROWS_AS(build_problem({ee(0, 1, uni4), ee(0, 1, uni4)}, table),
                  std::invalid_argument);
  // Two event-event edges and one event-timex edge cannot close a triangle.
  CHECK_THROWS_AS(build_problem({ee(0, 1, uni4), ee(0, 2, uni4),
                                 et(1, 2, {0.5, 0.5})},
                                table),
                  std::invalid_argument);
}

TEST_CASE("objective and feasibility of full assignments") {
  const auto problem = build_problem(
      {ee(0, 1, {0.7, 0.1, 0.1, 0.1}), ee(1, 2, {0.6, 0.2, 0.1, 0.1}),
       ee(0, 2, {0.1, 0.6, 0.2, 0.1})},
      CompositionTable::standard());
  const auto& table = CompositionTable::standard();

  // Canonical edge order: (0,1), (0,2), (1,2).
  const std::vector<int> bbb = {0, 0, 0};
  CHECK(problem.objective(bbb) == doctest::Approx(0.7 + 0.1 + 0.6));
  CHECK(problem.feasible(bbb, table));
  CHECK(!problem.feasible({0, 1, 0}, table));     // B,B chain closed by After
  CHECK(!problem.feasible({0, 3, 0}, table));     // B,B chain closed by Vague
  CHECK(problem.feasible({3, 3, 3}, table));      // all-Vague always works
  CHECK(problem.feasible({0, 0, 1}, table));      // 0 < 2 < 1 is an order
  CHECK(problem.objective({0, 1, 0}) == doctest::Approx(0.7 + 0.6 + 0.6));
}

TEST_CASE("solver repairs an inconsistent confident chain") {
  const auto problem = build_problem(
      {ee(0, 1, {0.9, 0.04, 0.03, 0.03}), ee(1, 2, {0.9, 0.04, 0.03, 0.03}),
       ee(0, 2, {0.3, 0.6, 0.05, 0.05})},
      CompositionTable::standard());
  const auto result = solve(problem);
  CHECK(result.labels == std::vector<int>{0, 0, 0});
  CHECK(result.objective == doctest::Approx(2.1));
  CHECK(result.objective == problem.objective(result.labels));

  const auto oracle =
      oracles::brute_force_solve(problem, CompositionTable::standard());
  REQUIRE(oracle.found);
  CHECK(result.labels == oracle.labels);
  CHECK(result.objective == oracle.objective);
}

TEST_CASE("ties resolve to the lexicographically smallest assignment") {
  const std::vector<double> uni4 = {0.25, 0.25, 0.25, 0.25};
  const auto problem = build_problem(
      {ee(0, 1, uni4), ee(1, 2, uni4), ee(0, 2, uni4)},
      CompositionTable::standard());
  const auto result = solve(problem);
  CHECK(result.labels == std::vector<int>{0, 0, 0});
}

TEST_CASE("solver matches exhaustive search on random instances") {
  Rng rng(2024);
  const auto& table = CompositionTable::standard();
  for (int trial = 0; trial < 60; ++trial) {
    const int n = static_cast<int>(rng.range(2, 4));
    std::vector<bool> is_event(static_cast<std::size_t>(n));
    int events = 0;
    for (int i = 0; i < n; ++i) {
      is_event[static_cast<std::size_t>(i)] = rng.chance(0.7);
      if (is_event[static_cast<std::size_t>(i)]) ++events;
    }
    if (events < 2) is_event[0] = is_event[1] = true;

    std::vector<EdgeSpec> specs;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const bool ei = is_event[static_cast<std::size_t>(i)];
        const bool ej = is_event[static_cast<std::size_t>(j)];
        if (!ei && !ej) continue;  // no timex-timex edges
        const int labels = ei && ej ? 4 : 2;
        std::vector<double> prob(static_cast<std::size_t>(labels));
        double sum = 0.0;
        for (double& p : prob) {
          p = 0.05 + rng.real();
          sum += p;
        }
        for (double& p : prob) p /= sum;
        specs.push_back(ei && ej ? ee(i, j, prob) : et(i, j, prob));
      }
    }
    if (specs.empty()) continue;

    const auto problem = build_problem(specs, table);
    const auto fast = solve(problem);
    const auto slow = oracles::brute_force_solve(problem, table);
    REQUIRE(slow.found);
    CAPTURE(trial);
    CHECK(fast.labels == slow.labels);
    CHECK(fast.objective == slow.objective);
    CHECK(problem.feasible(fast.labels, table));
  }
}

TEST_CASE("coupling forces agreement through a shared anchor") {
  // Both events strongly equal the same timex, but the event pair leans
  // Before: the coupling row forbids keeping all three preferences.
  const auto problem = build_problem(
      {ee(0, 1, {0.6, 0.1, 0.25, 0.05}), et(0, 2, {0.9, 0.1}),
       et(1, 2, {0.9, 0.1})},
      CompositionTable::standard());
  const auto result = solve(problem);
  const auto oracle =
      oracles::brute_force_solve(problem, CompositionTable::standard());
  CHECK(result.labels == oracle.labels);
  CHECK(result.objective == oracle.objective);

  // Optimum keeps both anchors and flips the pair to Equal:
  // 0.25 + 0.9 + 0.9 beats 0.6 + 0.9 + 0.1 and 0.6 + 0.1 + 0.9.
  CHECK(result.labels == std::vector<int>{2, 0, 0});
}

TEST_CASE("dump_problem renders the three sections") {
  const auto problem = build_problem(
      {ee(0, 1, {0.7, 0.1, 0.1, 0.1}), et(0, 2, {0.5, 0.5}), et(1, 2, {0.5, 0.5})},
      CompositionTable::standard());
  const std::string text = dump_problem(problem);
  CHECK(text.find("VAR\n") != std::string::npos);
  CHECK(text.find("MAX\n") != std::string::npos);
  CHECK(text.find("ST\n") != std::string::npos);
  CHECK(text.find("x0") != std::string::npos);
  CHECK(text.find("0.700000") != std::string::npos);
}

namespace {

TemporalGraph three_event_graph(EeRelation r01, EeRelation r12, EeRelation r02) {
  TemporalGraph g;
  for (int i = 0; i < 3; ++i) {
    EventMention e;
    e.id = i;
    e.token_index = i;
    e.lemma = "e" + std::to_string(i);
    g.events.push_back(e);
  }
  EeEdge a{0, 1, r01, {}};
  EeEdge b{1, 2, r12, {}};
  EeEdge c{0, 2, r02, {}};
  g.ee_edges = {a, b, c};
  return g;
}

}  // namespace

TEST_CASE("check_consistency flags transitivity violations") {
  const auto& table = CompositionTable::standard();

  CHECK(ilp::check_consistency(three_event_graph(B, B, B), table).empty());
  CHECK(ilp::check_consistency(three_event_graph(B, A, V), table).empty());
  CHECK(ilp::check_consistency(three_event_graph(E, E, E), table).empty());

  const auto violations = ilp::check_consistency(three_event_graph(B, B, A), table);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].kind == Violation::Kind::Transitivity);
  CHECK(violations[0].a == 0);
  CHECK(violations[0].b == 1);
  CHECK(violations[0].c == 2);
  CHECK(violations[0].describe() ==
        "transitivity violation over nodes (0, 1, 2)");

  CHECK(!ilp::check_consistency(three_event_graph(E, E, B), table).empty());
  CHECK(!ilp::check_consistency(three_event_graph(B, B, V), table).empty());
}

TEST_CASE("check_consistency skips incomplete triples") {
  TemporalGraph g = three_event_graph(B, B, A);
  g.ee_edges.pop_back();  // drop the closing edge
  CHECK(ilp::check_consistency(g, CompositionTable::standard()).empty());
}

TEST_CASE("check_consistency flags coupling violations") {
  TemporalGraph g;
  for (int i = 0; i < 2; ++i) {
    EventMention e;
    e.id = i;
    e.token_index = i;
    e.lemma = "e" + std::to_string(i);
    g.events.push_back(e);
  }
  TimexMention t;
  t.id = 2;
  t.span = {10, 14};
  t.value = "2018-05-15";
  g.timexes.push_back(t);
  g.ee_edges.push_back(EeEdge{0, 1, B, {}});
  g.et_edges.push_back(EtEdge{0, 2, EtRelation::Equal, {}});
  g.et_edges.push_back(EtEdge{1, 2, EtRelation::Equal, {}});

  const auto violations =
      ilp::check_consistency(g, CompositionTable::standard());
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].kind == Violation::Kind::Coupling);
  CHECK(violations[0].describe() == "coupling violation over nodes (0, 1, 2)");

  g.ee_edges[0].label = E;
  CHECK(ilp::check_consistency(g, CompositionTable::standard()).empty());
}
