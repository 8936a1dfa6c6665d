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

#ifndef TEMPUS_ILP_HPP_
#define TEMPUS_ILP_HPP_

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tempus/core.hpp"

namespace tempus::ilp {

// Bitmask over EeRelation values (bit i = enum value i permitted).
using LabelSet = std::uint8_t;
inline constexpr LabelSet kAllLabels = 0b1111;

inline constexpr LabelSet label_bit(EeRelation r) {
  return static_cast<LabelSet>(1u << static_cast<int>(r));
}

// For relations r1 on (i,j) and r2 on (j,k), the set of labels permitted on
// (i,k). Point-order composition with Vague as "no information":
//   (Before,Before) -> {Before}; (After,After) -> {After};
//   (Equal,r) -> {r} and (r,Equal) -> {r};
//   everything else (opposite orders, anything with Vague) -> all four.
// The table satisfies trans(r1,r2) = reverse(trans(reverse(r2),reverse(r1))).
class CompositionTable {
 public:
  static const CompositionTable& standard();

  LabelSet trans(EeRelation r1, EeRelation r2) const {
    return table_[static_cast<std::size_t>(r1)][static_cast<std::size_t>(r2)];
  }
  bool permits(EeRelation r1, EeRelation r2, EeRelation r3) const {
    return (trans(r1, r2) & label_bit(r3)) != 0;
  }

 private:
  CompositionTable();
  std::array<std::array<LabelSet, 4>, 4> table_;
};

enum class EdgeKind { EventEvent, EventTimex };

// One scored edge entering global inference. Endpoints are node ids with
// node1 < node2 (document order); `prob` is indexed by the label enum of the
// edge kind (4 entries for EE, 2 for ET).
struct EdgeSpec {
  int node1 = -1;
  int node2 = -1;
  EdgeKind kind = EdgeKind::EventEvent;
  std::vector<double> prob;

  int num_labels() const { return static_cast<int>(prob.size()); }
};

// A linear row over the binary variables; kept generic so the problem can be
// dumped and inspected independently of the solver.
struct LinearConstraint {
  enum class Rel { LessEq, Eq };
  enum class Tag { Uniqueness, Transitivity, Coupling };

  std::vector<std::pair<int, double>> terms;  // (variable index, coefficient)
  Rel rel = Rel::LessEq;
  double rhs = 0.0;
  Tag tag = Tag::Uniqueness;
  int triple_id = -1;    // transitivity rows: which node triple
  int orientation = -1;  // transitivity rows: which pivot (0..2)
};

// The solver works on a structured view of the transitivity and coupling
// constraints; the generic rows exist for dumping, counting and validation.
// One oriented instance per (triple, pivot): label(conclusion) must lie in
// trans(label(premise1'), label(premise2')) where ' applies reverse_ee when
// the stored canonical edge is traversed backwards.
struct TriplePattern {
  int premise1 = -1;
  bool premise1_rev = false;
  int premise2 = -1;
  bool premise2_rev = false;
  int conclusion = -1;
  int triple_id = -1;
};

// x(e1t,Equal) + x(e2t,Equal) - x(e1e2,Equal) <= 1 for events e1,e2 and
// timex t with all three edges present.
struct CouplingPattern {
  int et1 = -1;
  int et2 = -1;
  int ee = -1;
};

struct IlpProblem {
  std::vector<EdgeSpec> edges;  // canonical order: sorted by (node1, node2)
  std::vector<int> var_offset;  // variable index of (edge, label 0)
  int num_vars = 0;
  std::vector<LinearConstraint> constraints;
  std::vector<TriplePattern> triples;
  std::vector<CouplingPattern> couplings;

  // Objective of a full assignment (one label index per edge), summed in
  // canonical edge order so ties are reproducible.
  double objective(const std::vector<int>& labels) const;
  bool feasible(const std::vector<int>& labels, const CompositionTable& table) const;
};

struct BuildOptions {
  bool transitivity = true;
  bool coupling = true;  // disableable for ablation
};

// Objective = sum over edges and labels of p(edge,label) * x(edge,label);
// uniqueness row per edge; 16 transitivity rows per (triple, pivot) with the
// three pivots of every fully connected event triple enumerated; one
// coupling row per (event pair, timex) triangle.
IlpProblem build_problem(std::vector<EdgeSpec> edges, const CompositionTable& table,
                         BuildOptions options = {});

struct SolveResult {
  std::vector<int> labels;  // per edge, canonical order; label enum index
  double objective = 0.0;
  std::uint64_t nodes_explored = 0;
};

// Exact depth-first branch and bound. Branches over edges in descending
// local-confidence order, propagates label masks through the triple and
// coupling patterns, and bounds with the per-remaining-edge max probability.
// Among optima, returns the lexicographically smallest assignment under the
// label enum order (Before < After < Equal < Vague; Equal < NotEqual) taken
// in canonical edge order. The all-Vague/NotEqual assignment is always
// feasible, so a result always exists.
SolveResult solve(const IlpProblem& problem);

// Plain-text rendering with VAR, MAX and ST sections for external checking.
std::string dump_problem(const IlpProblem& problem);

struct Violation {
  enum class Kind { Transitivity, Coupling };
  Kind kind = Kind::Transitivity;
  int a = -1, b = -1, c = -1;  // node ids, ascending
  std::string describe() const;
};

// Empty iff every fully connected triple satisfies the composition table
// under all three pivots and every (e1,e2,t) triangle satisfies the
// equal-coupling implication. One entry per violating triple.
std::vector<Violation> check_consistency(const TemporalGraph& graph,
                                         const CompositionTable& table);

}  // namespace tempus::ilp

#endif  // TEMPUS_ILP_HPP_
