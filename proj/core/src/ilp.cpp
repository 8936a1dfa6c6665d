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

#include <algorithm>
#include <cstdio>
#include <limits>
#include <map>
#include <stdexcept>
#include <utility>

namespace tempus::ilp {
namespace {

constexpr double kBoundSlack = 1e-9;

constexpr int kEeEqual = static_cast<int>(EeRelation::Equal);
constexpr int kEtEqual = static_cast<int>(EtRelation::Equal);
constexpr int kEtNotEqual = static_cast<int>(EtRelation::NotEqual);

LabelSet full_mask(const EdgeSpec& edge) {
  return static_cast<LabelSet>((1u << edge.num_labels()) - 1u);
}

// Mask of stored-edge labels corresponding to a mask of traversal-order
// labels on a reversed EE edge (swaps the Before and After bits).
LabelSet reverse_mask(LabelSet m) {
  LabelSet out = static_cast<LabelSet>(m & 0b1100);
  if (m & label_bit(EeRelation::Before)) out |= label_bit(EeRelation::After);
  if (m & label_bit(EeRelation::After)) out |= label_bit(EeRelation::Before);
  return out;
}

int oriented_to_stored(int label, bool reversed) {
  if (!reversed) return label;
  return static_cast<int>(reverse_ee(static_cast<EeRelation>(label)));
}

}  // namespace

CompositionTable::CompositionTable() {
  const auto B = EeRelation::Before;
  const auto A = EeRelation::After;
  const auto E = EeRelation::Equal;
  auto set = [this](EeRelation r1, EeRelation r2, LabelSet allowed) {
    table_[static_cast<std::size_t>(r1)][static_cast<std::size_t>(r2)] = allowed;
  };
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = kAllLabels;
  set(B, B, label_bit(B));
  set(A, A, label_bit(A));
  for (int i = 0; i < 4; ++i) {
    auto r = static_cast<EeRelation>(i);
    set(E, r, label_bit(r));
    set(r, E, label_bit(r));
  }
}

const CompositionTable& CompositionTable::standard() {
  static const CompositionTable table;
  return table;
}

double IlpProblem::objective(const std::vector<int>& labels) const {
  if (labels.size() != edges.size())
    throw std::invalid_argument("assignment size does not match edge count");
  double total = 0.0;
  for (std::size_t e = 0; e < edges.size(); ++e)
    total += edges[e].prob[static_cast<std::size_t>(labels[e])];
  return total;
}

bool IlpProblem::feasible(const std::vector<int>& labels,
                          const CompositionTable& table) const {
  for (const TriplePattern& t : triples) {
    // Stored label -> traversal-order label is its own inverse.
    const int r1 =
        oriented_to_stored(labels[static_cast<std::size_t>(t.premise1)], t.premise1_rev);
    const int r2 =
        oriented_to_stored(labels[static_cast<std::size_t>(t.premise2)], t.premise2_rev);
    int r3 = labels[static_cast<std::size_t>(t.conclusion)];
    if (!table.permits(static_cast<EeRelation>(r1), static_cast<EeRelation>(r2),
                       static_cast<EeRelation>(r3)))
      return false;
  }
  for (const CouplingPattern& c : couplings) {
    if (labels[static_cast<std::size_t>(c.et1)] == kEtEqual &&
        labels[static_cast<std::size_t>(c.et2)] == kEtEqual &&
        labels[static_cast<std::size_t>(c.ee)] != kEeEqual)
      return false;
  }
  return true;
}

IlpProblem build_problem(std::vector<EdgeSpec> edges, const CompositionTable& table,
                         BuildOptions options) {
  for (const EdgeSpec& e : edges) {
    if (e.node1 < 0 || e.node2 < 0 || e.node1 >= e.node2)
      throw std::invalid_argument("edge endpoints must satisfy 0 <= node1 < node2");
    const int expected = e.kind == EdgeKind::EventEvent ? 4 : 2;
    if (e.num_labels() != expected)
      throw std::invalid_argument("edge probability vector has the wrong arity");
    double sum = 0.0;
    for (double p : e.prob) {
      if (p < -1e-9) throw std::invalid_argument("negative edge probability");
      sum += p;
    }
    if (sum < 1.0 - 1e-6 || sum > 1.0 + 1e-6)
      throw std::invalid_argument("edge probabilities must sum to 1");
  }
  std::sort(edges.begin(), edges.end(), [](const EdgeSpec& a, const EdgeSpec& b) {
    return std::pair(a.node1, a.node2) < std::pair(b.node1, b.node2);
  });

  IlpProblem problem;
  problem.edges = std::move(edges);

  std::map<std::pair<int, int>, int> by_pair;
  std::vector<int> nodes;
  for (std::size_t e = 0; e < problem.edges.size(); ++e) {
    const EdgeSpec& spec = problem.edges[e];
    auto key = std::pair(spec.node1, spec.node2);
    if (!by_pair.emplace(key, static_cast<int>(e)).second)
      throw std::invalid_argument("duplicate edge for a node pair");
    nodes.push_back(spec.node1);
    nodes.push_back(spec.node2);
  }
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

  problem.var_offset.resize(problem.edges.size());
  int next_var = 0;
  for (std::size_t e = 0; e < problem.edges.size(); ++e) {
    problem.var_offset[e] = next_var;
    next_var += problem.edges[e].num_labels();
  }
  problem.num_vars = next_var;

  for (std::size_t e = 0; e < problem.edges.size(); ++e) {
    LinearConstraint row;
    row.rel = LinearConstraint::Rel::Eq;
    row.rhs = 1.0;
    row.tag = LinearConstraint::Tag::Uniqueness;
    for (int l = 0; l < problem.edges[e].num_labels(); ++l)
      row.terms.emplace_back(problem.var_offset[e] + l, 1.0);
    problem.constraints.push_back(std::move(row));
  }

  auto find_edge = [&by_pair](int a, int b) {
    auto it = by_pair.find(std::pair(std::min(a, b), std::max(a, b)));
    return it == by_pair.end() ? -1 : it->second;
  };

  int triple_id = 0;
  for (std::size_t ia = 0; ia < nodes.size(); ++ia) {
    for (std::size_t ib = ia + 1; ib < nodes.size(); ++ib) {
      for (std::size_t ic = ib + 1; ic < nodes.size(); ++ic) {
        const int i = nodes[ia], j = nodes[ib], k = nodes[ic];
        const int e_ij = find_edge(i, j);
        const int e_jk = find_edge(j, k);
        const int e_ik = find_edge(i, k);
        if (e_ij < 0 || e_jk < 0 || e_ik < 0) continue;

        int ee_count = 0;
        for (int e : {e_ij, e_jk, e_ik})
          if (problem.edges[static_cast<std::size_t>(e)].kind == EdgeKind::EventEvent)
            ++ee_count;

        if (ee_count == 3) {
          if (!options.transitivity) continue;
          // Three pivot orientations; the conclusion edge is always stored in
          // its canonical direction, each premise may be traversed backwards.
          //   pivot j: l(ik) in trans(l(ij), l(jk))
          //   pivot k: l(ij) in trans(l(ik), rev l(jk))
          //   pivot i: l(jk) in trans(rev l(ij), l(ik))
          const TriplePattern orientations[3] = {
              {e_ij, false, e_jk, false, e_ik, triple_id},
              {e_ik, false, e_jk, true, e_ij, triple_id},
              {e_ij, true, e_ik, false, e_jk, triple_id},
          };
          for (int o = 0; o < 3; ++o) {
            const TriplePattern& pat = orientations[o];
            problem.triples.push_back(pat);
            for (int r1 = 0; r1 < 4; ++r1) {
              for (int r2 = 0; r2 < 4; ++r2) {
                LinearConstraint row;
                row.rel = LinearConstraint::Rel::LessEq;
                row.rhs = 1.0;
                row.tag = LinearConstraint::Tag::Transitivity;
                row.triple_id = pat.triple_id;
                row.orientation = o;
                row.terms.emplace_back(
                    problem.var_offset[static_cast<std::size_t>(pat.premise1)] +
                        oriented_to_stored(r1, pat.premise1_rev),
                    1.0);
                row.terms.emplace_back(
                    problem.var_offset[static_cast<std::size_t>(pat.premise2)] +
                        oriented_to_stored(r2, pat.premise2_rev),
                    1.0);
                const LabelSet allowed =
                    table.trans(static_cast<EeRelation>(r1), static_cast<EeRelation>(r2));
                for (int r3 = 0; r3 < 4; ++r3)
                  if (allowed & label_bit(static_cast<EeRelation>(r3)))
                    row.terms.emplace_back(
                        problem.var_offset[static_cast<std::size_t>(pat.conclusion)] + r3,
                        -1.0);
                problem.constraints.push_back(std::move(row));
              }
            }
          }
          ++triple_id;
        } else if (ee_count == 1) {
          if (!options.coupling) continue;
          // Two event-timex edges plus the event-event edge between their
          // event endpoints: both anchored Equal to the same timex forces
          // the events Equal to each other.
          int ee = -1;
          std::vector<int> ets;
          for (int e : {e_ij, e_jk, e_ik}) {
            if (problem.edges[static_cast<std::size_t>(e)].kind == EdgeKind::EventEvent)
              ee = e;
            else
              ets.push_back(e);
          }
          CouplingPattern pat;
          pat.et1 = ets[0];
          pat.et2 = ets[1];
          pat.ee = ee;
          problem.couplings.push_back(pat);

          LinearConstraint row;
          row.rel = LinearConstraint::Rel::LessEq;
          row.rhs = 1.0;
          row.tag = LinearConstraint::Tag::Coupling;
          row.terms.emplace_back(
              problem.var_offset[static_cast<std::size_t>(pat.et1)] + kEtEqual, 1.0);
          row.terms.emplace_back(
              problem.var_offset[static_cast<std::size_t>(pat.et2)] + kEtEqual, 1.0);
          row.terms.emplace_back(
              problem.var_offset[static_cast<std::size_t>(pat.ee)] + kEeEqual, -1.0);
          problem.constraints.push_back(std::move(row));
        } else {
          // A connected triple with two event-event edges must close with a
          // third event-event edge; two timexes are never directly related.
          throw std::invalid_argument("triangle mixes edge kinds incoherently");
        }
      }
    }
  }
  return problem;
}

namespace {

class Solver {
 public:
  Solver(const IlpProblem& problem, const CompositionTable& table)
      : problem_(problem), table_(table) {}

  SolveResult run() {
    const std::size_t n = problem_.edges.size();
    masks_.resize(n);
    for (std::size_t e = 0; e < n; ++e) masks_[e] = full_mask(problem_.edges[e]);

    order_.resize(n);
    for (std::size_t e = 0; e < n; ++e) order_[e] = static_cast<int>(e);
    std::sort(order_.begin(), order_.end(), [this](int a, int b) {
      const double ma = max_prob(a), mb = max_prob(b);
      if (ma != mb) return ma > mb;
      return a < b;
    });

    best_objective_ = -std::numeric_limits<double>::infinity();
    if (propagate()) dfs(0);

    SolveResult result;
    result.labels = best_labels_;
    result.objective = best_objective_;
    result.nodes_explored = nodes_explored_;
    return result;
  }

 private:
  double max_prob(int e) const {
    const auto& p = problem_.edges[static_cast<std::size_t>(e)].prob;
    return *std::max_element(p.begin(), p.end());
  }

  double bound() const {
    double total = 0.0;
    for (std::size_t e = 0; e < masks_.size(); ++e) {
      const auto& p = problem_.edges[e].prob;
      double best = -std::numeric_limits<double>::infinity();
      for (int l = 0; l < static_cast<int>(p.size()); ++l)
        if (masks_[e] & (1u << l)) best = std::max(best, p[static_cast<std::size_t>(l)]);
      total += best;
    }
    return total;
  }

  // Tightens every mask to arc consistency over the transitivity and
  // coupling patterns. Returns false if some mask becomes empty.
  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const TriplePattern& t : problem_.triples) {
        LabelSet m1 = masks_[static_cast<std::size_t>(t.premise1)];
        if (t.premise1_rev) m1 = reverse_mask(m1);
        LabelSet m2 = masks_[static_cast<std::size_t>(t.premise2)];
        if (t.premise2_rev) m2 = reverse_mask(m2);
        LabelSet m3 = masks_[static_cast<std::size_t>(t.conclusion)];

        LabelSet conclusion_support = 0;
        LabelSet premise1_support = 0;
        LabelSet premise2_support = 0;
        for (int r1 = 0; r1 < 4; ++r1) {
          if (!(m1 & (1u << r1))) continue;
          for (int r2 = 0; r2 < 4; ++r2) {
            if (!(m2 & (1u << r2))) continue;
            const LabelSet allowed =
                table_.trans(static_cast<EeRelation>(r1), static_cast<EeRelation>(r2));
            conclusion_support |= allowed;
            if (allowed & m3) {
              premise1_support |= static_cast<LabelSet>(1u << r1);
              premise2_support |= static_cast<LabelSet>(1u << r2);
            }
          }
        }
        LabelSet new1 = static_cast<LabelSet>(m1 & premise1_support);
        LabelSet new2 = static_cast<LabelSet>(m2 & premise2_support);
        LabelSet new3 = static_cast<LabelSet>(m3 & conclusion_support);
        if (t.premise1_rev) new1 = reverse_mask(new1);
        if (t.premise2_rev) new2 = reverse_mask(new2);
        changed |= update(t.premise1, new1);
        changed |= update(t.premise2, new2);
        changed |= update(t.conclusion, new3);
        if (!new1 || !new2 || !new3) return false;
      }
      for (const CouplingPattern& c : problem_.couplings) {
        const LabelSet equal_only = 1u << kEtEqual;
        const LabelSet ee_equal = label_bit(EeRelation::Equal);
        LabelSet m1 = masks_[static_cast<std::size_t>(c.et1)];
        LabelSet m2 = masks_[static_cast<std::size_t>(c.et2)];
        LabelSet m3 = masks_[static_cast<std::size_t>(c.ee)];
        if (m1 == equal_only && m2 == equal_only)
          changed |= update(c.ee, static_cast<LabelSet>(m3 & ee_equal));
        if (m1 == equal_only && !(m3 & ee_equal))
          changed |= update(c.et2, static_cast<LabelSet>(m2 & (1u << kEtNotEqual)));
        if (m2 == equal_only && !(m3 & ee_equal))
          changed |= update(c.et1, static_cast<LabelSet>(m1 & (1u << kEtNotEqual)));
        if (!masks_[static_cast<std::size_t>(c.et1)] ||
            !masks_[static_cast<std::size_t>(c.et2)] ||
            !masks_[static_cast<std::size_t>(c.ee)])
          return false;
      }
    }
    return true;
  }

  bool update(int edge, LabelSet mask) {
    if (masks_[static_cast<std::size_t>(edge)] == mask) return false;
    masks_[static_cast<std::size_t>(edge)] = mask;
    return true;
  }

  void dfs(std::size_t depth) {
    if (depth == order_.size()) {
      std::vector<int> labels(masks_.size());
      for (std::size_t e = 0; e < masks_.size(); ++e) {
        // Every mask is a singleton here: all edges were branched on.
        int l = 0;
        while (!(masks_[e] & (1u << l))) ++l;
        labels[e] = l;
      }
      const double obj = problem_.objective(labels);
      if (obj > best_objective_ ||
          (obj == best_objective_ && labels < best_labels_)) {
        best_objective_ = obj;
        best_labels_ = labels;
      }
      return;
    }

    const int edge = order_[depth];
    const auto& prob = problem_.edges[static_cast<std::size_t>(edge)].prob;
    const LabelSet available = masks_[static_cast<std::size_t>(edge)];

    std::vector<int> labels;
    for (int l = 0; l < static_cast<int>(prob.size()); ++l)
      if (available & (1u << l)) labels.push_back(l);
    std::stable_sort(labels.begin(), labels.end(), [&prob](int a, int b) {
      return prob[static_cast<std::size_t>(a)] > prob[static_cast<std::size_t>(b)];
    });

    const std::vector<LabelSet> saved = masks_;
    for (int l : labels) {
      ++nodes_explored_;
      masks_ = saved;
      masks_[static_cast<std::size_t>(edge)] = static_cast<LabelSet>(1u << l);
      if (propagate() && bound() >= best_objective_ - kBoundSlack) dfs(depth + 1);
    }
    masks_ = saved;
  }

  const IlpProblem& problem_;
  const CompositionTable& table_;
  std::vector<LabelSet> masks_;
  std::vector<int> order_;
  std::vector<int> best_labels_;
  double best_objective_ = 0.0;
  std::uint64_t nodes_explored_ = 0;
};

}  // namespace

SolveResult solve(const IlpProblem& problem) {
  Solver solver(problem, CompositionTable::standard());
  SolveResult result = solver.run();
  if (result.labels.empty() && !problem.edges.empty())
    throw std::logic_error("inference found no feasible assignment");
  return result;
}

std::string dump_problem(const IlpProblem& problem) {
  std::string out;
  char buf[160];

  out += "VAR\n";
  for (std::size_t e = 0; e < problem.edges.size(); ++e) {
    const EdgeSpec& spec = problem.edges[e];
    for (int l = 0; l < spec.num_labels(); ++l) {
      const std::string label(spec.kind == EdgeKind::EventEvent
                                  ? ee_relation_name(static_cast<EeRelation>(l))
                                  : et_relation_name(static_cast<EtRelation>(l)));
      std::snprintf(buf, sizeof buf, "  x%d : edge %zu (%d,%d) %s\n",
                    problem.var_offset[e] + l, e, spec.node1, spec.node2,
                    label.c_str());
      out += buf;
    }
  }

  out += "MAX\n ";
  for (std::size_t e = 0; e < problem.edges.size(); ++e) {
    for (int l = 0; l < problem.edges[e].num_labels(); ++l) {
      std::snprintf(buf, sizeof buf, " + %.6f x%d",
                    problem.edges[e].prob[static_cast<std::size_t>(l)],
                    problem.var_offset[e] + l);
      out += buf;
    }
  }
  out += "\n";

  out += "ST\n";
  int uniq = 0, trans = 0, coup = 0;
  for (const LinearConstraint& row : problem.constraints) {
    switch (row.tag) {
      case LinearConstraint::Tag::Uniqueness:
        std::snprintf(buf, sizeof buf, "  u%d:", uniq++);
        break;
      case LinearConstraint::Tag::Transitivity:
        std::snprintf(buf, sizeof buf, "  t%d.%d.%d:", row.triple_id, row.orientation,
                      trans++ % 16);
        break;
      case LinearConstraint::Tag::Coupling:
        std::snprintf(buf, sizeof buf, "  c%d:", coup++);
        break;
    }
    out += buf;
    for (const auto& [var, coef] : row.terms) {
      std::snprintf(buf, sizeof buf, " %c x%d", coef >= 0 ? '+' : '-', var);
      out += buf;
    }
    std::snprintf(buf, sizeof buf, " %s %g\n",
                  row.rel == LinearConstraint::Rel::Eq ? "=" : "<=", row.rhs);
    out += buf;
  }
  return out;
}

std::string Violation::describe() const {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%s violation over nodes (%d, %d, %d)",
                kind == Kind::Transitivity ? "transitivity" : "coupling", a, b, c);
  return buf;
}

std::vector<Violation> check_consistency(const TemporalGraph& graph,
                                         const CompositionTable& table) {
  std::map<std::pair<int, int>, EeRelation> ee;
  std::map<std::pair<int, int>, EtRelation> et;
  for (const EeEdge& e : graph.ee_edges)
    ee[std::pair(std::min(e.node1, e.node2), std::max(e.node1, e.node2))] = e.label;
  for (const EtEdge& e : graph.et_edges)
    et[std::pair(std::min(e.event, e.timex), std::max(e.event, e.timex))] = e.label;

  const int n = graph.node_count();
  std::vector<Violation> violations;

  auto ee_label = [&ee](int a, int b) -> const EeRelation* {
    auto it = ee.find(std::pair(std::min(a, b), std::max(a, b)));
    return it == ee.end() ? nullptr : &it->second;
  };
  auto et_label = [&et](int a, int b) -> const EtRelation* {
    auto it = et.find(std::pair(std::min(a, b), std::max(a, b)));
    return it == et.end() ? nullptr : &it->second;
  };

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (int k = j + 1; k < n; ++k) {
        const bool all_events =
            graph.is_event(i) && graph.is_event(j) && graph.is_event(k);
        if (all_events) {
          const EeRelation* ij = ee_label(i, j);
          const EeRelation* jk = ee_label(j, k);
          const EeRelation* ik = ee_label(i, k);
          if (!ij || !jk || !ik) continue;
          const bool ok = table.permits(*ij, *jk, *ik) &&
                          table.permits(*ik, reverse_ee(*jk), *ij) &&
                          table.permits(reverse_ee(*ij), *ik, *jk);
          if (!ok) violations.push_back({Violation::Kind::Transitivity, i, j, k});
          continue;
        }
        // Coupling applies to triangles of two events and one timex.
        int events[2], timex = -1;
        int num_events = 0;
        for (int node : {i, j, k}) {
          if (graph.is_event(node)) {
            if (num_events < 2) events[num_events] = node;
            ++num_events;
          } else {
            timex = node;
          }
        }
        if (num_events != 2) continue;
        const EtRelation* a = et_label(events[0], timex);
        const EtRelation* b = et_label(events[1], timex);
        const EeRelation* r = ee_label(events[0], events[1]);
        if (!a || !b || !r) continue;
        if (*a == EtRelation::Equal && *b == EtRelation::Equal &&
            *r != EeRelation::Equal)
          violations.push_back({Violation::Kind::Coupling, i, j, k});
      }
    }
  }
  return violations;
}

}  // namespace tempus::ilp
