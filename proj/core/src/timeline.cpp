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

#include "tempus/timeline.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <set>

#include "json.hpp"

namespace tempus {
namespace {

// Plain union-find over node ids.
class Partition {
 public:
  explicit Partition(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] =
          parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent_[static_cast<std::size_t>(find(a))] = find(b); }

 private:
  std::vector<int> parent_;
};

std::string html_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string event_label(const TemporalGraph& graph, int node_id) {
  const EventMention* e = graph.event_by_id(node_id);
  char buf[80];
  std::snprintf(buf, sizeof buf, "%s(e%d)", e ? e->lemma.c_str() : "?", node_id);
  return buf;
}

}  // namespace

Timeline build_timeline(const TemporalGraph& graph) {
  const int n = graph.node_count();
  Partition part(n);
  for (const EeEdge& e : graph.ee_edges)
    if (e.label == EeRelation::Equal) part.unite(e.node1, e.node2);

  // Group representatives, in ascending smallest-member order so group
  // numbering is stable.
  std::vector<int> group_of(static_cast<std::size_t>(n), -1);
  std::vector<TimelineGroup> groups;
  for (int id = 0; id < n; ++id) {
    if (!graph.is_event(id)) continue;
    const int root = part.find(id);
    if (group_of[static_cast<std::size_t>(root)] < 0) {
      group_of[static_cast<std::size_t>(root)] = static_cast<int>(groups.size());
      groups.emplace_back();
    }
    group_of[static_cast<std::size_t>(id)] = group_of[static_cast<std::size_t>(root)];
    groups[static_cast<std::size_t>(group_of[static_cast<std::size_t>(root)])]
        .events.push_back(id);
  }

  std::set<int> anchored;
  for (const EtEdge& e : graph.et_edges) {
    if (e.label != EtRelation::Equal) continue;
    anchored.insert(e.timex);
    const TimexMention* t = graph.timex_by_id(e.timex);
    if (!t || t->value.empty()) continue;
    auto& anchors =
        groups[static_cast<std::size_t>(group_of[static_cast<std::size_t>(e.event)])]
            .anchors;
    anchors.push_back(t->value);
  }
  for (TimelineGroup& g : groups) {
    std::sort(g.anchors.begin(), g.anchors.end());
    g.anchors.erase(std::unique(g.anchors.begin(), g.anchors.end()),
                    g.anchors.end());
  }

  // Order constraints between groups.
  const int ng = static_cast<int>(groups.size());
  std::vector<std::set<int>> succ(static_cast<std::size_t>(ng));
  std::vector<int> indegree(static_cast<std::size_t>(ng), 0);
  for (const EeEdge& e : graph.ee_edges) {
    int from, to;
    if (e.label == EeRelation::Before) {
      from = group_of[static_cast<std::size_t>(e.node1)];
      to = group_of[static_cast<std::size_t>(e.node2)];
    } else if (e.label == EeRelation::After) {
      from = group_of[static_cast<std::size_t>(e.node2)];
      to = group_of[static_cast<std::size_t>(e.node1)];
    } else {
      continue;
    }
    if (from == to)
      throw TimelineCycleError("contradictory order inside an equal group");
    if (succ[static_cast<std::size_t>(from)].insert(to).second)
      ++indegree[static_cast<std::size_t>(to)];
  }

  // Kahn's algorithm; among ready groups take the one whose earliest event
  // appears first in the document (node ids follow document order).
  std::set<std::pair<int, int>> ready;  // (min node id, group)
  for (int g = 0; g < ng; ++g)
    if (indegree[static_cast<std::size_t>(g)] == 0)
      ready.insert({groups[static_cast<std::size_t>(g)].events.front(), g});

  std::vector<TimelineGroup> ordered;
  ordered.reserve(groups.size());
  while (!ready.empty()) {
    const auto [pos, g] = *ready.begin();
    ready.erase(ready.begin());
    ordered.push_back(groups[static_cast<std::size_t>(g)]);
    for (const int next : succ[static_cast<std::size_t>(g)])
      if (--indegree[static_cast<std::size_t>(next)] == 0)
        ready.insert({groups[static_cast<std::size_t>(next)].events.front(), next});
  }
  if (ordered.size() != groups.size())
    throw TimelineCycleError("before/after edges order the groups cyclically");

  Timeline tl;
  tl.groups = std::move(ordered);
  for (const TimexMention& t : graph.timexes)
    if (!anchored.count(t.id)) tl.unanchored_timexes.push_back(t.id);
  std::sort(tl.unanchored_timexes.begin(), tl.unanchored_timexes.end());
  return tl;
}

std::string timeline_to_text(const Timeline& tl, const TemporalGraph& graph) {
  std::string out;
  char buf[32];
  for (std::size_t g = 0; g < tl.groups.size(); ++g) {
    std::snprintf(buf, sizeof buf, "%zu:", g);
    out += buf;
    for (const int id : tl.groups[g].events) out += " " + event_label(graph, id);
    for (const std::string& a : tl.groups[g].anchors) out += " @" + a;
    out += "\n";
  }
  for (const int id : tl.unanchored_timexes) {
    const TimexMention* t = graph.timex_by_id(id);
    std::snprintf(buf, sizeof buf, "t%d", id);
    out += std::string("unanchored: ") + buf;
    if (t && !t->value.empty()) out += "=" + t->value;
    out += "\n";
  }
  return out;
}

std::string timeline_to_json(const Timeline& tl, const TemporalGraph& graph) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["groups"] = nlohmann::json::array();
  for (const TimelineGroup& g : tl.groups) {
    nlohmann::json jg;
    jg["events"] = nlohmann::json::array();
    for (const int id : g.events) {
      const EventMention* e = graph.event_by_id(id);
      jg["events"].push_back({{"id", id},
                              {"lemma", e ? e->lemma : ""},
                              {"token", e ? e->token_index : -1}});
    }
    jg["anchors"] = g.anchors;
    j["groups"].push_back(std::move(jg));
  }
  j["unanchored_timexes"] = nlohmann::json::array();
  for (const int id : tl.unanchored_timexes) {
    const TimexMention* t = graph.timex_by_id(id);
    j["unanchored_timexes"].push_back(
        {{"id", id},
         {"type", t ? std::string(timex_type_name(t->type)) : ""},
         {"value", t ? t->value : ""}});
  }
  return j.dump(2) + "\n";
}

std::string timeline_to_dot(const Timeline& tl, const TemporalGraph& graph) {
  std::string out = "digraph timeline {\n  rankdir=LR;\n  node [shape=box];\n";
  char buf[64];

  // Node id -> chronological group index, for drawing the order edges.
  std::vector<int> group_of(static_cast<std::size_t>(graph.node_count()), -1);
  for (std::size_t g = 0; g < tl.groups.size(); ++g)
    for (const int id : tl.groups[g].events)
      group_of[static_cast<std::size_t>(id)] = static_cast<int>(g);

  for (std::size_t g = 0; g < tl.groups.size(); ++g) {
    std::string label;
    for (const int id : tl.groups[g].events) {
      if (!label.empty()) label += "\\n";
      label += event_label(graph, id);
    }
    for (const std::string& a : tl.groups[g].anchors) label += "\\n@" + a;
    std::snprintf(buf, sizeof buf, "  g%zu [label=\"", g);
    out += buf;
    out += label + "\"];\n";
  }

  std::set<std::pair<int, int>> drawn;
  for (const EeEdge& e : graph.ee_edges) {
    int from, to;
    if (e.label == EeRelation::Before) {
      from = group_of[static_cast<std::size_t>(e.node1)];
      to = group_of[static_cast<std::size_t>(e.node2)];
    } else if (e.label == EeRelation::After) {
      from = group_of[static_cast<std::size_t>(e.node2)];
      to = group_of[static_cast<std::size_t>(e.node1)];
    } else {
      continue;
    }
    if (from == to || !drawn.insert({from, to}).second) continue;
    std::snprintf(buf, sizeof buf, "  g%d -> g%d;\n", from, to);
    out += buf;
  }
  out += "}\n";
  return out;
}

std::string timeline_to_html(const Timeline& tl, const TemporalGraph& graph,
                             const Document& doc) {
  std::string out =
      "<!DOCTYPE html>\n<html><head><meta charset=\"utf-8\">"
      "<title>timeline</title>\n<style>\n"
      "body { font-family: sans-serif; margin: 2em; }\n"
      ".group { border-left: 3px solid #4078c0; margin: 0.6em 0; "
      "padding: 0.3em 0.8em; }\n"
      ".anchor { color: #666; font-size: 90%; }\n"
      "</style></head>\n<body>\n";
  out += "<h1>" + html_escape(doc.id.empty() ? "timeline" : doc.id) + "</h1>\n";
  out += "<ol>\n";
  for (const TimelineGroup& g : tl.groups) {
    out += "<li class=\"group\">";
    bool first = true;
    for (const int id : g.events) {
      const EventMention* e = graph.event_by_id(id);
      if (!first) out += ", ";
      first = false;
      out += "<b>" + html_escape(e ? e->lemma : "?") + "</b>";
    }
    for (const std::string& a : g.anchors)
      out += " <span class=\"anchor\">@" + html_escape(a) + "</span>";
    out += "</li>\n";
  }
  out += "</ol>\n";
  if (!tl.unanchored_timexes.empty()) {
    out += "<p class=\"anchor\">unanchored:";
    for (const int id : tl.unanchored_timexes) {
      const TimexMention* t = graph.timex_by_id(id);
      out += " " + html_escape(t && !t->value.empty() ? t->value : "?");
    }
    out += "</p>\n";
  }
  out += "</body></html>\n";
  return out;
}

}  // namespace tempus
