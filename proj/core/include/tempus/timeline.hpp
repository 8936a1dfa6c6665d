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

#ifndef TEMPUS_TIMELINE_HPP_
#define TEMPUS_TIMELINE_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "tempus/core.hpp"

namespace tempus {

// One position on the timeline: events related by Equal, with the values of
// any timexes they are anchored to.
struct TimelineGroup {
  std::vector<int> events;           // event node ids, ascending
  std::vector<std::string> anchors;  // sorted unique timex values
};

struct Timeline {
  std::vector<TimelineGroup> groups;    // chronological order
  std::vector<int> unanchored_timexes;  // timex node ids outside any group
};

// Raised when the Before/After edges order the equal-groups cyclically.
// A graph whose labels come from an actual ordering of points can never
// trigger this; sparse predicted graphs can, since consistency is only
// enforced on fully connected triples.
class TimelineCycleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Groups events by Equal edges (event-timex Equal anchors the group to the
// timex value), orders groups topologically by the Before/After edges, and
// breaks ties toward the group containing the earliest mention. The result
// is a pure function of the graph, so repeated builds are byte-identical
// when rendered.
Timeline build_timeline(const TemporalGraph& graph);

std::string timeline_to_text(const Timeline& tl, const TemporalGraph& graph);
std::string timeline_to_json(const Timeline& tl, const TemporalGraph& graph);
std::string timeline_to_dot(const Timeline& tl, const TemporalGraph& graph);
std::string timeline_to_html(const Timeline& tl, const TemporalGraph& graph,
                             const Document& doc);

}  // namespace tempus

#endif  // TEMPUS_TIMELINE_HPP_
