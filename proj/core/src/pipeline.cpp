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

#include "tempus/pipeline.hpp"

#include <filesystem>
#include <utility>
#include <vector>

#include "json.hpp"

#include "tempus/events.hpp"
#include "tempus/gazetteer.hpp"
#include "tempus/normalize.hpp"

namespace tempus {
namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kChunkerFile = "chunker.model";
constexpr const char* kEventsFile = "events.model";
constexpr const char* kEeFile = "ee.model";
constexpr const char* kEtFile = "et.model";
constexpr const char* kPriorsFile = "temprob.tsv";

std::string join(const std::string& dir, const char* name) {
  return (std::filesystem::path(dir) / name).string();
}

std::string dct_string(const std::optional<DocumentTime>& dct) {
  if (!dct) return "";
  std::string s = format_date(dct->date);
  if (dct->time) s += format_time(*dct->time);
  return s;
}

}  // namespace

ModelSet load_models(const std::string& dir) {
  ModelSet m;
  m.chunker = SparseModel::load(join(dir, kChunkerFile));
  m.events = SparseModel::load(join(dir, kEventsFile));
  m.temprel.ee = SparseModel::load(join(dir, kEeFile));
  m.temprel.et = SparseModel::load(join(dir, kEtFile));
  m.temprel.priors = TemProb::load(join(dir, kPriorsFile));
  return m;
}

void save_models(const ModelSet& models, const std::string& dir) {
  std::filesystem::create_directories(dir);
  models.chunker.save(join(dir, kChunkerFile));
  models.events.save(join(dir, kEventsFile));
  models.temprel.ee.save(join(dir, kEeFile));
  models.temprel.et.save(join(dir, kEtFile));
  models.temprel.priors.save(join(dir, kPriorsFile));
}

AnnotatedDocument annotate(std::string id, std::string text,
                           std::optional<DocumentTime> dct, const ModelSet& models,
                           const preprocess::Lexicon& lexicon,
                           const PipelineOptions& options) {
  AnnotatedDocument out;
  out.doc = preprocess::make_document(std::move(id), std::move(text), std::move(dct), lexicon);

  const Gazetteer& gaz = Gazetteer::bundled();
  const Normalizer normalizer;
  std::vector<TimexMention> timexes =
      annotate_timexes(out.doc, models.chunker, normalizer, gaz, options.timex);
  std::vector<EventMention> events = annotate_events(out.doc, models.events);

  out.graph = annotate_temprel(out.doc, std::move(events), std::move(timexes),
                               models.temprel, options.inference);
  try {
    out.timeline = build_timeline(out.graph);
  } catch (const TimelineCycleError& e) {
    out.timeline = {};
    out.timeline_error = e.what();
  }
  return out;
}

std::string annotation_to_json(const AnnotatedDocument& ad) {
  ordered_json j;
  j["schema_version"] = 1;
  j["id"] = ad.doc.id;
  j["text"] = ad.doc.text;
  j["dct"] = dct_string(ad.doc.dct);

  j["timexes"] = ordered_json::array();
  for (const TimexMention& t : ad.graph.timexes)
    j["timexes"].push_back(ordered_json{{"id", t.id},
                                        {"begin", t.span.start},
                                        {"end", t.span.end},
                                        {"type", std::string(timex_type_name(t.type))},
                                        {"value", t.value}});

  j["events"] = ordered_json::array();
  for (const EventMention& e : ad.graph.events) {
    const Span& span = ad.doc.tokens[static_cast<std::size_t>(e.token_index)].span;
    j["events"].push_back(ordered_json{{"id", e.id},
                                       {"token", e.token_index},
                                       {"begin", span.start},
                                       {"end", span.end},
                                       {"lemma", e.lemma}});
  }

  j["ee_edges"] = ordered_json::array();
  for (const EeEdge& e : ad.graph.ee_edges)
    j["ee_edges"].push_back(ordered_json{{"node1", e.node1},
                                         {"node2", e.node2},
                                         {"label", std::string(ee_relation_name(e.label))},
                                         {"dist", e.dist}});

  j["et_edges"] = ordered_json::array();
  for (const EtEdge& e : ad.graph.et_edges)
    j["et_edges"].push_back(ordered_json{{"event", e.event},
                                         {"timex", e.timex},
                                         {"label", std::string(et_relation_name(e.label))},
                                         {"dist", e.dist}});

  if (ad.timeline_error.empty()) {
    j["timeline"] = ordered_json::parse(timeline_to_json(ad.timeline, ad.graph));
  } else {
    j["timeline"] = nullptr;
    j["timeline_error"] = ad.timeline_error;
  }
  return j.dump(2) + "\n";
}

}  // namespace tempus
