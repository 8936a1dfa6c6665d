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

#include <unistd.h>

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "tempus/corpus.hpp"
#include "tempus/ilp.hpp"

using namespace tempus;

namespace {

// Small models trained on a slice of the synthetic corpus; shared across
// cases because training is the slow part.
const ModelSet& tiny_models() {
  static const ModelSet models = [] {
    const auto& lexicon = preprocess::Lexicon::bundled();
    GeneratorOptions opts;
    opts.seed = 11;
    opts.num_docs = 30;
    const auto docs = generate_corpus(opts, lexicon);

    std::vector<Example> chunker_ex;
    std::vector<Example> event_ex;
    std::vector<TempRelGoldDoc> gold_docs;
    for (const auto& rec : docs) {
      const Document doc = record_document(rec, lexicon);
      std::vector<Span> spans;
      for (const auto& t : rec.timexes) spans.push_back(t.span);
      for (auto& ex : chunker_examples(doc, spans, Gazetteer::bundled()))
        chunker_ex.push_back(std::move(ex));
      for (auto& ex : event_examples(doc, rec.event_tokens))
        event_ex.push_back(std::move(ex));
      gold_docs.push_back(record_gold(rec, lexicon));
    }

    ModelSet m;
    m.chunker = perceptron::train(chunker_ex, bio_labels(), 5, 1);
    m.events = perceptron::train(event_ex, event_labels(), 5, 2);
    m.temprel = train_temprel(gold_docs, 5, 3, 1, false).models;
    return m;
  }();
  return models;
}

}  // namespace

TEST_CASE("save and load round-trips a model directory") {
  const auto dir = std::filesystem::temp_directory_path() /
                   ("tempus_models." + std::to_string(::getpid()));
  save_models(tiny_models(), dir.string());

  for (const char* name : {"chunker.model", "events.model", "ee.model",
                           "et.model", "temprob.tsv"}) {
    CAPTURE(name);
    CHECK(std::filesystem::exists(dir / name));
  }

  const ModelSet back = load_models(dir.string());
  CHECK(back.chunker.labels() == tiny_models().chunker.labels());
  CHECK(back.events.labels() == tiny_models().events.labels());
  CHECK(back.temprel.ee.labels() == tiny_models().temprel.ee.labels());
  CHECK(back.temprel.et.labels() == tiny_models().temprel.et.labels());
  CHECK(back.temprel.priors.size() == tiny_models().temprel.priors.size());

  std::filesystem::remove_all(dir);
  CHECK_THROWS_AS(load_models(dir.string()), std::runtime_error);
}

TEST_CASE("annotate produces a consistent annotated document") {
  const auto& lexicon = preprocess::Lexicon::bundled();
  const AnnotatedDocument ad = annotate(
      "d1",
      "The police arrested the suspect on Monday. Prosecutors charged him. "
      "The judge freed him.",
      parse_document_time("2018-05-15"), tiny_models(), lexicon);

  CHECK(ad.doc.id == "d1");
  CHECK(!ad.doc.tokens.empty());
  CHECK(ad.timeline_error.empty());
  ad.graph.validate();
  CHECK(ilp::check_consistency(ad.graph, ilp::CompositionTable::standard())
            .empty());
  // Every group member must be a real event node.
  for (const auto& group : ad.timeline.groups)
    for (const int id : group.events) CHECK(ad.graph.is_event(id));
}

TEST_CASE("annotation JSON carries the full schema") {
  const auto& lexicon = preprocess::Lexicon::bundled();
  const AnnotatedDocument ad =
      annotate("d2", "The police arrested the suspect on Monday.",
               parse_document_time("2018-05-15"), tiny_models(), lexicon);
  const std::string text = annotation_to_json(ad);
  CHECK(text.back() == '\n');

  const auto j = nlohmann::json::parse(text);
  CHECK(j["schema_version"] == 1);
  CHECK(j["id"] == "d2");
  CHECK(j["dct"] == "2018-05-15");
  CHECK(j["text"].get<std::string>().find("arrested") != std::string::npos);
  CHECK(j.contains("timexes"));
  CHECK(j.contains("events"));
  CHECK(j.contains("ee_edges"));
  CHECK(j.contains("et_edges"));
  CHECK(j.contains("timeline"));
  for (const auto& e : j["events"]) {
    CHECK(e.contains("id"));
    CHECK(e.contains("token"));
    CHECK(e.contains("lemma"));
    CHECK(e.contains("begin"));
    CHECK(e.contains("end"));
  }
  for (const auto& t : j["timexes"]) {
    CHECK(t.contains("type"));
    CHECK(t.contains("value"));
  }
  if (!j["timeline"].is_null()) CHECK(j["timeline"]["schema_version"] == 1);
}

TEST_CASE("annotate works without a document time") {
  const auto& lexicon = preprocess::Lexicon::bundled();
  const AnnotatedDocument ad = annotate(
      "d3", "The police arrested the suspect.", std::nullopt, tiny_models(),
      lexicon);
  const auto j = nlohmann::json::parse(annotation_to_json(ad));
  CHECK(j["dct"] == "");
}

TEST_CASE("empty text annotates to an empty record") {
  const auto& lexicon = preprocess::Lexicon::bundled();
  const AnnotatedDocument ad = annotate("d4", "", parse_document_time("2018-05-15"),
                                        tiny_models(), lexicon);
  CHECK(ad.doc.tokens.empty());
  CHECK(ad.graph.node_count() == 0);
  CHECK(ad.timeline.groups.empty());
  const auto j = nlohmann::json::parse(annotation_to_json(ad));
  CHECK(j["events"].empty());
  CHECK(j["timexes"].empty());
}
