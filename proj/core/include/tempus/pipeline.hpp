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

#ifndef TEMPUS_PIPELINE_HPP_
#define TEMPUS_PIPELINE_HPP_

#include <optional>
#include <string>

#include "tempus/core.hpp"
#include "tempus/preprocess.hpp"
#include "tempus/temprel.hpp"
#include "tempus/timeline.hpp"
#include "tempus/timex.hpp"

namespace tempus {

// The learned models and the prior table as one bundle. On disk a model
// directory holds chunker.model, events.model, ee.model, et.model and
// temprob.tsv.
struct ModelSet {
  SparseModel chunker;
  SparseModel events;
  TempRelModels temprel;
};

// Throws std::runtime_error (or FormatError) when any piece is missing or
// malformed.
ModelSet load_models(const std::string& dir);

// Creates the directory if needed; each file is written atomically.
void save_models(const ModelSet& models, const std::string& dir);

struct PipelineOptions {
  InferenceOptions inference;
  TimexOptions timex;
};

// A fully annotated document. When the predicted relations order the
// timeline groups cyclically, the timeline stays empty and timeline_error
// says why; the graph itself is still usable.
struct AnnotatedDocument {
  Document doc;
  TemporalGraph graph;
  Timeline timeline;
  std::string timeline_error;  // empty on success
};

AnnotatedDocument annotate(std::string id, std::string text,
                           std::optional<DocumentTime> dct, const ModelSet& models,
                           const preprocess::Lexicon& lexicon,
                           const PipelineOptions& options = {});

// The whole annotation as JSON (schema_version 1): mentions with character
// spans, relation edges with label distributions, and the timeline (null
// plus timeline_error when it could not be built).
std::string annotation_to_json(const AnnotatedDocument& ad);

}  // namespace tempus

#endif  // TEMPUS_PIPELINE_HPP_
