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

#ifndef TEMPUS_EVENTS_HPP_
#define TEMPUS_EVENTS_HPP_

#include <string>
#include <vector>

#include "tempus/core.hpp"
#include "tempus/perceptron.hpp"

namespace tempus {

using perceptron::Example;
using perceptron::FeatureVector;
using perceptron::SparseModel;

// The extractor keeps only events on the document's main storyline: verbs,
// minus auxiliaries, reported speech, quoted content, modal hypotheticals
// and gerunds without their own auxiliary.
const std::vector<std::string>& event_labels();  // {"event", "none"}

// Only verb tokens are candidates; everything else is never an event.
bool event_candidate(const Document& doc, int index);

FeatureVector event_token_features(const Document& doc, int index);

// True for tokens inside double quotes (quote characters toggle the state
// within a sentence; the closing quote itself counts as inside).
std::vector<char> quoted_flags(const Document& doc);

std::vector<Example> event_examples(const Document& doc,
                                    const std::vector<int>& gold_event_tokens);

// Mention ids are left unassigned; the pipeline numbers graph nodes.
std::vector<EventMention> annotate_events(const Document& doc,
                                          const SparseModel& model);

}  // namespace tempus

#endif  // TEMPUS_EVENTS_HPP_
