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

#ifndef TEMPUS_TIMEX_HPP_
#define TEMPUS_TIMEX_HPP_

#include <string>
#include <vector>

#include "tempus/core.hpp"
#include "tempus/gazetteer.hpp"
#include "tempus/normalize.hpp"
#include "tempus/perceptron.hpp"

namespace tempus {

using perceptron::Example;
using perceptron::FeatureVector;
using perceptron::SparseModel;

// BIO labels for the timex chunker, in model label order.
const std::vector<std::string>& bio_labels();  // {"B", "I", "O"}

// Token window features for the BIO classifier: surfaces, parts of speech,
// gazetteer classes and digit shapes in a +-2 window, plus adjacent-class
// conjunctions. Sentence edges pad with boundary symbols.
FeatureVector timex_token_features(const Document& doc, int index,
                                   const Gazetteer& gaz);

// Coarse character shape used as a chunker feature ("YEAR", "D2", "CLOCK",
// "SLASHED", "DECADE", "DIGITS", "MIXED", "w").
const char* token_shape(std::string_view surface);

struct ChunkerStats {
  int tokens = 0;
  int scored = 0;  // tokens that reached the classifier past the prefilter
};

struct TimexChunk {
  int begin = 0;  // token indices, half-open
  int end = 0;
};

// Trigger prefilter radius: a token is scored only if some token at most
// this many positions away (same sentence) is a gazetteer trigger.
inline constexpr int kTriggerWindow = 3;

std::vector<TimexChunk> chunk_timexes(const Document& doc, const SparseModel& model,
                                      const Gazetteer& gaz,
                                      ChunkerStats* stats = nullptr);

// Gold BIO tag indices for training, from gold character spans. Spans must
// align with token boundaries.
std::vector<int> bio_tags_from_spans(const Document& doc,
                                     const std::vector<Span>& spans);

// One training example per token that passes the same trigger prefilter used
// at inference time.
std::vector<Example> chunker_examples(const Document& doc,
                                      const std::vector<Span>& gold_spans,
                                      const Gazetteer& gaz);

struct TimexOptions {
  bool keep_unnormalized = false;  // keep chunks no rule could normalize
};

// Chunk, then normalize each chunk against the document time. Mention ids
// are left unassigned (the pipeline numbers all graph nodes together).
std::vector<TimexMention> annotate_timexes(const Document& doc,
                                           const SparseModel& model,
                                           const Normalizer& normalizer,
                                           const Gazetteer& gaz,
                                           TimexOptions options = {},
                                           ChunkerStats* stats = nullptr);

// Regex-based detector kept as the benchmark baseline: one big alternation
// scanned over the raw text with std::regex, no prefilter, no learning.
std::vector<TimexChunk> regex_baseline_chunks(const Document& doc);

}  // namespace tempus

#endif  // TEMPUS_TIMEX_HPP_
