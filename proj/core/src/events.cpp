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

#include "tempus/events.hpp"

#include <algorithm>
#include <cstdio>

#include "tempus/preprocess.hpp"
#include "tempus/util.hpp"

namespace tempus {

using preprocess::is_auxiliary_lemma;
using preprocess::is_modal_lemma;
using preprocess::is_reporting_lemma;

namespace {

constexpr int kLabelEvent = 0;

const Token& tok(const Document& doc, int i) {
  return doc.tokens[static_cast<std::size_t>(i)];
}

}  // namespace

const std::vector<std::string>& event_labels() {
  static const std::vector<std::string> labels = {"event", "none"};
  return labels;
}

bool event_candidate(const Document& doc, int index) {
  return tok(doc, index).pos == Pos::Verb;
}

std::vector<char> quoted_flags(const Document& doc) {
  std::vector<char> flags(doc.tokens.size(), 0);
  int sentence = -1;
  bool inside = false;
  for (std::size_t i = 0; i < doc.tokens.size(); ++i) {
    if (doc.tokens[i].sentence_index != sentence) {
      sentence = doc.tokens[i].sentence_index;
      inside = false;
    }
    if (doc.tokens[i].surface == "\"") {
      flags[i] = 1;  // both delimiters count as quoted
      inside = !inside;
    } else {
      flags[i] = inside ? 1 : 0;
    }
  }
  return flags;
}

FeatureVector event_token_features(const Document& doc, int index) {
  const auto [begin, end] = doc.sentences[static_cast<std::size_t>(
      tok(doc, index).sentence_index)];
  auto lemma = [&](int i) -> std::string {
    if (i < begin) return "<s>";
    if (i >= end) return "</s>";
    return tok(doc, i).lemma;
  };
  auto pos_of = [&](int i) -> std::string {
    if (i < begin || i >= end) return "PAD";
    return std::string(pos_name(tok(doc, i).pos));
  };

  FeatureVector fv;
  fv.add("bias");
  char key[96];
  std::snprintf(key, sizeof key, "lemma=%s", tok(doc, index).lemma.c_str());
  fv.add(key);
  std::snprintf(key, sizeof key, "surface=%s", to_lower(tok(doc, index).surface).c_str());
  fv.add(key);
  for (int off = -2; off <= 2; ++off) {
    if (off == 0) continue;
    std::snprintf(key, sizeof key, "l[%d]=%s", off, lemma(index + off).c_str());
    fv.add(key);
    std::snprintf(key, sizeof key, "p[%d]=%s", off, pos_of(index + off).c_str());
    fv.add(key);
  }

  // Auxiliary and modal context decides whether a verb carries its own
  // eventuality ("was leaving" vs "leaving", "could leave").
  if (index - 1 >= begin) {
    const Token& prev = tok(doc, index - 1);
    if (is_auxiliary_lemma(prev.lemma)) fv.add("prev_aux");
    if (is_modal_lemma(prev.lemma)) fv.add("prev_modal");
    if (prev.lemma == "to") fv.add("prev_to");
  }
  const std::string lowered = to_lower(tok(doc, index).surface);
  if (lowered.size() > 4 && lowered.ends_with("ing")) {
    fv.add("ing_form");
    const bool be_before = index - 1 >= begin &&
                           tok(doc, index - 1).lemma == "be";
    if (!be_before) fv.add("ing_without_be");
  }

  // Reported speech: a reporting verb shortly before demotes this verb.
  for (int back = 1; back <= 2; ++back) {
    if (index - back < begin) break;
    if (is_reporting_lemma(tok(doc, index - back).lemma)) {
      fv.add("reporting_before");
      break;
    }
  }
  if (is_reporting_lemma(tok(doc, index).lemma)) fv.add("is_reporting");

  bool inside = false, quoted = false;
  for (int i = begin; i <= index; ++i) {
    if (tok(doc, i).surface == "\"") {
      if (i == index) quoted = true;
      inside = !inside;
    } else if (i == index) {
      quoted = inside;
    }
  }
  if (quoted) fv.add("quoted");

  // Nearest preceding preposition and position within the sentence.
  for (int i = index - 1; i >= begin; --i) {
    if (tok(doc, i).pos == Pos::Prep) {
      std::snprintf(key, sizeof key, "prev_prep=%s", tok(doc, i).lemma.c_str());
      fv.add(key);
      break;
    }
  }
  const int len = std::max(1, end - begin);
  const int third = std::min(2, 3 * (index - begin) / len);
  std::snprintf(key, sizeof key, "sent_pos=%d", third);
  fv.add(key);

  fv.finalize();
  return fv;
}

std::vector<Example> event_examples(const Document& doc,
                                    const std::vector<int>& gold_event_tokens) {
  std::vector<Example> examples;
  for (int i = 0; i < static_cast<int>(doc.tokens.size()); ++i) {
    if (!event_candidate(doc, i)) continue;
    const bool gold = std::find(gold_event_tokens.begin(), gold_event_tokens.end(),
                                i) != gold_event_tokens.end();
    examples.push_back({event_token_features(doc, i), gold ? kLabelEvent : 1});
  }
  return examples;
}

std::vector<EventMention> annotate_events(const Document& doc,
                                          const SparseModel& model) {
  std::vector<EventMention> events;
  for (int i = 0; i < static_cast<int>(doc.tokens.size()); ++i) {
    if (!event_candidate(doc, i)) continue;
    if (model.predict(event_token_features(doc, i)) != kLabelEvent) continue;
    EventMention event;
    event.token_index = i;
    event.lemma = tok(doc, i).lemma;
    events.push_back(std::move(event));
  }
  return events;
}

}  // namespace tempus
