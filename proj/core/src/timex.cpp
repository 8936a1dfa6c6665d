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

#include "tempus/timex.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <stdexcept>

#include "tempus/util.hpp"

namespace tempus {
namespace {

constexpr int kTagB = 0;
constexpr int kTagI = 1;
constexpr int kTagO = 2;

// Tokens a trigger window is computed over must stay inside the sentence.
std::pair<int, int> sentence_range(const Document& doc, int index) {
  const int s = doc.tokens[static_cast<std::size_t>(index)].sentence_index;
  return doc.sentences[static_cast<std::size_t>(s)];
}

std::vector<char> trigger_flags(const Document& doc, const Gazetteer& gaz) {
  std::vector<char> flags(doc.tokens.size(), 0);
  for (std::size_t i = 0; i < doc.tokens.size(); ++i)
    flags[i] = gaz.is_trigger(to_lower(doc.tokens[i].surface)) ? 1 : 0;
  return flags;
}

bool passes_prefilter(const Document& doc, const std::vector<char>& triggers,
                      int index) {
  const auto [begin, end] = sentence_range(doc, index);
  const int lo = std::max(begin, index - kTriggerWindow);
  const int hi = std::min(end - 1, index + kTriggerWindow);
  for (int j = lo; j <= hi; ++j)
    if (triggers[static_cast<std::size_t>(j)]) return true;
  return false;
}

}  // namespace

const std::vector<std::string>& bio_labels() {
  static const std::vector<std::string> labels = {"B", "I", "O"};
  return labels;
}

const char* token_shape(std::string_view surface) {
  bool digit = false, alpha = false, colon = false, slash = false;
  for (char c : surface) {
    if (std::isdigit(static_cast<unsigned char>(c))) digit = true;
    else if (std::isalpha(static_cast<unsigned char>(c))) alpha = true;
    else if (c == ':') colon = true;
    else if (c == '/') slash = true;
  }
  if (!digit) return "w";
  if (colon) return "CLOCK";
  if (slash) return "SLASHED";
  if (!alpha) {
    if (Gazetteer::year_like(surface)) return "YEAR";
    return surface.size() <= 2 ? "D2" : "DIGITS";
  }
  if (surface.size() == 5 && surface.back() == 's' &&
      Gazetteer::year_like(surface.substr(0, 4)))
    return "DECADE";
  return "MIXED";
}

FeatureVector timex_token_features(const Document& doc, int index,
                                   const Gazetteer& gaz) {
  const auto [begin, end] = sentence_range(doc, index);
  auto word = [&](int i) -> std::string {
    if (i < begin) return "<s>";
    if (i >= end) return "</s>";
    return to_lower(doc.tokens[static_cast<std::size_t>(i)].surface);
  };
  auto gaz_of = [&](int i) -> GazClass {
    if (i < begin || i >= end) return GazClass::None;
    return gaz.word_class(word(i));
  };

  FeatureVector fv;
  fv.add("bias");
  char key[96];
  for (int off = -2; off <= 2; ++off) {
    const int i = index + off;
    std::snprintf(key, sizeof key, "w[%d]=%s", off, word(i).c_str());
    fv.add(key);
    if (i >= begin && i < end) {
      std::snprintf(key, sizeof key, "p[%d]=%s", off,
                    std::string(pos_name(doc.tokens[static_cast<std::size_t>(i)].pos)).c_str());
      fv.add(key);
      std::snprintf(key, sizeof key, "s[%d]=%s", off, token_shape(word(i)));
      fv.add(key);
    }
    if (const GazClass c = gaz_of(i); c != GazClass::None) {
      std::snprintf(key, sizeof key, "g[%d]=%s", off, gaz_class_name(c));
      fv.add(key);
    }
  }
  std::snprintf(key, sizeof key, "gg[-1,0]=%s|%s", gaz_class_name(gaz_of(index - 1)),
                gaz_class_name(gaz_of(index)));
  fv.add(key);
  std::snprintf(key, sizeof key, "gg[0,1]=%s|%s", gaz_class_name(gaz_of(index)),
                gaz_class_name(gaz_of(index + 1)));
  fv.add(key);
  fv.finalize();
  return fv;
}

std::vector<TimexChunk> chunk_timexes(const Document& doc, const SparseModel& model,
                                      const Gazetteer& gaz, ChunkerStats* stats) {
  const int n = static_cast<int>(doc.tokens.size());
  const std::vector<char> triggers = trigger_flags(doc, gaz);

  std::vector<int> tags(static_cast<std::size_t>(n), kTagO);
  for (int i = 0; i < n; ++i) {
    if (stats) ++stats->tokens;
    if (!passes_prefilter(doc, triggers, i)) continue;
    if (stats) ++stats->scored;
    tags[static_cast<std::size_t>(i)] = model.predict(timex_token_features(doc, i, gaz));
  }

  // Repair: I without a live chunk opens one. Chunks never cross sentences.
  std::vector<TimexChunk> chunks;
  for (int i = 0; i < n; ++i) {
    if (tags[static_cast<std::size_t>(i)] == kTagO) continue;
    const bool continues =
        tags[static_cast<std::size_t>(i)] == kTagI && !chunks.empty() &&
        chunks.back().end == i &&
        doc.tokens[static_cast<std::size_t>(i - 1)].sentence_index ==
            doc.tokens[static_cast<std::size_t>(i)].sentence_index;
    if (continues)
      ++chunks.back().end;
    else
      chunks.push_back({i, i + 1});
  }
  return chunks;
}

std::vector<int> bio_tags_from_spans(const Document& doc,
                                     const std::vector<Span>& spans) {
  std::vector<int> tags(doc.tokens.size(), kTagO);
  for (const Span& span : spans) {
    bool first = true;
    for (std::size_t i = 0; i < doc.tokens.size(); ++i) {
      const Span& t = doc.tokens[i].span;
      if (t.start >= span.start && t.end <= span.end) {
        tags[i] = first ? kTagB : kTagI;
        first = false;
      }
    }
    if (first)
      throw std::invalid_argument("gold span does not cover any token");
  }
  return tags;
}

std::vector<Example> chunker_examples(const Document& doc,
                                      const std::vector<Span>& gold_spans,
                                      const Gazetteer& gaz) {
  const std::vector<int> tags = bio_tags_from_spans(doc, gold_spans);
  const std::vector<char> triggers = trigger_flags(doc, gaz);
  std::vector<Example> examples;
  for (int i = 0; i < static_cast<int>(doc.tokens.size()); ++i) {
    if (!passes_prefilter(doc, triggers, i)) continue;
    examples.push_back({timex_token_features(doc, i, gaz),
                        tags[static_cast<std::size_t>(i)]});
  }
  return examples;
}

std::vector<TimexMention> annotate_timexes(const Document& doc,
                                           const SparseModel& model,
                                           const Normalizer& normalizer,
                                           const Gazetteer& gaz,
                                           TimexOptions options,
                                           ChunkerStats* stats) {
  std::vector<TimexMention> mentions;
  for (const TimexChunk& chunk : chunk_timexes(doc, model, gaz, stats)) {
    const NormalizationResult norm =
        normalizer.normalize_tokens(doc.tokens, chunk.begin, chunk.end, doc.dct);
    if (!norm.matched && !options.keep_unnormalized) continue;
    TimexMention mention;
    mention.span = Span{doc.tokens[static_cast<std::size_t>(chunk.begin)].span.start,
                        doc.tokens[static_cast<std::size_t>(chunk.end - 1)].span.end};
    if (norm.matched) {
      mention.type = norm.type;
      mention.value = norm.value;
    }
    mentions.push_back(std::move(mention));
  }
  return mentions;
}

std::vector<TimexChunk> regex_baseline_chunks(const Document& doc) {
  // Deliberately naive: one alternation over the whole text, rescanned on
  // every call. Kept as the speed baseline the trigger prefilter is
  // measured against.
  static const std::regex pattern(
      R"((\b(january|february|march|april|may|june|july|august|september|october|november|december)\b( \d{1,2}(st|nd|rd|th)?)?(,? \d{4})?)|)"
      R"((\b(monday|tuesday|wednesday|thursday|friday|saturday|sunday)\b)|)"
      R"((\b\d{4}-\d{2}-\d{2}\b)|(\b\d{1,2}/\d{1,2}/\d{4}\b)|(\b\d{1,2}:\d{2}\b)|)"
      R"((\b(today|tomorrow|yesterday|tonight|noon|midnight)\b)|)"
      R"((\b(next|last|this|every|each) (week|weekend|month|year|day|decade|monday|tuesday|wednesday|thursday|friday|saturday|sunday)\b)|)"
      R"((\b(a|an|\d+|one|two|three|four|five|six|seven|eight|nine|ten|few|several) (second|minute|hour|day|week|month|year|decade)s?\b( ago| later| earlier)?)|)"
      R"((\b(daily|weekly|monthly|yearly|annually)\b)|(\b\d{4}s?\b))",
      std::regex::icase | std::regex::ECMAScript);

  std::vector<TimexChunk> chunks;
  auto begin = std::sregex_iterator(doc.text.begin(), doc.text.end(), pattern);
  for (auto it = begin; it != std::sregex_iterator(); ++it) {
    const int mb = static_cast<int>(it->position());
    const int me = mb + static_cast<int>(it->length());
    // Tokens are ordered by span; binary-search the first one overlapping.
    auto first_it = std::lower_bound(
        doc.tokens.begin(), doc.tokens.end(), static_cast<std::size_t>(mb),
        [](const Token& t, std::size_t pos) { return t.span.end <= pos; });
    int first = -1, last = -1;
    for (auto t = first_it;
         t != doc.tokens.end() && t->span.start < static_cast<std::size_t>(me); ++t) {
      if (first < 0) first = static_cast<int>(t - doc.tokens.begin());
      last = static_cast<int>(t - doc.tokens.begin());
    }
    if (first >= 0) chunks.push_back({first, last + 1});
  }
  return chunks;
}

}  // namespace tempus
