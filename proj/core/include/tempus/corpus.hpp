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

#ifndef TEMPUS_CORPUS_HPP_
#define TEMPUS_CORPUS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "tempus/core.hpp"
#include "tempus/preprocess.hpp"
#include "tempus/temprel.hpp"

namespace tempus {

// Gold annotations for one document, as stored on disk. Events are token
// indices; relation edges index into the record's own event/timex lists.
struct GoldTimex {
  Span span;
  TimexType type = TimexType::Date;
  std::string value;
};

struct GoldEe {
  int e1 = 0;
  int e2 = 0;  // indices into event_tokens, e1 < e2
  EeRelation label = EeRelation::Vague;
};

struct GoldEt {
  int event = 0;
  int timex = 0;
  EtRelation label = EtRelation::NotEqual;
};

struct DocumentRecord {
  std::string id;
  std::string text;
  std::string dct;  // YYYY-MM-DD, may be empty
  std::vector<GoldTimex> timexes;
  std::vector<int> event_tokens;
  std::vector<GoldEe> ee_edges;
  std::vector<GoldEt> et_edges;
};

// Corpus files are JSONL: one record per line, shaped as
//   {"id": ..., "text": ..., "dct": ...,
//    "gold": {"timexes": [{"begin", "end", "type", "value"}, ...],
//             "events": [token, ...],
//             "ee": [{"e1", "e2", "label"}, ...],
//             "et": [{"event", "timex", "label"}, ...]}}
// Parsing throws FormatError with the 1-based line number as the offset.
std::vector<DocumentRecord> parse_corpus(const std::string& text);
std::vector<DocumentRecord> read_corpus(const std::string& path);
std::string corpus_to_jsonl(const std::vector<DocumentRecord>& records);
void write_corpus(const std::vector<DocumentRecord>& records, const std::string& path);

// Decoding back into pipeline structures. record_events and record_gold
// throw std::invalid_argument when a gold token index is not a token of the
// preprocessed document.
Document record_document(const DocumentRecord& rec, const preprocess::Lexicon& lexicon);
std::vector<TimexMention> record_timexes(const DocumentRecord& rec);
std::vector<EventMention> record_events(const DocumentRecord& rec, const Document& doc);
TempRelGoldDoc record_gold(const DocumentRecord& rec, const preprocess::Lexicon& lexicon);

// Synthetic news-wire corpus. Every document narrates a chain of events whose
// order is read off the surface: clause connectives inside a sentence
// ("before", "after", "and", "then", "as", "while", "when") and discourse
// markers at sentence starts ("Later,", "Earlier,", "Meanwhile,") carry the
// relation; unmarked sentence pairs and the closing "Separately," sentence
// are vague. Event-timex pairs are equal exactly when they share a sentence,
// sit at most four tokens apart and no connective intervenes (durations and
// sets are never equal to an event). The generator keeps an integer timestamp
// per event, so the emitted graphs are always satisfiable.
struct GeneratorOptions {
  std::uint64_t seed = 1;
  int num_docs = 100;
};

std::vector<DocumentRecord> generate_corpus(const GeneratorOptions& options,
                                            const preprocess::Lexicon& lexicon);

// Every surface form the generator can emit (lowercase, punctuation
// excluded). The bundled lexicon is expected to cover all of it.
const std::vector<std::string>& generator_vocabulary();

}  // namespace tempus

#endif  // TEMPUS_CORPUS_HPP_
