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

#ifndef TEMPUS_PREPROCESS_HPP_
#define TEMPUS_PREPROCESS_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tempus/core.hpp"

namespace tempus::preprocess {

// Word list backing the POS tagger and lemmatizer. Entries come from a TSV
// file (surface<TAB>lemma<TAB>POS, one per line, lowercase surfaces); lookups
// of unknown words fall back to suffix rules, so tagging is total.
class Lexicon {
 public:
  struct Entry {
    std::string lemma;
    Pos pos = Pos::Noun;
  };

  static Lexicon load(const std::string& path);
  // Loads data/lexicon.tsv from the source tree or the installed share dir.
  static const Lexicon& bundled();

  void add(std::string surface, std::string lemma, Pos pos);
  const Entry* lookup(std::string_view lower_surface) const;
  bool contains(std::string_view lower_surface) const { return lookup(lower_surface) != nullptr; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::string, Entry> entries_;
};

// Closed-class word helpers shared by the feature extractors.
bool is_auxiliary_lemma(std::string_view lemma);
bool is_modal_lemma(std::string_view lemma);
bool is_reporting_lemma(std::string_view lemma);

// Splits text into tokens with spans and surfaces only. Punctuation becomes
// separate single-character tokens, except periods that belong to known
// abbreviations ("Feb.", "Dr.", initials) and punctuation inside a word
// ("14:30", "o'clock", "02/03/1998").
std::vector<Token> tokenize(std::string_view text);

// Assigns sentence indices and returns [begin, end) token ranges. A boundary
// follows each '.', '!' or '?' token (plus any closing quotes), except
// between two digit tokens. Abbreviation periods never reach this stage
// because the tokenizer keeps them attached.
std::vector<std::pair<int, int>> split_sentences(std::vector<Token>& tokens);

// Fills lemma and POS for every token: digits -> NUM, punctuation -> PUNCT,
// lexicon entries as-is, otherwise suffix rules (-ed, -ing, -s, -ies, -ly)
// with NOUN as the last resort.
void pos_and_lemma(std::vector<Token>& tokens, const Lexicon& lexicon);

// Runs the full chain and assembles a Document.
Document make_document(std::string id, std::string text, std::optional<DocumentTime> dct,
                       const Lexicon& lexicon);

}  // namespace tempus::preprocess

#endif  // TEMPUS_PREPROCESS_HPP_
