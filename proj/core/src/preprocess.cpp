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

#include "tempus/preprocess.hpp"

#include <cctype>
#include <cstring>
#include <fstream>
#include <set>

#include "tempus/util.hpp"

namespace tempus::preprocess {

namespace {

bool is_punct_char(char c) {
  return std::strchr(".,;:!?\"'()[]{}<>-", c) != nullptr;
}

bool is_word_internal_punct(char c) {
  // Kept inside a token when surrounded by non-space characters.
  return std::strchr(".,:/'-", c) != nullptr;
}

const std::set<std::string>& abbreviations() {
  static const std::set<std::string> kAbbrev = {
      "jan", "feb", "mar", "apr", "jun", "jul", "aug", "sep", "sept", "oct", "nov", "dec",
      "mon", "tue", "tues", "wed", "thu", "thur", "thurs", "fri", "sat", "sun",
      "mr", "mrs", "ms", "dr", "prof", "rev", "gen", "sen", "rep", "gov",
      "st", "mt", "no", "vs", "etc", "inc", "corp", "co", "ltd", "jr", "sr",
      "a.m", "p.m", "u.s", "u.k", "e.g", "i.e",
  };
  return kAbbrev;
}

bool keeps_trailing_period(std::string_view word_without_period) {
  if (word_without_period.size() == 1 && std::isalpha(static_cast<unsigned char>(word_without_period[0])))
    return true;  // initials like "J."
  return abbreviations().count(to_lower(word_without_period)) > 0;
}

}  // namespace

Lexicon Lexicon::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open lexicon: " + path);
  Lexicon lex;
  std::string line;
  std::uint64_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    auto cols = split(line, '\t');
    if (cols.size() != 3) throw FormatError("lexicon line needs 3 tab-separated columns", lineno);
    auto pos = pos_from_name(cols[2]);
    if (!pos) throw FormatError("unknown POS tag '" + std::string(cols[2]) + "'", lineno);
    if (cols[1].empty()) throw FormatError("empty lemma", lineno);
    lex.add(std::string(cols[0]), std::string(cols[1]), *pos);
  }
  return lex;
}

const Lexicon& Lexicon::bundled() {
  static Lexicon lex = Lexicon::load(default_data_file("lexicon.tsv"));
  return lex;
}

void Lexicon::add(std::string surface, std::string lemma, Pos pos) {
  entries_[std::move(surface)] = Entry{std::move(lemma), pos};
}

const Lexicon::Entry* Lexicon::lookup(std::string_view lower_surface) const {
  auto it = entries_.find(std::string(lower_surface));
  return it == entries_.end() ? nullptr : &it->second;
}

bool is_auxiliary_lemma(std::string_view lemma) {
  static const std::set<std::string, std::less<>> kAux = {"be", "have", "do", "will", "would",
                                                          "can", "could", "may", "might",
                                                          "shall", "should", "must"};
  return kAux.count(lemma) > 0;
}

bool is_modal_lemma(std::string_view lemma) {
  static const std::set<std::string, std::less<>> kModal = {"will", "would", "can", "could",
                                                            "may", "might", "shall", "should",
                                                            "must"};
  return kModal.count(lemma) > 0;
}

bool is_reporting_lemma(std::string_view lemma) {
  static const std::set<std::string, std::less<>> kReporting = {"say", "report", "add", "claim",
                                                                "announce", "state", "tell"};
  return kReporting.count(lemma) > 0;
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  const std::size_t n = text.size();

  auto emit = [&](std::size_t start, std::size_t end) {
    if (end <= start) return;
    Token t;
    t.span = Span{start, end};
    t.surface = std::string(text.substr(start, end - start));
    tokens.push_back(std::move(t));
  };

  while (i < n) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < n && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t end = i;

    // Peel leading punctuation.
    while (start < end && is_punct_char(text[start])) {
      emit(start, start + 1);
      ++start;
    }
    // Peel trailing punctuation, keeping abbreviation periods attached.
    std::size_t word_end = end;
    while (word_end > start && is_punct_char(text[word_end - 1])) {
      if (text[word_end - 1] == '.' &&
          keeps_trailing_period(text.substr(start, word_end - 1 - start))) {
        break;
      }
      --word_end;
    }
    emit(start, word_end);
    for (std::size_t p = word_end; p < end; ++p) emit(p, p + 1);
  }
  return tokens;
}

std::vector<std::pair<int, int>> split_sentences(std::vector<Token>& tokens) {
  std::vector<std::pair<int, int>> ranges;
  const int n = static_cast<int>(tokens.size());
  int begin = 0;
  int i = 0;
  while (i < n) {
    const std::string& s = tokens[static_cast<std::size_t>(i)].surface;
    bool terminal = (s == "." || s == "!" || s == "?");
    if (terminal && s == "." && i > 0 && i + 1 < n) {
      // Numeric guard: "27. 1998" style enumerations do not end a sentence.
      if (all_digits(tokens[static_cast<std::size_t>(i - 1)].surface) &&
          all_digits(tokens[static_cast<std::size_t>(i + 1)].surface)) {
        terminal = false;
      }
    }
    if (terminal) {
      int close = i + 1;
      while (close < n) {
        const std::string& q = tokens[static_cast<std::size_t>(close)].surface;
        if (q == "\"" || q == "'" || q == ")" || q == "]") {
          ++close;
        } else {
          break;
        }
      }
      ranges.emplace_back(begin, close);
      begin = close;
      i = close;
    } else {
      ++i;
    }
  }
  if (begin < n) ranges.emplace_back(begin, n);
  for (std::size_t r = 0; r < ranges.size(); ++r) {
    for (int t = ranges[r].first; t < ranges[r].second; ++t) {
      tokens[static_cast<std::size_t>(t)].sentence_index = static_cast<int>(r);
    }
  }
  return ranges;
}

namespace {

bool looks_numeric(std::string_view s) {
  bool has_digit = false;
  for (unsigned char c : s) {
    if (std::isdigit(c)) {
      has_digit = true;
    } else if (!is_word_internal_punct(static_cast<char>(c))) {
      return false;
    }
  }
  return has_digit;
}

bool all_punct(std::string_view s) {
  for (char c : s)
    if (!is_punct_char(c)) return false;
  return !s.empty();
}

bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

// Recovers a verb base form from an -ed/-ing stem, consulting the lexicon for
// e-restoration ("explod" -> "explode") and undoubling ("plann" -> "plan").
std::string recover_stem(const std::string& stem, const Lexicon& lexicon) {
  if (lexicon.contains(stem)) return stem;
  if (lexicon.contains(stem + "e")) return stem + "e";
  if (stem.size() >= 2 && stem[stem.size() - 1] == stem[stem.size() - 2]) {
    std::string undoubled = stem.substr(0, stem.size() - 1);
    if (lexicon.contains(undoubled)) return undoubled;
  }
  return stem;
}

}  // namespace

void pos_and_lemma(std::vector<Token>& tokens, const Lexicon& lexicon) {
  for (Token& t : tokens) {
    std::string lower = to_lower(t.surface);

    if (all_punct(lower)) {
      t.pos = Pos::Punct;
      t.lemma = lower;
      continue;
    }
    if (looks_numeric(lower)) {
      t.pos = Pos::Num;
      t.lemma = lower;
      continue;
    }
    if (const Lexicon::Entry* e = lexicon.lookup(lower)) {
      t.pos = e->pos;
      t.lemma = e->lemma;
      continue;
    }

    // Suffix rules for out-of-lexicon words.
    if (ends_with(lower, "ied") && lower.size() > 4) {
      t.pos = Pos::Verb;
      t.lemma = lower.substr(0, lower.size() - 3) + "y";
    } else if (ends_with(lower, "ied")) {
      t.pos = Pos::Verb;
      t.lemma = lower.substr(0, lower.size() - 1);  // died -> die
    } else if (ends_with(lower, "ed") && lower.size() > 3) {
      t.pos = Pos::Verb;
      t.lemma = recover_stem(lower.substr(0, lower.size() - 2), lexicon);
    } else if (ends_with(lower, "ing") && lower.size() > 4) {
      t.pos = Pos::Verb;
      t.lemma = recover_stem(lower.substr(0, lower.size() - 3), lexicon);
    } else if (ends_with(lower, "ly") && lower.size() > 3) {
      t.pos = Pos::Adv;
      t.lemma = lower;
    } else if (ends_with(lower, "ies") && lower.size() > 4) {
      std::string stem = lower.substr(0, lower.size() - 3) + "y";
      const Lexicon::Entry* e = lexicon.lookup(stem);
      t.pos = e ? e->pos : Pos::Noun;
      t.lemma = stem;
    } else if (ends_with(lower, "s") && !ends_with(lower, "ss") && lower.size() > 2) {
      std::string stem = lower.substr(0, lower.size() - 1);
      const Lexicon::Entry* e = lexicon.lookup(stem);
      if (!e && ends_with(lower, "es")) {
        std::string stem2 = lower.substr(0, lower.size() - 2);
        if (const Lexicon::Entry* e2 = lexicon.lookup(stem2)) {
          e = e2;
          stem = stem2;
        }
      }
      t.pos = e ? e->pos : Pos::Noun;
      t.lemma = e ? e->lemma : stem;
    } else {
      t.pos = Pos::Noun;
      t.lemma = lower;
    }
    if (t.lemma.empty()) t.lemma = lower;
  }
}

Document make_document(std::string id, std::string text, std::optional<DocumentTime> dct,
                       const Lexicon& lexicon) {
  Document doc;
  doc.id = std::move(id);
  doc.text = std::move(text);
  doc.tokens = tokenize(doc.text);
  doc.sentences = split_sentences(doc.tokens);
  pos_and_lemma(doc.tokens, lexicon);
  doc.dct = dct;
  return doc;
}

}  // namespace tempus::preprocess
