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

#include "tempus/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "tempus/calendar.hpp"
#include "tempus/events.hpp"
#include "tempus/ilp.hpp"
#include "tempus/util.hpp"

namespace tempus {
namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;
using preprocess::is_auxiliary_lemma;
using preprocess::is_modal_lemma;
using preprocess::is_reporting_lemma;
using preprocess::Lexicon;

[[noreturn]] void fail(const std::string& what, std::uint64_t line) {
  throw FormatError(what, line);
}

const json& field(const json& obj, const char* key, std::uint64_t line) {
  const auto it = obj.find(key);
  if (it == obj.end()) fail(std::string("record is missing \"") + key + "\"", line);
  return *it;
}

DocumentRecord decode_record(const json& j, std::uint64_t line) {
  if (!j.is_object()) fail("record is not a JSON object", line);
  DocumentRecord rec;
  rec.id = field(j, "id", line).get<std::string>();
  rec.text = field(j, "text", line).get<std::string>();
  rec.dct = field(j, "dct", line).get<std::string>();
  if (!rec.dct.empty() && !parse_document_time(rec.dct))
    fail("dct \"" + rec.dct + "\" is not a date", line);

  const json& gold = field(j, "gold", line);
  for (const json& t : field(gold, "timexes", line)) {
    GoldTimex gt;
    gt.span.start = field(t, "begin", line).get<std::size_t>();
    gt.span.end = field(t, "end", line).get<std::size_t>();
    if (gt.span.start >= gt.span.end || gt.span.end > rec.text.size())
      fail("timex span out of range", line);
    const auto type = timex_type_from_name(field(t, "type", line).get<std::string>());
    if (!type) fail("unknown timex type", line);
    gt.type = *type;
    gt.value = field(t, "value", line).get<std::string>();
    rec.timexes.push_back(std::move(gt));
  }
  for (const json& e : field(gold, "events", line)) {
    const int token = e.get<int>();
    if (token < 0) fail("negative event token index", line);
    if (!rec.event_tokens.empty() && token <= rec.event_tokens.back())
      fail("event tokens are not strictly increasing", line);
    rec.event_tokens.push_back(token);
  }
  const int num_events = static_cast<int>(rec.event_tokens.size());
  const int num_timexes = static_cast<int>(rec.timexes.size());
  for (const json& e : field(gold, "ee", line)) {
    GoldEe edge;
    edge.e1 = field(e, "e1", line).get<int>();
    edge.e2 = field(e, "e2", line).get<int>();
    if (edge.e1 < 0 || edge.e2 >= num_events || edge.e1 >= edge.e2)
      fail("ee edge endpoints out of range", line);
    const auto label = ee_relation_from_name(field(e, "label", line).get<std::string>());
    if (!label) fail("unknown ee label", line);
    edge.label = *label;
    rec.ee_edges.push_back(edge);
  }
  for (const json& e : field(gold, "et", line)) {
    GoldEt edge;
    edge.event = field(e, "event", line).get<int>();
    edge.timex = field(e, "timex", line).get<int>();
    if (edge.event < 0 || edge.event >= num_events || edge.timex < 0 ||
        edge.timex >= num_timexes)
      fail("et edge endpoints out of range", line);
    const auto label = et_relation_from_name(field(e, "label", line).get<std::string>());
    if (!label) fail("unknown et label", line);
    edge.label = *label;
    rec.et_edges.push_back(edge);
  }
  return rec;
}

}  // namespace

std::vector<DocumentRecord> parse_corpus(const std::string& text) {
  std::vector<DocumentRecord> records;
  std::uint64_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::size_t end = nl == std::string::npos ? text.size() : nl;
    ++line_no;
    if (end > pos) {
      const json j = json::parse(text.begin() + static_cast<std::ptrdiff_t>(pos),
                                 text.begin() + static_cast<std::ptrdiff_t>(end),
                                 nullptr, /*allow_exceptions=*/false);
      if (j.is_discarded()) fail("line is not valid JSON", line_no);
      try {
        records.push_back(decode_record(j, line_no));
      } catch (const json::exception& e) {
        fail(std::string("bad record: ") + e.what(), line_no);
      }
    }
    if (nl == std::string::npos) break;
    pos = nl + 1;
  }
  return records;
}

std::vector<DocumentRecord> read_corpus(const std::string& path) {
  return parse_corpus(read_file(path));
}

std::string corpus_to_jsonl(const std::vector<DocumentRecord>& records) {
  std::string out;
  for (const DocumentRecord& rec : records) {
    ordered_json gold;
    gold["timexes"] = ordered_json::array();
    for (const GoldTimex& t : rec.timexes)
      gold["timexes"].push_back(ordered_json{{"begin", t.span.start},
                                             {"end", t.span.end},
                                             {"type", std::string(timex_type_name(t.type))},
                                             {"value", t.value}});
    gold["events"] = rec.event_tokens;
    gold["ee"] = ordered_json::array();
    for (const GoldEe& e : rec.ee_edges)
      gold["ee"].push_back(ordered_json{
          {"e1", e.e1}, {"e2", e.e2}, {"label", std::string(ee_relation_name(e.label))}});
    gold["et"] = ordered_json::array();
    for (const GoldEt& e : rec.et_edges)
      gold["et"].push_back(ordered_json{{"event", e.event},
                                        {"timex", e.timex},
                                        {"label", std::string(et_relation_name(e.label))}});
    ordered_json j;
    j["id"] = rec.id;
    j["text"] = rec.text;
    j["dct"] = rec.dct;
    j["gold"] = std::move(gold);
    out += j.dump();
    out += '\n';
  }
  return out;
}

void write_corpus(const std::vector<DocumentRecord>& records, const std::string& path) {
  atomic_write_file(path, corpus_to_jsonl(records));
}

Document record_document(const DocumentRecord& rec, const Lexicon& lexicon) {
  std::optional<DocumentTime> dct;
  if (!rec.dct.empty()) {
    dct = parse_document_time(rec.dct);
    if (!dct) throw std::invalid_argument("record " + rec.id + " has an unparseable dct");
  }
  return preprocess::make_document(rec.id, rec.text, dct, lexicon);
}

std::vector<TimexMention> record_timexes(const DocumentRecord& rec) {
  std::vector<TimexMention> out;
  out.reserve(rec.timexes.size());
  for (const GoldTimex& t : rec.timexes) {
    TimexMention m;
    m.span = t.span;
    m.type = t.type;
    m.value = t.value;
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<EventMention> record_events(const DocumentRecord& rec, const Document& doc) {
  std::vector<EventMention> out;
  out.reserve(rec.event_tokens.size());
  for (int token : rec.event_tokens) {
    if (token < 0 || token >= static_cast<int>(doc.tokens.size()))
      throw std::invalid_argument("record " + rec.id + " marks an event outside the document");
    EventMention e;
    e.token_index = token;
    e.lemma = doc.tokens[static_cast<std::size_t>(token)].lemma;
    out.push_back(std::move(e));
  }
  return out;
}

TempRelGoldDoc record_gold(const DocumentRecord& rec, const Lexicon& lexicon) {
  TempRelGoldDoc gold;
  gold.doc = record_document(rec, lexicon);
  gold.events = record_events(rec, gold.doc);
  gold.timexes = record_timexes(rec);
  for (const GoldEe& e : rec.ee_edges) gold.ee[{e.e1, e.e2}] = e.label;
  for (const GoldEt& e : rec.et_edges) gold.et[{e.event, e.timex}] = e.label;
  return gold;
}

// ---------------------------------------------------------------------------
// Generator.
// ---------------------------------------------------------------------------

namespace {

struct VerbForm {
  const char* past;
  const char* lemma;
};

constexpr VerbForm kTransitive[] = {
    {"approved", "approve"}, {"adopted", "adopt"},    {"rejected", "reject"},
    {"signed", "sign"},      {"launched", "launch"},  {"suspended", "suspend"},
    {"reviewed", "review"},  {"endorsed", "endorse"}, {"drafted", "draft"},
    {"blocked", "block"},    {"amended", "amend"},    {"ratified", "ratify"},
};
constexpr VerbForm kIntransitive[] = {
    {"resigned", "resign"}, {"collapsed", "collapse"},   {"recovered", "recover"},
    {"expanded", "expand"}, {"merged", "merge"},         {"protested", "protest"},
    {"surged", "surge"},    {"stabilized", "stabilize"}, {"retreated", "retreat"},
    {"rallied", "rally"},   {"fell", "fall"},            {"rose", "rise"},
};
constexpr const char* kInstitutions[] = {"senate", "board",  "ministry", "committee",
                                         "council", "agency", "bank",     "union",
                                         "court",   "parliament"};
constexpr const char* kPluralSubjects[] = {"investors", "regulators", "analysts",
                                           "farmers",   "workers",    "officials",
                                           "lawmakers", "traders"};
constexpr const char* kMassNouns[] = {"prices", "demand", "exports", "losses"};
constexpr const char* kObjects[] = {"bill",   "measure", "merger", "contract", "proposal",
                                    "budget", "plan",    "deal",   "treaty",   "tariff"};
constexpr const char* kIngModifiers[] = {"rising", "growing", "mounting", "falling"};
constexpr const char* kAlarmVerbs[] = {"alarmed", "worried", "unsettled"};
constexpr const char* kProgressives[] = {"rising", "falling", "recovering", "improving"};
constexpr const char* kMeetingSubjects[] = {"committee", "board", "council"};
constexpr const char* kModalAux[] = {"could", "might", "would"};
constexpr const char* kModalVerbs[] = {"revise", "delay", "oppose", "reconsider"};
constexpr const char* kModalObjects[] = {"forecast", "vote", "timetable", "framework"};
constexpr const char* kQuoteAux[] = {"will", "must", "should"};
constexpr const char* kQuoteVerbs[] = {"act", "wait", "respond", "adjust"};
constexpr const char* kQuotePronouns[] = {"we", "they"};
constexpr const char* kSpeakers[] = {"minister", "governor", "spokesman", "chairman"};
constexpr const char* kMonthNames[] = {"january",   "february", "march",    "april",
                                       "may",       "june",     "july",     "august",
                                       "september", "october",  "november", "december"};
constexpr const char* kWeekdayNames[] = {"monday", "tuesday",  "wednesday", "thursday",
                                         "friday", "saturday", "sunday"};
constexpr const char* kCountWords[] = {"two", "three", "four", "five",
                                       "six", "seven", "eight", "nine"};
constexpr const char* kDurationUnits[] = {"days", "weeks", "months", "years"};
constexpr char kDurationCodes[] = {'D', 'W', 'M', 'Y'};

template <std::size_t N>
const char* pick(Rng& rng, const char* const (&table)[N]) {
  return table[rng.below(N)];
}

template <std::size_t N>
const VerbForm& pick(Rng& rng, const VerbForm (&table)[N]) {
  return table[rng.below(N)];
}

// Second draw from the same table, nudged off `first` to avoid the worst
// repetitions ("approved the bill before ... approved the bill").
template <std::size_t N>
const VerbForm& pick_other(Rng& rng, const VerbForm (&table)[N], const VerbForm& first) {
  std::size_t i = rng.below(N);
  if (table[i].past == first.past) i = (i + 1) % N;
  return table[i];
}

template <std::size_t N>
const char* pick_other(Rng& rng, const char* const (&table)[N], const char* first) {
  std::size_t i = rng.below(N);
  if (table[i] == first) i = (i + 1) % N;
  return table[i];
}

std::string cap(std::string_view w) {
  std::string out(w);
  if (!out.empty())
    out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  return out;
}

// Accumulates the document text and reports where each word starts, so the
// sentence templates can record gold spans as they write.
class DocBuilder {
 public:
  std::size_t word(std::string_view w) {
    if (!text_.empty() && !attach_) text_ += ' ';
    attach_ = false;
    const std::size_t at = text_.size();
    text_ += w;
    return at;
  }
  // Attaches to the previous token, as "," "." and closing quotes do.
  std::size_t punct(std::string_view p) {
    const std::size_t at = text_.size();
    text_ += p;
    return at;
  }
  void open_quote() {
    word("\"");
    attach_ = true;
  }
  std::size_t end() const { return text_.size(); }
  std::string take() { return std::move(text_); }

 private:
  std::string text_;
  bool attach_ = false;
};

struct PendingEvent {
  std::size_t offset = 0;  // character offset of the verb
  long long time = 0;      // latent timestamp
};

// Per-document working state shared by the sentence emitters.
struct Gen {
  Rng& rng;
  DocBuilder b;
  std::vector<PendingEvent> events;
  std::vector<GoldTimex> timexes;
  long long min_t = 0;
  long long max_t = 0;
  bool have_time = false;

  void event(std::size_t offset, long long t) {
    events.push_back({offset, t});
    if (!have_time) {
      min_t = max_t = t;
      have_time = true;
    } else {
      min_t = std::min(min_t, t);
      max_t = std::max(max_t, t);
    }
  }
};

GoldTimex emit_full_date(Gen& g) {
  const int year = static_cast<int>(g.rng.range(1995, 2020));
  const int month = static_cast<int>(g.rng.range(1, 12));
  const int day = static_cast<int>(g.rng.range(1, 28));
  char buf[16];
  GoldTimex t;
  t.type = TimexType::Date;
  const std::size_t start = g.b.word(cap(kMonthNames[month - 1]));
  std::snprintf(buf, sizeof buf, "%d", day);
  g.b.word(buf);
  g.b.punct(",");
  std::snprintf(buf, sizeof buf, "%d", year);
  g.b.word(buf);
  t.span = {start, g.b.end()};
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", year, month, day);
  t.value = buf;
  return t;
}

GoldTimex emit_month_year(Gen& g) {
  const int year = static_cast<int>(g.rng.range(1995, 2020));
  const int month = static_cast<int>(g.rng.range(1, 12));
  char buf[16];
  GoldTimex t;
  t.type = TimexType::Date;
  const std::size_t start = g.b.word(cap(kMonthNames[month - 1]));
  std::snprintf(buf, sizeof buf, "%d", year);
  g.b.word(buf);
  t.span = {start, g.b.end()};
  std::snprintf(buf, sizeof buf, "%04d-%02d", year, month);
  t.value = buf;
  return t;
}

GoldTimex emit_year(Gen& g) {
  const int year = static_cast<int>(g.rng.range(1995, 2020));
  char buf[8];
  std::snprintf(buf, sizeof buf, "%d", year);
  GoldTimex t;
  t.type = TimexType::Date;
  const std::size_t start = g.b.word(buf);
  t.span = {start, g.b.end()};
  t.value = buf;
  return t;
}

GoldTimex emit_duration(Gen& g) {
  const int count = static_cast<int>(g.rng.range(2, 9));
  const std::size_t unit = g.rng.below(4);
  GoldTimex t;
  t.type = TimexType::Duration;
  const std::size_t start = g.b.word(kCountWords[count - 2]);
  g.b.word(kDurationUnits[unit]);
  t.span = {start, g.b.end()};
  char buf[8];
  std::snprintf(buf, sizeof buf, "P%d%c", count, kDurationCodes[unit]);
  t.value = buf;
  return t;
}

GoldTimex emit_set(Gen& g) {
  const std::size_t wd = g.rng.below(7);
  GoldTimex t;
  t.type = TimexType::Set;
  const std::size_t start = g.b.word("every");
  g.b.word(cap(kWeekdayNames[wd]));
  t.span = {start, g.b.end()};
  char buf[16];
  std::snprintf(buf, sizeof buf, "XXXX-WXX-%d", static_cast<int>(wd) + 1);
  t.value = buf;
  return t;
}

// "On March 5, 2004," / "In March 1998," / "In 1998,"
void emit_prefix_timex(Gen& g, bool at_start) {
  const double r = g.rng.real();
  if (r < 0.4) {
    g.b.word(at_start ? "On" : "on");
    g.timexes.push_back(emit_full_date(g));
  } else if (r < 0.7) {
    g.b.word(at_start ? "In" : "in");
    g.timexes.push_back(emit_month_year(g));
  } else {
    g.b.word(at_start ? "In" : "in");
    g.timexes.push_back(emit_year(g));
  }
  g.b.punct(",");
}

void emit_suffix_timex(Gen& g) {
  const double r = g.rng.real();
  if (r < 0.35) {
    g.b.word("on");
    g.timexes.push_back(emit_full_date(g));
  } else if (r < 0.55) {
    g.b.word("in");
    g.timexes.push_back(emit_month_year(g));
  } else if (r < 0.75) {
    g.b.word("in");
    g.timexes.push_back(emit_year(g));
  } else {
    g.b.word("for");
    g.timexes.push_back(emit_duration(g));
  }
}

// "The senate" or "Investors".
void emit_subject(Gen& g, bool at_start) {
  if (g.rng.chance(0.55)) {
    g.b.word(at_start ? "The" : "the");
    g.b.word(pick(g.rng, kInstitutions));
  } else {
    const char* s = pick(g.rng, kPluralSubjects);
    g.b.word(at_start ? cap(s) : std::string(s));
  }
}

void emit_one_event(Gen& g, bool at_start, long long base) {
  const double r = g.rng.real();
  if (r >= 0.90) {
    // "The committee met every Monday." -- carries its own timex.
    g.b.word(at_start ? "The" : "the");
    g.b.word(pick(g.rng, kMeetingSubjects));
    const std::size_t off = g.b.word("met");
    g.timexes.push_back(emit_set(g));
    g.event(off, base);
    return;
  }
  const bool prefix = g.rng.chance(0.25);
  if (prefix) {
    emit_prefix_timex(g, at_start);
    at_start = false;
  }
  std::size_t off;
  if (r < 0.50) {
    emit_subject(g, at_start);
    const VerbForm& v = pick(g.rng, kTransitive);
    off = g.b.word(v.past);
    g.b.word("the");
    g.b.word(pick(g.rng, kObjects));
  } else if (r < 0.70) {
    emit_subject(g, at_start);
    off = g.b.word(pick(g.rng, kIntransitive).past);
  } else if (r < 0.82) {
    // "Rising prices alarmed regulators."
    const char* ing = pick(g.rng, kIngModifiers);
    g.b.word(at_start ? cap(ing) : std::string(ing));
    g.b.word(pick(g.rng, kMassNouns));
    off = g.b.word(pick(g.rng, kAlarmVerbs));
    g.b.word(pick(g.rng, kPluralSubjects));
  } else {
    // "Prices were rising."
    const char* mass = pick(g.rng, kMassNouns);
    g.b.word(at_start ? cap(mass) : std::string(mass));
    g.b.word("were");
    off = g.b.word(pick(g.rng, kProgressives));
  }
  g.event(off, base);
  if (!prefix && g.rng.chance(0.25)) emit_suffix_timex(g);
}

void emit_two_events(Gen& g, bool at_start, long long base) {
  const bool prefix = g.rng.chance(0.2);
  if (prefix) {
    emit_prefix_timex(g, at_start);
    at_start = false;
  }
  const double r = g.rng.real();
  std::size_t off1 = 0, off2 = 0;
  long long t1 = base, t2 = base;
  if (r < 0.70) {
    // Two transitive clauses glued by an ordering connective.
    const VerbForm& v1 = pick(g.rng, kTransitive);
    const VerbForm& v2 = pick_other(g.rng, kTransitive, v1);
    const char* o1 = pick(g.rng, kObjects);
    const char* o2 = pick_other(g.rng, kObjects, o1);
    emit_subject(g, at_start);
    off1 = g.b.word(v1.past);
    g.b.word("the");
    g.b.word(o1);
    if (r < 0.20) {
      g.b.word("before");
      emit_subject(g, false);
      t2 = base + 1;
    } else if (r < 0.35) {
      g.b.word("after");
      emit_subject(g, false);
      t1 = base + 1;
    } else if (r < 0.55) {
      g.b.word("and");  // same subject carries on
      t2 = base + 1;
    } else {
      g.b.punct(",");
      g.b.word("then");
      t2 = base + 1;
    }
    off2 = g.b.word(v2.past);
    g.b.word("the");
    g.b.word(o2);
  } else if (r < 0.80) {
    // "The bank collapsed as prices fell."
    const VerbForm& v1 = pick(g.rng, kIntransitive);
    const VerbForm& v2 = pick_other(g.rng, kIntransitive, v1);
    emit_subject(g, at_start);
    off1 = g.b.word(v1.past);
    g.b.word("as");
    g.b.word(pick(g.rng, kMassNouns));
    off2 = g.b.word(v2.past);
  } else if (r < 0.90) {
    // "The senate approved the bill while investors protested."
    const VerbForm& v1 = pick(g.rng, kTransitive);
    const VerbForm& v2 = pick(g.rng, kIntransitive);
    emit_subject(g, at_start);
    off1 = g.b.word(v1.past);
    g.b.word("the");
    g.b.word(pick(g.rng, kObjects));
    g.b.word("while");
    g.b.word(pick(g.rng, kPluralSubjects));
    off2 = g.b.word(v2.past);
  } else {
    // "Investors protested when the court blocked the merger."
    const VerbForm& v1 = pick(g.rng, kIntransitive);
    const VerbForm& v2 = pick(g.rng, kTransitive);
    emit_subject(g, at_start);
    off1 = g.b.word(v1.past);
    g.b.word("when");
    g.b.word("the");
    g.b.word(pick(g.rng, kInstitutions));
    off2 = g.b.word(v2.past);
    g.b.word("the");
    g.b.word(pick(g.rng, kObjects));
  }
  g.event(off1, t1);
  g.event(off2, t2);
  if (!prefix && g.rng.chance(0.15)) emit_suffix_timex(g);
}

// Event-free filler. Returns true when the sentence closed itself (the
// quotation owns its final period).
bool emit_distractor(Gen& g, bool at_start) {
  if (g.rng.chance(0.5)) {
    // 'The minister said, "We will act."'
    g.b.word(at_start ? "The" : "the");
    g.b.word(pick(g.rng, kSpeakers));
    g.b.word("said");
    g.b.punct(",");
    g.b.open_quote();
    g.b.word(cap(pick(g.rng, kQuotePronouns)));
    g.b.word(pick(g.rng, kQuoteAux));
    g.b.word(pick(g.rng, kQuoteVerbs));
    g.b.punct(".");
    g.b.punct("\"");
    return true;
  }
  // "The ministry could revise the forecast."
  g.b.word(at_start ? "The" : "the");
  g.b.word(pick(g.rng, kInstitutions));
  g.b.word(pick(g.rng, kModalAux));
  g.b.word(pick(g.rng, kModalVerbs));
  g.b.word("the");
  g.b.word(pick(g.rng, kModalObjects));
  return false;
}

// The event layer's target rule, restated over raw tokens: only verbs count;
// auxiliaries, modals and reporting verbs never do; a verb inside quotes,
// right after a modal, or within two tokens of a reporting verb is demoted;
// an -ing form keeps its eventuality only with "be" in front.
bool gold_event_token(const Document& doc, const std::vector<char>& quoted, int i) {
  const Token& t = doc.tokens[static_cast<std::size_t>(i)];
  if (t.pos != Pos::Verb) return false;
  if (is_auxiliary_lemma(t.lemma) || is_modal_lemma(t.lemma) || is_reporting_lemma(t.lemma))
    return false;
  if (quoted[static_cast<std::size_t>(i)]) return false;
  const auto [begin, end] = doc.sentences[static_cast<std::size_t>(t.sentence_index)];
  (void)end;
  if (i - 1 >= begin && is_modal_lemma(doc.tokens[static_cast<std::size_t>(i - 1)].lemma))
    return false;
  for (int back = 1; back <= 2; ++back)
    if (i - back >= begin &&
        is_reporting_lemma(doc.tokens[static_cast<std::size_t>(i - back)].lemma))
      return false;
  const std::string lowered = to_lower(t.surface);
  if (lowered.size() > 4 && lowered.ends_with("ing")) {
    const bool be_before =
        i - 1 >= begin && doc.tokens[static_cast<std::size_t>(i - 1)].lemma == "be";
    if (!be_before) return false;
  }
  return true;
}

DocumentRecord gen_document(Rng& rng, int number, const Lexicon& lexicon) {
  Gen g{rng, {}, {}, {}, 0, 0, false};
  DocumentRecord rec;
  char buf[32];
  std::snprintf(buf, sizeof buf, "gen-%04d", number);
  rec.id = buf;
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", static_cast<int>(rng.range(1995, 2020)),
                static_cast<int>(rng.range(1, 12)), static_cast<int>(rng.range(1, 28)));
  rec.dct = buf;

  const int n_sent = static_cast<int>(rng.range(2, 5));
  const bool with_background = n_sent >= 3 && rng.chance(0.3);
  std::vector<char> sign_link;  // sentence opens with an ordering marker
  int prev_events = 0;
  long long prev_single = 0;

  for (int s = 0; s < n_sent; ++s) {
    const bool is_background = with_background && s == n_sent - 1;
    int kind;  // 0 one event, 1 two events, 2 no event
    if (s == 0) {
      kind = rng.chance(0.6) ? 0 : 1;
    } else if (is_background) {
      kind = 0;
    } else {
      const double r = rng.real();
      kind = r < 0.55 ? 0 : (r < 0.85 ? 1 : 2);
    }

    enum { kNone, kLater, kEarlier, kMeanwhile, kSeparately } marker = kNone;
    if (is_background) {
      marker = kSeparately;
    } else if (s > 0 && kind != 2 && prev_events > 0) {
      const double r = rng.real();
      if (r < 0.25)
        marker = kLater;
      else if (r < 0.40)
        marker = kEarlier;
      else if (r < 0.65 && prev_events == 1 && kind == 0)
        marker = kMeanwhile;  // only ever links two single-event sentences
    }
    sign_link.push_back(marker == kLater || marker == kEarlier || marker == kMeanwhile);

    long long base;
    if (!g.have_time)
      base = 0;
    else if (marker == kEarlier)
      base = g.min_t - 2;  // room for a "Y after X" pair below the minimum
    else if (marker == kMeanwhile)
      base = prev_single;
    else
      base = g.max_t + 1;

    bool at_start = true;
    if (marker == kLater) {
      g.b.word("Later");
    } else if (marker == kEarlier) {
      g.b.word("Earlier");
    } else if (marker == kMeanwhile) {
      g.b.word("Meanwhile");
    } else if (marker == kSeparately) {
      g.b.word("Separately");
    }
    if (marker != kNone) {
      g.b.punct(",");
      at_start = false;
    }

    const std::size_t events_before = g.events.size();
    bool closed = false;
    if (kind == 2)
      closed = emit_distractor(g, at_start);
    else if (kind == 1)
      emit_two_events(g, at_start, base);
    else
      emit_one_event(g, at_start, base);
    if (!closed) g.b.punct(".");

    prev_events = static_cast<int>(g.events.size() - events_before);
    if (prev_events == 1) prev_single = g.events.back().time;
  }

  rec.text = g.b.take();
  rec.timexes = std::move(g.timexes);

  const Document doc = record_document(rec, lexicon);
  for (const PendingEvent& ev : g.events) {
    int found = -1;
    for (int i = 0; i < static_cast<int>(doc.tokens.size()); ++i) {
      if (doc.tokens[static_cast<std::size_t>(i)].span.start == ev.offset) {
        found = i;
        break;
      }
    }
    if (found < 0) throw std::logic_error(rec.id + ": generator lost an event token");
    rec.event_tokens.push_back(found);
  }

  // The intended events must be exactly what the extraction rule recovers,
  // otherwise the corpus would teach the event model to contradict itself.
  const std::vector<char> quoted = quoted_flags(doc);
  std::vector<int> by_rule;
  for (int i = 0; i < static_cast<int>(doc.tokens.size()); ++i)
    if (gold_event_token(doc, quoted, i)) by_rule.push_back(i);
  if (by_rule != rec.event_tokens)
    throw std::logic_error(rec.id + ": generated events disagree with the extraction rule");

  const std::vector<EventMention> events = record_events(rec, doc);
  const std::vector<TimexMention> timexes = record_timexes(rec);
  const TempRelCandidates cands = temprel_candidates(doc, events, timexes, 1);

  for (const auto& [i, j] : cands.ee) {
    const int si = doc.sentence_of(events[static_cast<std::size_t>(i)].token_index);
    const int sj = doc.sentence_of(events[static_cast<std::size_t>(j)].token_index);
    EeRelation label = EeRelation::Vague;
    if (si == sj || sign_link[static_cast<std::size_t>(std::max(si, sj))]) {
      const long long a = g.events[static_cast<std::size_t>(i)].time;
      const long long b = g.events[static_cast<std::size_t>(j)].time;
      label = a < b ? EeRelation::Before : a > b ? EeRelation::After : EeRelation::Equal;
    }
    rec.ee_edges.push_back({i, j, label});
  }

  for (const auto& [e, t] : cands.et) {
    const TimexMention& tm = timexes[static_cast<std::size_t>(t)];
    EtRelation label = EtRelation::NotEqual;
    if (tm.type == TimexType::Date) {
      const auto [tb, te] = token_range(doc, tm.span);
      const int et_tok = events[static_cast<std::size_t>(e)].token_index;
      if (doc.sentence_of(et_tok) == doc.sentence_of(tb)) {
        const int dist = et_tok < tb ? tb - et_tok : et_tok >= te ? et_tok - (te - 1) : 0;
        bool boundary = false;
        const int lo = et_tok < tb ? et_tok + 1 : te;
        const int hi = et_tok < tb ? tb : et_tok;
        for (int k = lo; k < hi; ++k)
          if (is_order_connective(doc.tokens[static_cast<std::size_t>(k)].lemma))
            boundary = true;
        if (dist <= 4 && !boundary) label = EtRelation::Equal;
      }
    }
    rec.et_edges.push_back({e, t, label});
  }

  // Belt and braces: the emitted relations must satisfy their own closure.
  TemporalGraph graph;
  graph.events = events;
  graph.timexes = timexes;
  assign_node_ids(graph.events, graph.timexes, doc);
  for (const GoldEe& e : rec.ee_edges)
    graph.ee_edges.push_back({graph.events[static_cast<std::size_t>(e.e1)].id,
                              graph.events[static_cast<std::size_t>(e.e2)].id, e.label, {}});
  for (const GoldEt& e : rec.et_edges)
    graph.et_edges.push_back({graph.events[static_cast<std::size_t>(e.event)].id,
                              graph.timexes[static_cast<std::size_t>(e.timex)].id, e.label, {}});
  if (!ilp::check_consistency(graph, ilp::CompositionTable::standard()).empty())
    throw std::logic_error(rec.id + ": generated relations violate closure");

  return rec;
}

}  // namespace

std::vector<DocumentRecord> generate_corpus(const GeneratorOptions& options,
                                            const Lexicon& lexicon) {
  if (options.num_docs < 0) throw std::invalid_argument("num_docs must be non-negative");
  Rng rng(options.seed);
  std::vector<DocumentRecord> out;
  out.reserve(static_cast<std::size_t>(options.num_docs));
  for (int i = 0; i < options.num_docs; ++i) out.push_back(gen_document(rng, i + 1, lexicon));
  return out;
}

const std::vector<std::string>& generator_vocabulary() {
  static const std::vector<std::string> vocab = [] {
    std::vector<std::string> v;
    auto add = [&v](const char* w) { v.emplace_back(w); };
    for (const VerbForm& f : kTransitive) add(f.past);
    for (const VerbForm& f : kIntransitive) add(f.past);
    for (const char* w : kInstitutions) add(w);
    for (const char* w : kPluralSubjects) add(w);
    for (const char* w : kMassNouns) add(w);
    for (const char* w : kObjects) add(w);
    for (const char* w : kIngModifiers) add(w);
    for (const char* w : kAlarmVerbs) add(w);
    for (const char* w : kProgressives) add(w);
    for (const char* w : kMeetingSubjects) add(w);
    for (const char* w : kModalAux) add(w);
    for (const char* w : kModalVerbs) add(w);
    for (const char* w : kModalObjects) add(w);
    for (const char* w : kQuoteAux) add(w);
    for (const char* w : kQuoteVerbs) add(w);
    for (const char* w : kQuotePronouns) add(w);
    for (const char* w : kSpeakers) add(w);
    for (const char* w : kMonthNames) add(w);
    for (const char* w : kWeekdayNames) add(w);
    for (const char* w : kCountWords) add(w);
    for (const char* w : kDurationUnits) add(w);
    // Template glue. Digit tokens are absent on purpose: the tagger handles
    // anything numeric without a lexicon entry.
    for (const char* w : {"the", "on", "in", "for", "every", "before", "after", "and",
                          "then", "as", "while", "when", "later", "earlier", "meanwhile",
                          "separately", "said", "were", "met"})
      add(w);
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
  }();
  return vocab;
}

}  // namespace tempus
