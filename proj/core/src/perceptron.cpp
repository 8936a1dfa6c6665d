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

#include "tempus/perceptron.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <numeric>
#include <stdexcept>

namespace tempus::perceptron {

void FeatureVector::finalize() {
  std::sort(entries_.begin(), entries_.end());
  std::size_t out = 0;
  for (std::size_t i = 0; i < entries_.size();) {
    std::uint64_t id = entries_[i].first;
    double value = 0.0;
    while (i < entries_.size() && entries_[i].first == id) value += entries_[i++].second;
    entries_[out++] = {id, value};
  }
  entries_.resize(out);
}

SparseModel::SparseModel(std::vector<std::string> labels)
    : labels_(std::move(labels)),
      weights_(labels_.size()),
      averaged_(labels_.size()) {}

int SparseModel::label_index(std::string_view name) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == name) return static_cast<int>(i);
  return -1;
}

namespace {

double dot(const WeightMap& w, const FeatureVector& fv) {
  double s = 0.0;
  for (const auto& [id, value] : fv.entries()) {
    auto it = w.find(id);
    if (it != w.end()) s += it->second * value;
  }
  return s;
}

}  // namespace

std::vector<double> SparseModel::score(const FeatureVector& fv) const {
  std::vector<double> scores(labels_.size(), 0.0);
  for (std::size_t l = 0; l < averaged_.size(); ++l) scores[l] = dot(averaged_[l], fv);
  return scores;
}

std::vector<double> SparseModel::score_raw(const FeatureVector& fv) const {
  std::vector<double> scores(labels_.size(), 0.0);
  for (std::size_t l = 0; l < weights_.size(); ++l) scores[l] = dot(weights_[l], fv);
  return scores;
}

int SparseModel::argmax(const std::vector<double>& scores) const {
  int best = 0;
  for (int l = 1; l < static_cast<int>(scores.size()); ++l)
    if (scores[static_cast<std::size_t>(l)] > scores[static_cast<std::size_t>(best)]) best = l;
  return best;
}

std::vector<double> softmax(const std::vector<double>& scores) {
  std::vector<double> p(scores.size(), 0.0);
  if (scores.empty()) return p;
  double mx = *std::max_element(scores.begin(), scores.end());
  double z = 0.0;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    p[i] = std::exp(scores[i] - mx);
    z += p[i];
  }
  for (double& v : p) v /= z;
  return p;
}

// --- serialization ---------------------------------------------------------
//
// Layout (all integers little-endian):
//   magic "TPSM0001"
//   u32 label_count, then per label: u32 byte_length, bytes
//   u32 epochs, u64 seed, u64 example_count
//   per label: u64 n, then n * (u64 feature_id, f64 weight), ids ascending
//   per label: same shape for the averaged weights

namespace {

constexpr char kMagic[8] = {'T', 'P', 'S', 'M', '0', '0', '0', '1'};

class Writer {
 public:
  void u32(std::uint32_t v) { raw(&v, 4); }
  void u64(std::uint64_t v) { raw(&v, 8); }
  void f64(double v) { raw(&v, 8); }
  void bytes(const void* p, std::size_t n) { raw(p, n); }
  std::string take() { return std::move(buf_); }

 private:
  void raw(const void* p, std::size_t n) {
    buf_.append(static_cast<const char*>(p), n);
  }
  std::string buf_;
};

class Reader {
 public:
  explicit Reader(std::string data) : data_(std::move(data)) {}

  std::uint32_t u32() { return static_cast<std::uint32_t>(fixed(4)); }
  std::uint64_t u64() { return fixed(8); }
  double f64() {
    std::uint64_t bits = fixed(8);
    double v;
    std::memcpy(&v, &bits, 8);
    return v;
  }
  std::string str(std::size_t n) {
    need(n);
    std::string s = data_.substr(pos_, n);
    pos_ += n;
    return s;
  }
  std::uint64_t offset() const { return pos_; }
  bool at_end() const { return pos_ == data_.size(); }

 private:
  std::uint64_t fixed(std::size_t n) {
    need(n);
    std::uint64_t v = 0;
    std::memcpy(&v, data_.data() + pos_, n);
    pos_ += n;
    return v;
  }
  void need(std::size_t n) {
    if (pos_ + n > data_.size()) throw FormatError("model file truncated", pos_);
  }
  std::string data_;
  std::size_t pos_ = 0;
};

void write_weight_map(Writer& w, const WeightMap& m) {
  std::vector<std::pair<std::uint64_t, double>> sorted(m.begin(), m.end());
  std::sort(sorted.begin(), sorted.end());
  w.u64(sorted.size());
  for (const auto& [id, weight] : sorted) {
    w.u64(id);
    w.f64(weight);
  }
}

WeightMap read_weight_map(Reader& r) {
  std::uint64_t n = r.u64();
  WeightMap m;
  m.reserve(n);
  std::uint64_t prev = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    std::uint64_t id = r.u64();
    if (i > 0 && id <= prev) throw FormatError("feature ids out of order", r.offset() - 8);
    prev = id;
    double weight = r.f64();
    if (weight != 0.0) m.emplace(id, weight);
  }
  return m;
}

}  // namespace

void SparseModel::save(const std::string& path) const {
  Writer w;
  w.bytes(kMagic, sizeof kMagic);
  w.u32(static_cast<std::uint32_t>(labels_.size()));
  for (const std::string& l : labels_) {
    w.u32(static_cast<std::uint32_t>(l.size()));
    w.bytes(l.data(), l.size());
  }
  w.u32(meta_.epochs);
  w.u64(meta_.seed);
  w.u64(meta_.example_count);
  for (const WeightMap& m : weights_) write_weight_map(w, m);
  for (const WeightMap& m : averaged_) write_weight_map(w, m);
  atomic_write_file(path, w.take());
}

SparseModel SparseModel::load(const std::string& path) {
  Reader r(read_file(path));
  std::string magic = r.str(sizeof kMagic);
  if (std::memcmp(magic.data(), kMagic, sizeof kMagic) != 0)
    throw FormatError("bad model magic", 0);
  std::uint32_t nlabels = r.u32();
  if (nlabels == 0 || nlabels > 1024) throw FormatError("implausible label count", r.offset() - 4);
  std::vector<std::string> labels;
  labels.reserve(nlabels);
  for (std::uint32_t i = 0; i < nlabels; ++i) {
    std::uint32_t len = r.u32();
    if (len > 4096) throw FormatError("implausible label length", r.offset() - 4);
    labels.push_back(r.str(len));
  }
  SparseModel model(std::move(labels));
  model.meta_.epochs = r.u32();
  model.meta_.seed = r.u64();
  model.meta_.example_count = r.u64();
  for (std::uint32_t l = 0; l < nlabels; ++l) model.weights_[l] = read_weight_map(r);
  for (std::uint32_t l = 0; l < nlabels; ++l) model.averaged_[l] = read_weight_map(r);
  if (!r.at_end()) throw FormatError("trailing bytes after model", r.offset());
  return model;
}

// --- training ---------------------------------------------------------------

Trainer::Trainer(std::vector<std::string> labels)
    : labels_(std::move(labels)), cells_(labels_.size()) {
  if (labels_.empty()) throw std::invalid_argument("trainer needs at least one label");
}

std::vector<double> Trainer::score_raw(const FeatureVector& fv) const {
  std::vector<double> scores(labels_.size(), 0.0);
  for (std::size_t l = 0; l < cells_.size(); ++l) {
    double s = 0.0;
    for (const auto& [id, value] : fv.entries()) {
      auto it = cells_[l].find(id);
      if (it != cells_[l].end()) s += it->second.w * value;
    }
    scores[l] = s;
  }
  return scores;
}

int Trainer::predict_raw(const FeatureVector& fv) const {
  std::vector<double> scores = score_raw(fv);
  int best = 0;
  for (int l = 1; l < static_cast<int>(scores.size()); ++l)
    if (scores[static_cast<std::size_t>(l)] > scores[static_cast<std::size_t>(best)]) best = l;
  return best;
}

void Trainer::apply(int label, const FeatureVector& fv, double direction) {
  auto& cells = cells_[static_cast<std::size_t>(label)];
  for (const auto& [id, value] : fv.entries()) {
    Cell& c = cells[id];
    // Catch the accumulator up to the previous presentation, then update so
    // the new weight counts from presentation time_ onward.
    c.acc += c.w * static_cast<double>(time_ - 1 - c.last);
    c.last = time_ - 1;
    c.w += direction * value;
  }
}

void Trainer::step(const FeatureVector& fv, int gold, int predicted) {
  if (gold < 0 || gold >= static_cast<int>(labels_.size()))
    throw std::invalid_argument("gold label out of range");
  ++time_;
  if (gold != predicted) {
    ++mistakes_;
    apply(gold, fv, +1.0);
    apply(predicted, fv, -1.0);
  }
}

SparseModel Trainer::finalize(TrainingMeta meta) {
  SparseModel model(std::move(labels_));
  model.meta() = meta;
  const double total = static_cast<double>(time_ ? time_ : 1);
  for (std::size_t l = 0; l < cells_.size(); ++l) {
    for (auto& [id, cell] : cells_[l]) {
      cell.acc += cell.w * static_cast<double>(time_ - cell.last);
      if (cell.w != 0.0) model.weights()[l].emplace(id, cell.w);
      double avg = cell.acc / total;
      if (avg != 0.0) model.averaged()[l].emplace(id, avg);
    }
  }
  return model;
}

SparseModel train(const std::vector<Example>& examples, std::vector<std::string> labels,
                  int epochs, std::uint64_t seed, bool shuffle) {
  if (examples.empty()) throw std::invalid_argument("no training examples");
  if (epochs < 1) throw std::invalid_argument("epochs must be >= 1");
  for (const Example& ex : examples) {
    if (ex.label < 0 || ex.label >= static_cast<int>(labels.size()))
      throw std::invalid_argument("example label out of range");
  }

  Trainer trainer(labels);
  std::vector<std::size_t> order(examples.size());
  std::iota(order.begin(), order.end(), 0);
  Rng rng(seed);
  for (int epoch = 0; epoch < epochs; ++epoch) {
    if (shuffle) rng.shuffle(order);
    for (std::size_t idx : order) {
      const Example& ex = examples[idx];
      trainer.step(ex.features, ex.label, trainer.predict_raw(ex.features));
    }
  }
  TrainingMeta meta;
  meta.epochs = static_cast<std::uint32_t>(epochs);
  meta.seed = seed;
  meta.example_count = examples.size();
  return trainer.finalize(meta);
}

}  // namespace tempus::perceptron
