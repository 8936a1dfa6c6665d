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

#ifndef TEMPUS_PERCEPTRON_HPP_
#define TEMPUS_PERCEPTRON_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tempus/util.hpp"

namespace tempus::perceptron {

// Sparse feature vector. Feature strings are hashed to 64-bit ids with
// FNV-1a (see fnv1a64); collisions are accepted. Indicator features carry
// value 1.0; duplicate ids are merged by summing when finalized.
class FeatureVector {
 public:
  void add(std::string_view feature, double value = 1.0) { add_id(fnv1a64(feature), value); }
  void add_id(std::uint64_t id, double value) { entries_.emplace_back(id, value); }

  // Sorts by id and merges duplicates by summing values.
  void finalize();

  const std::vector<std::pair<std::uint64_t, double>>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

 private:
  std::vector<std::pair<std::uint64_t, double>> entries_;
};

struct TrainingMeta {
  std::uint32_t epochs = 0;
  std::uint64_t seed = 0;
  std::uint64_t example_count = 0;
};

using WeightMap = std::unordered_map<std::uint64_t, double>;

// Multiclass averaged perceptron weights. `weights` holds the final raw
// vector; `averaged` is the mean of the weight vector after every example
// presentation, which is what scoring uses.
class SparseModel {
 public:
  SparseModel() = default;
  explicit SparseModel(std::vector<std::string> labels);

  const std::vector<std::string>& labels() const { return labels_; }
  int num_labels() const { return static_cast<int>(labels_.size()); }
  int label_index(std::string_view name) const;

  // Raw scores per label from the averaged weights: dot(averaged[l], fv).
  std::vector<double> score(const FeatureVector& fv) const;
  // Same but over the non-averaged weights (used mid-training).
  std::vector<double> score_raw(const FeatureVector& fv) const;

  int argmax(const std::vector<double>& scores) const;
  int predict(const FeatureVector& fv) const { return argmax(score(fv)); }

  // Versioned little-endian binary container; layout in save()'s definition.
  // Load errors carry the byte offset of the failure.
  void save(const std::string& path) const;
  static SparseModel load(const std::string& path);

  std::vector<WeightMap>& weights() { return weights_; }
  const std::vector<WeightMap>& weights() const { return weights_; }
  std::vector<WeightMap>& averaged() { return averaged_; }
  const std::vector<WeightMap>& averaged() const { return averaged_; }
  TrainingMeta& meta() { return meta_; }
  const TrainingMeta& meta() const { return meta_; }

 private:
  std::vector<std::string> labels_;
  std::vector<WeightMap> weights_;
  std::vector<WeightMap> averaged_;
  TrainingMeta meta_;
};

// Numerically stable softmax: p(l) = exp(s_l - max) / sum exp(s_k - max).
std::vector<double> softmax(const std::vector<double>& scores);

struct Example {
  FeatureVector features;
  int label = 0;
};

// Incremental trainer with lazily maintained averages. Exists separately
// from train() so inference-driven (structured) updates can share the
// averaging machinery: callers score with current weights, decide on a
// predicted label themselves, then call step().
class Trainer {
 public:
  explicit Trainer(std::vector<std::string> labels);

  std::vector<double> score_raw(const FeatureVector& fv) const;
  int predict_raw(const FeatureVector& fv) const;

  // One example presentation: advances the averaging clock and applies the
  // standard update (+fv on gold, -fv on predicted) when predicted != gold.
  void step(const FeatureVector& fv, int gold, int predicted);

  std::uint64_t presentations() const { return time_; }
  std::uint64_t mistakes() const { return mistakes_; }

  // Finishes averaging and emits the model. The trainer is spent afterwards.
  SparseModel finalize(TrainingMeta meta);

 private:
  struct Cell {
    double w = 0.0;
    double acc = 0.0;       // sum of w over presentations 1..last
    std::uint64_t last = 0;
  };
  void apply(int label, const FeatureVector& fv, double direction);

  std::vector<std::string> labels_;
  std::vector<std::unordered_map<std::uint64_t, Cell>> cells_;
  std::uint64_t time_ = 0;
  std::uint64_t mistakes_ = 0;
};

// Standard multiclass training: `epochs` passes over the examples, shuffled
// per epoch from `seed` when `shuffle` is set. Throws std::invalid_argument
// on an empty example list or an out-of-range label.
SparseModel train(const std::vector<Example>& examples, std::vector<std::string> labels,
                  int epochs, std::uint64_t seed, bool shuffle = true);

}  // namespace tempus::perceptron

#endif  // TEMPUS_PERCEPTRON_HPP_
