// Copyright 2026 The misub Authors.
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

#ifndef MISUB_CONFIG_H_
#define MISUB_CONFIG_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "misub/classifiers.h"
#include "misub/matrix.h"
#include "misub/transforms.h"

namespace misub {

enum class Selector { kConventional, kMi };

std::string_view ToString(Selector selector);
Selector ParseSelector(std::string_view text);

// Two-class Gaussian data generated in place of a CSV file.
struct SynthSpec {
  std::size_t n_per_class = 50;
  std::vector<double> mean_a = {0.0, -1.0};
  std::vector<double> mean_b = {0.0, 1.0};
  Matrix cov = {{25.0, 0.0}, {0.0, 0.25}};
  std::optional<std::uint64_t> seed;  // defaults to the experiment seed
};

struct ExperimentConfig {
  std::filesystem::path data_path;
  std::string label_column = "label";
  std::optional<SynthSpec> synth;

  std::vector<TransformKind> transforms = {
      TransformKind::kDct, TransformKind::kLda, TransformKind::kPca,
      TransformKind::kRp};
  std::vector<Selector> selectors = {Selector::kConventional, Selector::kMi};
  std::vector<double> fractions = {0.1, 0.3, 0.5, 0.7};
  std::vector<ClassifierKind> classifiers = {ClassifierKind::kNaiveBayes,
                                             ClassifierKind::kKnn};
  std::size_t bins = 0;  // 0: DefaultBins(number of training samples)
  std::size_t repeats = 5;
  double train_fraction = 0.5;
  std::uint64_t seed = 0;
  bool stratified = true;
  bool standardize = false;
  std::optional<double> ridge;  // LDA ridge; empty: DefaultLdaRidge
  std::size_t knn_neighbors = 5;
};

// Sets one field from its textual key=value form. Keys: data, label_column,
// synth, synth_n_per_class, synth_mean_a, synth_mean_b, synth_cov (row-major),
// synth_seed, transforms, selectors, fractions, classifiers, bins, repeats,
// train_fraction, seed, stratified, standardize, ridge, knn_neighbors.
// Lists are comma-separated. Throws kConfig on unknown keys or bad values.
void ApplyConfigValue(ExperimentConfig& cfg, std::string_view key,
                      std::string_view value);

// Flat `key = value` text; `#` starts a comment. A relative `data` path is
// resolved against `base_dir`.
ExperimentConfig ParseConfig(std::string_view text,
                             const std::filesystem::path& base_dir = {});
ExperimentConfig LoadConfig(const std::filesystem::path& path);

// Throws kConfig when the configuration cannot describe an experiment.
void ValidateConfig(const ExperimentConfig& cfg);

}  // namespace misub

#endif  // MISUB_CONFIG_H_
