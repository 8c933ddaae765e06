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

#ifndef MISUB_DATASET_H_
#define MISUB_DATASET_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "misub/matrix.h"

namespace misub {

// Labelled samples stored column-wise: features is d x N, one column per
// sample. Labels are dense in [0, C) and every class occurs at least once.
class Dataset {
 public:
  Dataset() = default;
  // Validates the label invariants; throws ErrorKind::kData on violation.
  Dataset(Matrix features, std::vector<int> labels,
          std::vector<std::string> class_names,
          std::vector<std::string> feature_names = {});

  const Matrix& features() const { return features_; }
  const std::vector<int>& labels() const { return labels_; }
  const std::vector<std::string>& class_names() const { return class_names_; }
  const std::vector<std::string>& feature_names() const {
    return feature_names_;
  }

  std::size_t dim() const { return features_.rows(); }
  std::size_t size() const { return features_.cols(); }
  std::size_t num_classes() const { return class_names_.size(); }

  std::vector<std::size_t> ClassCounts() const;

  // Samples at `indices`, in that order. Classes keep their global ids, so
  // the subset may contain zero samples of some class.
  Matrix FeatureColumns(std::span<const std::size_t> indices) const;
  std::vector<int> LabelsAt(std::span<const std::size_t> indices) const;

 private:
  Matrix features_;
  std::vector<int> labels_;
  std::vector<std::string> class_names_;
  std::vector<std::string> feature_names_;
};

// Reads a header-first, comma-separated file. Every column other than
// `label_column` must be numeric. Labels are numbered in order of first
// appearance.
Dataset LoadCsv(const std::filesystem::path& path,
                const std::string& label_column);

// Writes features with 17 significant digits so that LoadCsv reproduces them
// bit-exactly. Feature columns use feature_names() or f0..f{d-1}.
void WriteCsv(const Dataset& ds, const std::filesystem::path& path,
              const std::string& label_column = "label");

struct SplitPlan {
  std::size_t repeats = 5;
  double train_fraction = 0.5;
  std::uint64_t seed = 0;
  bool stratified = true;
};

struct Split {
  std::vector<std::size_t> train;  // ascending
  std::vector<std::size_t> test;   // ascending
};

// Repeated random sub-sampling. Repeat r draws from Rng(seed, r), so a repeat
// does not depend on the others. With stratification the per-class train
// counts are allocated by largest remainder so the total is
// round(train_fraction * N) and each class is within one sample of its exact
// share; every class keeps at least one train and one test sample.
std::vector<Split> MakeSplits(const Dataset& ds, const SplitPlan& plan);

// Two-class Gaussian sample: n_per_class draws of mean_a (label 0) followed by
// n_per_class draws of mean_b (label 1), all sharing covariance `cov`.
// `cov` must be symmetric positive semi-definite.
Dataset SynthGaussian(std::size_t n_per_class, std::span<const double> mean_a,
                      std::span<const double> mean_b, const Matrix& cov,
                      std::uint64_t seed);

// Per-feature z-score parameters fitted on one matrix, applied to others.
struct Standardizer {
  std::vector<double> mean;
  std::vector<double> scale;  // 1 where the fitted stddev is zero

  static Standardizer Fit(const Matrix& x);
  Matrix Apply(const Matrix& x) const;
};

}  // namespace misub

#endif  // MISUB_DATASET_H_
