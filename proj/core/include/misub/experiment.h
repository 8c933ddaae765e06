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

#ifndef MISUB_EXPERIMENT_H_
#define MISUB_EXPERIMENT_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "misub/config.h"
#include "misub/dataset.h"
#include "misub/mutual_information.h"
#include "misub/transforms.h"

namespace misub {

// k = ceil(fraction * d), at least 1. A 1e-9 slack absorbs representation
// error so that 0.1 * 60 yields 6.
std::size_t SubspaceDim(double fraction, std::size_t d);

// 100 * (1 - |conv ∩ mi| / k) with set semantics. Lengths must match.
double BasisDifference(std::span<const std::size_t> conv_top_k,
                       std::span<const std::size_t> mi_top_k);

struct FitOptions {
  std::size_t bins = 0;  // 0: DefaultBins(N_train)
  std::optional<double> ridge;
  bool standardize = false;
  // RP: reuse this matrix when set, otherwise draw RpBasis(d, rp_seed).
  const BasisSet* fixed_basis = nullptr;
  std::uint64_t rp_seed = 0;
};

// Everything fitted from the training fold of one repeat for one transform.
struct FittedTransform {
  std::optional<Standardizer> standardizer;
  BasisSet basis;
  MiRanking ranking;

  // Applies the fitted standardizer (if any) to raw d x N features.
  Matrix Prepare(const Matrix& x) const;
  // Base indices chosen by `selector` for subspace size k.
  std::vector<std::size_t> Select(Selector selector, std::size_t k) const;
};

// Fits standardizer, basis and MI ranking on training data only.
FittedTransform FitTransform(TransformKind kind, const Matrix& x_train,
                             std::span<const int> y_train,
                             const FitOptions& options);

struct CellKey {
  TransformKind transform;
  Selector selector;
  std::size_t fraction_index;
  ClassifierKind classifier;

  auto operator<=>(const CellKey&) const = default;
};

struct CellResult {
  std::size_t k = 0;
  std::vector<double> accuracies;  // per repeat, in [0, 1]
  double mean_percent = 0.0;
  double stddev_percent = 0.0;  // sample stddev; 0 for a single repeat
};

struct DiffKey {
  TransformKind transform;
  std::size_t fraction_index;

  auto operator<=>(const DiffKey&) const = default;
};

struct DiffResult {
  std::vector<double> per_repeat;  // percent
  double mean_percent = 0.0;
};

struct ReportMetadata {
  std::string dataset;  // path or "synthetic"
  std::size_t dim = 0;
  std::size_t samples = 0;
  std::size_t classes = 0;
  std::uint64_t seed = 0;
  std::size_t bins = 0;  // as configured; 0 means automatic
  std::vector<std::size_t> bins_used;  // per repeat
  std::size_t repeats = 0;
  double train_fraction = 0.0;
  bool standardize = false;
  // Left empty unless the caller stamps it; reports stay reproducible.
  std::string timestamp;
};

struct ExperimentReport {
  ReportMetadata metadata;
  std::vector<TransformKind> transforms;
  std::vector<Selector> selectors;
  std::vector<double> fractions;
  std::vector<ClassifierKind> classifiers;
  std::map<CellKey, CellResult> cells;
  std::map<DiffKey, DiffResult> basis_difference;
};

// Mean and sample standard deviation (percent) of per-repeat accuracies.
void Summarize(CellResult& cell);

// Loads the configured dataset (CSV or synthetic).
Dataset LoadExperimentData(const ExperimentConfig& cfg);

ExperimentReport RunExperiment(const ExperimentConfig& cfg);
ExperimentReport RunExperiment(const ExperimentConfig& cfg, const Dataset& ds,
                               const std::string& dataset_name);

// Seed of the experiment-wide RP matrix.
std::uint64_t RpSeed(std::uint64_t experiment_seed);

}  // namespace misub

#endif  // MISUB_EXPERIMENT_H_
