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

#include "misub/experiment.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "misub/classifiers.h"
#include "misub/error.h"
#include "misub/random.h"

namespace misub {

std::size_t SubspaceDim(double fraction, std::size_t d) {
  const double exact = fraction * static_cast<double>(d);
  const auto k = static_cast<std::size_t>(std::ceil(exact - 1e-9));
  return std::clamp<std::size_t>(k, 1, d);
}

double BasisDifference(std::span<const std::size_t> conv_top_k,
                       std::span<const std::size_t> mi_top_k) {
  if (conv_top_k.size() != mi_top_k.size()) {
    throw Error(ErrorKind::kShape, "basis_difference: index lists differ in "
                                   "length");
  }
  if (conv_top_k.empty()) {
    throw Error(ErrorKind::kRange, "basis_difference: k must be >= 1");
  }
  const std::set<std::size_t> conv(conv_top_k.begin(), conv_top_k.end());
  const std::set<std::size_t> mi(mi_top_k.begin(), mi_top_k.end());
  std::size_t shared = 0;
  for (std::size_t i : mi) shared += conv.count(i);
  return 100.0 * (1.0 - static_cast<double>(shared) /
                            static_cast<double>(conv_top_k.size()));
}

std::uint64_t RpSeed(std::uint64_t experiment_seed) {
  return MixSeed(experiment_seed ^ 0x5250'5250'5250'5250ULL);
}

Matrix FittedTransform::Prepare(const Matrix& x) const {
  return standardizer ? standardizer->Apply(x) : x;
}

std::vector<std::size_t> FittedTransform::Select(Selector selector,
                                                 std::size_t k) const {
  if (selector == Selector::kMi) return ranking.TopK(k);
  if (k < 1 || k > basis.size()) {
    throw Error(ErrorKind::kRange, "k out of range");
  }
  std::vector<std::size_t> first(k);
  std::iota(first.begin(), first.end(), 0);
  return first;
}

FittedTransform FitTransform(TransformKind kind, const Matrix& x_train,
                             std::span<const int> y_train,
                             const FitOptions& options) {
  FittedTransform fit;
  if (options.standardize) fit.standardizer = Standardizer::Fit(x_train);
  const Matrix x = fit.Prepare(x_train);
  const std::size_t d = x.rows();
  switch (kind) {
    case TransformKind::kDct:
      fit.basis = DctBasis(d);
      break;
    case TransformKind::kPca:
      fit.basis = PcaBasis(x);
      break;
    case TransformKind::kLda:
      fit.basis = LdaBasis(x, y_train, options.ridge);
      break;
    case TransformKind::kRp:
      fit.basis = options.fixed_basis ? *options.fixed_basis
                                        : RpBasis(d, options.rp_seed);
      break;
  }
  const std::size_t bins =
      options.bins ? options.bins : DefaultBins(x.cols());
  fit.ranking = RankBases(fit.basis, x, y_train, bins);
  return fit;
}

void Summarize(CellResult& cell) {
  const std::size_t n = cell.accuracies.size();
  if (n == 0) return;
  double sum = 0.0;
  for (double a : cell.accuracies) sum += 100.0 * a;
  cell.mean_percent = sum / static_cast<double>(n);
  double ss = 0.0;
  for (double a : cell.accuracies) {
    const double diff = 100.0 * a - cell.mean_percent;
    ss += diff * diff;
  }
  cell.stddev_percent = n > 1 ? std::sqrt(ss / static_cast<double>(n - 1)) : 0.0;
}

Dataset LoadExperimentData(const ExperimentConfig& cfg) {
  if (cfg.synth) {
    const SynthSpec& s = *cfg.synth;
    return SynthGaussian(s.n_per_class, s.mean_a, s.mean_b, s.cov,
                         s.seed.value_or(cfg.seed));
  }
  return LoadCsv(cfg.data_path, cfg.label_column);
}

ExperimentReport RunExperiment(const ExperimentConfig& cfg) {
  ValidateConfig(cfg);
  const Dataset ds = LoadExperimentData(cfg);
  return RunExperiment(cfg, ds,
                       cfg.synth ? std::string("synthetic")
                                 : cfg.data_path.filename().string());
}

ExperimentReport RunExperiment(const ExperimentConfig& cfg, const Dataset& ds,
                               const std::string& dataset_name) {
  ValidateConfig(cfg);
  const std::size_t d = ds.dim();

  ExperimentReport report;
  report.transforms = cfg.transforms;
  report.selectors = cfg.selectors;
  report.fractions = cfg.fractions;
  report.classifiers = cfg.classifiers;
  report.metadata = {.dataset = dataset_name,
                     .dim = d,
                     .samples = ds.size(),
                     .classes = ds.num_classes(),
                     .seed = cfg.seed,
                     .bins = cfg.bins,
                     .bins_used = {},
                     .repeats = cfg.repeats,
                     .train_fraction = cfg.train_fraction,
                     .standardize = cfg.standardize,
                     .timestamp = {}};

  const SplitPlan plan{.repeats = cfg.repeats,
                       .train_fraction = cfg.train_fraction,
                       .seed = cfg.seed,
                       .stratified = cfg.stratified};
  const std::vector<Split> splits = MakeSplits(ds, plan);

  // One RP draw per experiment, shared by every repeat and selector.
  std::optional<BasisSet> rp;
  if (std::find(cfg.transforms.begin(), cfg.transforms.end(),
                TransformKind::kRp) != cfg.transforms.end()) {
    rp = RpBasis(d, RpSeed(cfg.seed));
  }

  std::vector<std::size_t> dims;
  for (double f : cfg.fractions) dims.push_back(SubspaceDim(f, d));

  for (std::size_t r = 0; r < splits.size(); ++r) {
    const Split& split = splits[r];
    const Matrix x_train = ds.FeatureColumns(split.train);
    const Matrix x_test = ds.FeatureColumns(split.test);
    const std::vector<int> y_train = ds.LabelsAt(split.train);
    const std::vector<int> y_test = ds.LabelsAt(split.test);
    const std::size_t bins = cfg.bins ? cfg.bins : DefaultBins(x_train.cols());
    report.metadata.bins_used.push_back(bins);

    for (TransformKind kind : cfg.transforms) {
      auto context = [&](const Error& e) {
        return Error(e.kind(), "[" + std::string(ToString(kind)) + ", repeat " +
                                   std::to_string(r) + "] " + e.what());
      };
      try {
        const FitOptions options{
            .bins = bins,
            .ridge = cfg.ridge,
            .standardize = cfg.standardize,
            .fixed_basis = kind == TransformKind::kRp ? &*rp : nullptr,
            .rp_seed = RpSeed(cfg.seed)};
        const FittedTransform fit =
            FitTransform(kind, x_train, y_train, options);
        const Matrix train_prepared = fit.Prepare(x_train);
        const Matrix test_prepared = fit.Prepare(x_test);

        for (std::size_t fi = 0; fi < dims.size(); ++fi) {
          const std::size_t k = dims[fi];
          const auto conv = fit.Select(Selector::kConventional, k);
          const auto mi = fit.Select(Selector::kMi, k);
          DiffResult& diff = report.basis_difference[{kind, fi}];
          diff.per_repeat.push_back(BasisDifference(conv, mi));

          for (Selector selector : cfg.selectors) {
            const Matrix g = fit.basis.bases.SelectRows(
                selector == Selector::kMi ? mi : conv);
            const Matrix f_train = Project(g, train_prepared);
            const Matrix f_test = Project(g, test_prepared);
            for (ClassifierKind ck : cfg.classifiers) {
              std::vector<int> predicted;
              if (ck == ClassifierKind::kNaiveBayes) {
                predicted = GaussianNb::Fit(f_train, y_train).Predict(f_test);
              } else {
                const std::size_t neighbors =
                    std::min(cfg.knn_neighbors, f_train.cols());
                predicted =
                    Knn::Fit(f_train, y_train, neighbors).Predict(f_test);
              }
              CellResult& cell = report.cells[{kind, selector, fi, ck}];
              cell.k = k;
              cell.accuracies.push_back(Accuracy(predicted, y_test));
            }
          }
        }
      } catch (const Error& e) {
        throw context(e);
      }
    }
  }

  for (auto& [key, cell] : report.cells) Summarize(cell);
  for (auto& [key, diff] : report.basis_difference) {
    diff.mean_percent =
        std::accumulate(diff.per_repeat.begin(), diff.per_repeat.end(), 0.0) /
        static_cast<double>(diff.per_repeat.size());
  }
  return report;
}

}  // namespace misub
