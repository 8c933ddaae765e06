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

#include "misub/synth_demo.h"

#include <sstream>

#include "text.h"

namespace misub {

ExperimentConfig SynthDemoConfig(std::uint64_t seed, std::size_t bins) {
  ExperimentConfig cfg;
  cfg.synth = SynthSpec{};
  cfg.transforms = {TransformKind::kPca};
  cfg.selectors = {Selector::kConventional, Selector::kMi};
  cfg.fractions = {0.5};
  cfg.classifiers = {ClassifierKind::kNaiveBayes};
  cfg.bins = bins;
  cfg.repeats = 5;
  cfg.train_fraction = 0.5;
  cfg.seed = seed;
  return cfg;
}

SynthDemoResult RunSynthDemo(std::uint64_t seed, std::size_t bins) {
  SynthDemoResult result;
  result.config = SynthDemoConfig(seed, bins);
  const ExperimentConfig& cfg = result.config;
  const Dataset ds = LoadExperimentData(cfg);
  result.report = RunExperiment(cfg, ds, "synthetic");

  // Inspect the first repeat: same split and fit as the runner's repeat 0.
  const SplitPlan plan{.repeats = 1,
                       .train_fraction = cfg.train_fraction,
                       .seed = cfg.seed,
                       .stratified = cfg.stratified};
  const Split split = MakeSplits(ds, plan).front();
  const Matrix x_train = ds.FeatureColumns(split.train);
  const std::vector<int> y_train = ds.LabelsAt(split.train);
  FitOptions options;
  options.bins = cfg.bins;
  const FittedTransform fit =
      FitTransform(TransformKind::kPca, x_train, y_train, options);

  result.candidate_mi_bits = fit.ranking.mi_bits;
  result.label_entropy_bits = Entropy(y_train, ds.num_classes());
  const std::size_t k = SubspaceDim(cfg.fractions.front(), ds.dim());
  const Matrix all = fit.Prepare(ds.features());

  for (Selector selector : cfg.selectors) {
    const std::size_t base = fit.Select(selector, k).front();
    const double mi = fit.ranking.mi_bits[base];
    const CellResult& cell =
        result.report.cells.at({TransformKind::kPca, selector, 0,
                                ClassifierKind::kNaiveBayes});
    result.selectors.push_back(
        {selector, base, mi,
         FanoLowerBound(result.label_entropy_bits, mi, ds.num_classes()),
         cell.mean_percent});
    const auto direction = fit.basis.bases.row(base);
    for (std::size_t j = 0; j < ds.size(); ++j) {
      double p = 0.0;
      for (std::size_t i = 0; i < ds.dim(); ++i) p += direction[i] * all(i, j);
      result.projections.push_back({j, selector, p, ds.labels()[j]});
    }
  }
  return result;
}

std::string ProjectionCsv(const SynthDemoResult& result) {
  std::ostringstream out;
  out << "sample_id,selector,projection,label\n";
  for (const ProjectionRow& row : result.projections) {
    out << row.sample_id << ',' << ToString(row.selector) << ','
        << internal::FormatDouble(row.projection) << ',' << row.label << '\n';
  }
  return out.str();
}

std::string SynthSummary(const SynthDemoResult& result) {
  std::ostringstream out;
  out << "label_entropy_bits," << internal::FormatFixed(result.label_entropy_bits, 6)
      << '\n';
  for (std::size_t i = 0; i < result.candidate_mi_bits.size(); ++i) {
    out << "candidate_mi_bits[" << i << "],"
        << internal::FormatFixed(result.candidate_mi_bits[i], 6) << '\n';
  }
  out << "selector,base_index,mi_bits,fano_lower_bound,fano_vacuous,"
         "mean_accuracy_percent\n";
  for (const SelectorSummary& s : result.selectors) {
    out << ToString(s.selector) << ',' << s.base_index << ','
        << internal::FormatFixed(s.mi_bits, 6) << ','
        << internal::FormatFixed(s.fano.value, 6) << ','
        << (s.fano.vacuous ? "yes" : "no") << ','
        << internal::FormatFixed(s.mean_accuracy_percent, 2) << '\n';
  }
  return out.str();
}

}  // namespace misub
