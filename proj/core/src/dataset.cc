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

#include "misub/dataset.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <string_view>
#include <unordered_map>

#include "misub/error.h"
#include "misub/linalg.h"
#include "misub/random.h"
#include "text.h"

namespace misub {

using internal::FormatDouble;
using internal::ParseDouble;
using internal::SplitFields;
using internal::Trim;

Dataset::Dataset(Matrix features, std::vector<int> labels,
                 std::vector<std::string> class_names,
                 std::vector<std::string> feature_names)
    : features_(std::move(features)),
      labels_(std::move(labels)),
      class_names_(std::move(class_names)),
      feature_names_(std::move(feature_names)) {
  if (labels_.size() != features_.cols()) {
    throw Error(ErrorKind::kData,
                "dataset has " + std::to_string(features_.cols()) +
                    " samples but " + std::to_string(labels_.size()) +
                    " labels");
  }
  if (!feature_names_.empty() && feature_names_.size() != features_.rows()) {
    throw Error(ErrorKind::kData, "feature name count does not match dim");
  }
  const int num_classes = static_cast<int>(class_names_.size());
  std::vector<std::size_t> seen(class_names_.size(), 0);
  for (int label : labels_) {
    if (label < 0 || label >= num_classes) {
      throw Error(ErrorKind::kData, "label " + std::to_string(label) +
                                        " outside [0, " +
                                        std::to_string(num_classes) + ")");
    }
    ++seen[label];
  }
  for (std::size_t c = 0; c < seen.size(); ++c) {
    if (seen[c] == 0) {
      throw Error(ErrorKind::kData,
                  "class '" + class_names_[c] + "' has no samples");
    }
  }
}

std::vector<std::size_t> Dataset::ClassCounts() const {
  std::vector<std::size_t> counts(num_classes(), 0);
  for (int label : labels_) ++counts[label];
  return counts;
}

Matrix Dataset::FeatureColumns(std::span<const std::size_t> indices) const {
  return features_.SelectCols(indices);
}

std::vector<int> Dataset::LabelsAt(std::span<const std::size_t> indices) const {
  std::vector<int> out;
  out.reserve(indices.size());
  for (std::size_t i : indices) out.push_back(labels_.at(i));
  return out;
}

Dataset LoadCsv(const std::filesystem::path& path,
                const std::string& label_column) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::kIo, "cannot open '" + path.string() + "'");
  }
  std::string line;
  if (!std::getline(in, line)) {
    throw Error(ErrorKind::kData, "'" + path.string() + "' is empty");
  }
  if (line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
  const auto header_views = SplitFields(line);
  std::vector<std::string> header(header_views.begin(), header_views.end());
  const auto label_it = std::find(header.begin(), header.end(), label_column);
  if (label_it == header.end()) {
    throw Error(ErrorKind::kData, "label column '" + label_column +
                                      "' not found in '" + path.string() +
                                      "'");
  }
  const std::size_t label_index = label_it - header.begin();
  std::vector<std::string> feature_names;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (c != label_index) feature_names.push_back(header[c]);
  }
  const std::size_t d = feature_names.size();

  std::vector<std::vector<double>> columns;  // one vector per sample
  std::vector<int> labels;
  std::vector<std::string> class_names;
  std::unordered_map<std::string, int> class_ids;

  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (Trim(line).empty()) continue;
    const auto fields = SplitFields(line);
    if (fields.size() != header.size()) {
      throw Error(ErrorKind::kData,
                  "row " + std::to_string(line_number) + " has " +
                      std::to_string(fields.size()) + " fields, expected " +
                      std::to_string(header.size()));
    }
    std::vector<double> sample;
    sample.reserve(d);
    for (std::size_t c = 0; c < fields.size(); ++c) {
      if (c == label_index) continue;
      double value = 0.0;
      if (!ParseDouble(fields[c], value)) {
        throw Error(ErrorKind::kData,
                    "row " + std::to_string(line_number) + ", column '" +
                        header[c] + "': " +
                        (fields[c].empty()
                             ? std::string("blank cell")
                             : "non-numeric value '" + std::string(fields[c]) +
                                   "'"));
      }
      sample.push_back(value);
    }
    const std::string label(fields[label_index]);
    if (label.empty()) {
      throw Error(ErrorKind::kData, "row " + std::to_string(line_number) +
                                        ", column '" + label_column +
                                        "': blank label");
    }
    auto [it, inserted] =
        class_ids.emplace(label, static_cast<int>(class_names.size()));
    if (inserted) class_names.push_back(label);
    labels.push_back(it->second);
    columns.push_back(std::move(sample));
  }
  if (class_names.size() < 2) {
    throw Error(ErrorKind::kData, "'" + path.string() + "' has " +
                                      std::to_string(class_names.size()) +
                                      " class(es); at least 2 are required");
  }

  Matrix features(d, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (std::size_t i = 0; i < d; ++i) features(i, j) = columns[j][i];
  }
  return Dataset(std::move(features), std::move(labels), std::move(class_names),
                 std::move(feature_names));
}

void WriteCsv(const Dataset& ds, const std::filesystem::path& path,
              const std::string& label_column) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorKind::kIo, "cannot write '" + path.string() + "'");
  }
  for (std::size_t i = 0; i < ds.dim(); ++i) {
    out << (ds.feature_names().empty() ? "f" + std::to_string(i)
                                       : ds.feature_names()[i])
        << ',';
  }
  out << label_column << '\n';
  const Matrix& x = ds.features();
  for (std::size_t j = 0; j < ds.size(); ++j) {
    for (std::size_t i = 0; i < ds.dim(); ++i) {
      out << FormatDouble(x(i, j)) << ',';
    }
    out << ds.class_names()[ds.labels()[j]] << '\n';
  }
  if (!out) {
    throw Error(ErrorKind::kIo, "write to '" + path.string() + "' failed");
  }
}

std::vector<Split> MakeSplits(const Dataset& ds, const SplitPlan& plan) {
  if (plan.repeats < 1) {
    throw Error(ErrorKind::kConfig, "split plan needs at least one repeat");
  }
  if (!(plan.train_fraction > 0.0 && plan.train_fraction < 1.0)) {
    throw Error(ErrorKind::kConfig, "train fraction must lie in (0, 1)");
  }
  const std::size_t n = ds.size();
  if (n < 2) {
    throw Error(ErrorKind::kInsufficientData,
                "need at least 2 samples to split");
  }
  const std::size_t total_train = static_cast<std::size_t>(
      std::llround(plan.train_fraction * static_cast<double>(n)));

  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::size_t> group_train;
  if (plan.stratified) {
    const auto counts = ds.ClassCounts();
    for (std::size_t c = 0; c < counts.size(); ++c) {
      if (counts[c] < 2) {
        throw Error(ErrorKind::kData,
                    "cannot stratify: class '" + ds.class_names()[c] +
                        "' has fewer than 2 samples");
      }
    }
    if (plan.train_fraction * static_cast<double>(n) <
        static_cast<double>(counts.size())) {
      throw Error(ErrorKind::kData,
                  "cannot stratify: train_fraction * N is below the class "
                  "count");
    }
    groups.resize(counts.size());
    for (std::size_t j = 0; j < n; ++j) groups[ds.labels()[j]].push_back(j);

    // Largest-remainder allocation of total_train across classes.
    group_train.resize(counts.size());
    std::vector<double> remainder(counts.size());
    std::size_t allocated = 0;
    for (std::size_t c = 0; c < counts.size(); ++c) {
      const double exact = plan.train_fraction * static_cast<double>(counts[c]);
      group_train[c] = static_cast<std::size_t>(std::floor(exact));
      remainder[c] = exact - std::floor(exact);
      allocated += group_train[c];
    }
    std::vector<std::size_t> by_remainder(counts.size());
    std::iota(by_remainder.begin(), by_remainder.end(), 0);
    std::stable_sort(by_remainder.begin(), by_remainder.end(),
                     [&](std::size_t a, std::size_t b) {
                       return remainder[a] > remainder[b];
                     });
    for (std::size_t i = 0; allocated < total_train && i < counts.size(); ++i) {
      ++group_train[by_remainder[i]];
      ++allocated;
    }
    for (std::size_t c = 0; c < counts.size(); ++c) {
      group_train[c] = std::clamp<std::size_t>(group_train[c], 1, counts[c] - 1);
    }
  } else {
    groups.emplace_back(n);
    std::iota(groups[0].begin(), groups[0].end(), 0);
    group_train.push_back(std::clamp<std::size_t>(total_train, 1, n - 1));
  }

  std::vector<Split> splits;
  splits.reserve(plan.repeats);
  for (std::size_t r = 0; r < plan.repeats; ++r) {
    Rng rng(plan.seed, r);
    Split split;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      std::vector<std::size_t> members = groups[g];
      // Fisher-Yates with the portable generator.
      for (std::size_t i = members.size(); i > 1; --i) {
        std::swap(members[i - 1], members[rng.Below(i)]);
      }
      split.train.insert(split.train.end(), members.begin(),
                         members.begin() + group_train[g]);
      split.test.insert(split.test.end(), members.begin() + group_train[g],
                        members.end());
    }
    std::sort(split.train.begin(), split.train.end());
    std::sort(split.test.begin(), split.test.end());
    splits.push_back(std::move(split));
  }
  return splits;
}

Dataset SynthGaussian(std::size_t n_per_class, std::span<const double> mean_a,
                      std::span<const double> mean_b, const Matrix& cov,
                      std::uint64_t seed) {
  const std::size_t d = mean_a.size();
  if (mean_b.size() != d || cov.rows() != d || cov.cols() != d) {
    throw Error(ErrorKind::kShape, "synth_gaussian: means and covariance "
                                   "dimensions disagree");
  }
  if (n_per_class < 1) {
    throw Error(ErrorKind::kConfig, "synth_gaussian: n_per_class must be >= 1");
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (std::abs(cov(i, j) - cov(j, i)) >
          1e-9 * (1.0 + std::abs(cov(i, j)))) {
        throw Error(ErrorKind::kSingular, "covariance is not symmetric");
      }
    }
  }
  // Factor cov = F * F^T with F = E * sqrt(Lambda); works for singular cov.
  const EigenDecomposition eig = SymEig(cov);
  double max_abs = 0.0;
  for (double v : eig.eigenvalues) max_abs = std::max(max_abs, std::abs(v));
  Matrix factor(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    const double lambda = eig.eigenvalues[j];
    if (lambda < -1e-10 * std::max(1.0, max_abs)) {
      throw Error(ErrorKind::kSingular,
                  "covariance is not positive semi-definite (eigenvalue " +
                      std::to_string(lambda) + ")");
    }
    const double root = std::sqrt(std::max(lambda, 0.0));
    for (std::size_t i = 0; i < d; ++i) {
      factor(i, j) = eig.eigenvectors(i, j) * root;
    }
  }

  Rng rng(seed);
  const std::size_t n = 2 * n_per_class;
  Matrix x(d, n);
  std::vector<int> labels(n);
  std::vector<double> z(d);
  for (std::size_t j = 0; j < n; ++j) {
    const bool first = j < n_per_class;
    const auto mean = first ? mean_a : mean_b;
    labels[j] = first ? 0 : 1;
    for (double& v : z) v = rng.Normal();
    for (std::size_t i = 0; i < d; ++i) {
      double s = mean[i];
      for (std::size_t k = 0; k < d; ++k) s += factor(i, k) * z[k];
      x(i, j) = s;
    }
  }
  return Dataset(std::move(x), std::move(labels), {"0", "1"});
}

Standardizer Standardizer::Fit(const Matrix& x) {
  Standardizer s;
  const std::size_t n = x.cols();
  s.mean.resize(x.rows());
  s.scale.resize(x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    auto row = x.row(i);
    const double mean =
        std::accumulate(row.begin(), row.end(), 0.0) / static_cast<double>(n);
    double var = 0.0;
    for (double v : row) var += (v - mean) * (v - mean);
    var /= static_cast<double>(n);
    s.mean[i] = mean;
    s.scale[i] = var > 0.0 ? std::sqrt(var) : 1.0;
  }
  return s;
}

Matrix Standardizer::Apply(const Matrix& x) const {
  if (x.rows() != mean.size()) {
    throw Error(ErrorKind::kShape, "standardizer dimension mismatch");
  }
  Matrix out = x;
  for (std::size_t i = 0; i < x.rows(); ++i) {
    for (double& v : out.row(i)) v = (v - mean[i]) / scale[i];
  }
  return out;
}

}  // namespace misub
