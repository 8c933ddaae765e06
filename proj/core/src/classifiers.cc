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

#include "misub/classifiers.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include "misub/error.h"

namespace misub {

std::string_view ToString(ClassifierKind kind) {
  switch (kind) {
    case ClassifierKind::kNaiveBayes: return "nb";
    case ClassifierKind::kKnn: return "knn";
  }
  return "?";
}

ClassifierKind ParseClassifierKind(std::string_view text) {
  std::string lower(text);
  for (char& c : lower) c = static_cast<char>(std::tolower(c));
  if (lower == "nb") return ClassifierKind::kNaiveBayes;
  if (lower == "knn") return ClassifierKind::kKnn;
  throw Error(ErrorKind::kConfig,
              "unknown classifier '" + std::string(text) + "'");
}

GaussianNb::GaussianNb(std::vector<double> prior_weights, Matrix means,
                       Matrix variances)
    : priors_(std::move(prior_weights)),
      means_(std::move(means)),
      variances_(std::move(variances)) {
  if (means_.rows() != priors_.size() || variances_.rows() != priors_.size() ||
      means_.cols() != variances_.cols()) {
    throw Error(ErrorKind::kShape, "naive Bayes parameter shapes disagree");
  }
  double total = 0.0;
  for (double w : priors_) {
    if (!(w >= 0.0)) throw Error(ErrorKind::kRange, "negative prior weight");
    total += w;
  }
  if (!(total > 0.0)) throw Error(ErrorKind::kRange, "prior weights sum to 0");
  for (double& w : priors_) w /= total;
}

GaussianNb GaussianNb::Fit(const Matrix& f_train,
                           std::span<const int> y_train) {
  const std::size_t k = f_train.rows();
  const std::size_t n = f_train.cols();
  if (y_train.size() != n) {
    throw Error(ErrorKind::kShape, "naive Bayes: label count mismatch");
  }
  int max_label = -1;
  for (int y : y_train) {
    if (y < 0) throw Error(ErrorKind::kRange, "negative label");
    max_label = std::max(max_label, y);
  }
  const std::size_t c = static_cast<std::size_t>(max_label + 1);
  std::vector<double> counts(c, 0.0);
  Matrix means(c, k);
  Matrix vars(c, k);
  for (std::size_t j = 0; j < n; ++j) {
    counts[y_train[j]] += 1.0;
    for (std::size_t i = 0; i < k; ++i) means(y_train[j], i) += f_train(i, j);
  }
  for (std::size_t cls = 0; cls < c; ++cls) {
    if (counts[cls] < 2.0) {
      throw Error(ErrorKind::kInsufficientData,
                  "naive Bayes: class " + std::to_string(cls) +
                      " has fewer than 2 training samples");
    }
    for (double& m : means.row(cls)) m /= counts[cls];
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < k; ++i) {
      const double diff = f_train(i, j) - means(y_train[j], i);
      vars(y_train[j], i) += diff * diff;
    }
  }

  double global_var = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    auto row = f_train.row(i);
    double mean = 0.0;
    for (double v : row) mean += v;
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (double v : row) var += (v - mean) * (v - mean);
    global_var = std::max(global_var, var / static_cast<double>(n));
  }
  const double floor = 1e-9 * global_var + 1e-12;
  for (std::size_t cls = 0; cls < c; ++cls) {
    for (double& v : vars.row(cls)) v = std::max(v / counts[cls], floor);
  }
  return GaussianNb(std::move(counts), std::move(means), std::move(vars));
}

std::vector<int> GaussianNb::Predict(const Matrix& f_test) const {
  if (f_test.rows() != dim()) {
    throw Error(ErrorKind::kShape, "naive Bayes: test dimension " +
                                       std::to_string(f_test.rows()) +
                                       " vs model " + std::to_string(dim()));
  }
  const std::size_t c = num_classes();
  const std::size_t k = dim();
  // Per-class constant: log prior - 0.5 * sum log(2 pi var).
  std::vector<double> offset(c);
  for (std::size_t cls = 0; cls < c; ++cls) {
    double s = priors_[cls] > 0.0 ? std::log(priors_[cls])
                                  : -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < k; ++i) {
      s -= 0.5 * std::log(2.0 * std::numbers::pi * variances_(cls, i));
    }
    offset[cls] = s;
  }
  std::vector<int> out(f_test.cols());
  for (std::size_t j = 0; j < f_test.cols(); ++j) {
    int best = 0;
    double best_score = -std::numeric_limits<double>::infinity();
    for (std::size_t cls = 0; cls < c; ++cls) {
      double score = offset[cls];
      for (std::size_t i = 0; i < k; ++i) {
        const double diff = f_test(i, j) - means_(cls, i);
        score -= diff * diff / (2.0 * variances_(cls, i));
      }
      if (score > best_score) {
        best_score = score;
        best = static_cast<int>(cls);
      }
    }
    out[j] = best;
  }
  return out;
}

Knn Knn::Fit(const Matrix& f_train, std::span<const int> y_train,
             std::size_t neighbors) {
  if (y_train.size() != f_train.cols()) {
    throw Error(ErrorKind::kShape, "knn: label count mismatch");
  }
  if (neighbors < 1 || neighbors > f_train.cols()) {
    throw Error(ErrorKind::kRange,
                "knn: neighbor count " + std::to_string(neighbors) +
                    " outside [1, " + std::to_string(f_train.cols()) + "]");
  }
  int max_label = 0;
  for (int y : y_train) {
    if (y < 0) throw Error(ErrorKind::kRange, "negative label");
    max_label = std::max(max_label, y);
  }
  return Knn(f_train.Transposed(), std::vector<int>(y_train.begin(), y_train.end()),
             neighbors, static_cast<std::size_t>(max_label) + 1);
}

std::vector<int> Knn::Predict(const Matrix& f_test) const {
  if (f_test.rows() != train_.cols()) {
    throw Error(ErrorKind::kShape, "knn: test dimension mismatch");
  }
  const Matrix test = f_test.Transposed();
  const std::size_t n_train = train_.rows();
  std::vector<std::pair<double, std::size_t>> dist(n_train);
  std::vector<std::size_t> votes(classes_);
  std::vector<int> out(test.rows());
  for (std::size_t j = 0; j < test.rows(); ++j) {
    auto q = test.row(j);
    for (std::size_t t = 0; t < n_train; ++t) {
      auto p = train_.row(t);
      double s = 0.0;
      for (std::size_t i = 0; i < q.size(); ++i) {
        const double diff = q[i] - p[i];
        s += diff * diff;
      }
      dist[t] = {s, t};
    }
    // Pairs order by (distance, training index).
    std::partial_sort(dist.begin(), dist.begin() + neighbors_, dist.end());
    std::fill(votes.begin(), votes.end(), 0);
    for (std::size_t r = 0; r < neighbors_; ++r) ++votes[labels_[dist[r].second]];
    out[j] = static_cast<int>(std::max_element(votes.begin(), votes.end()) -
                              votes.begin());
  }
  return out;
}

double Accuracy(std::span<const int> predicted, std::span<const int> truth) {
  if (predicted.size() != truth.size()) {
    throw Error(ErrorKind::kShape, "accuracy: length mismatch");
  }
  if (predicted.empty()) {
    throw Error(ErrorKind::kInsufficientData, "accuracy of an empty set");
  }
  std::size_t correct = 0;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    if (predicted[i] == truth[i]) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(predicted.size());
}

}  // namespace misub
