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

#ifndef MISUB_CLASSIFIERS_H_
#define MISUB_CLASSIFIERS_H_

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "misub/matrix.h"

namespace misub {

enum class ClassifierKind { kNaiveBayes, kKnn };

std::string_view ToString(ClassifierKind kind);
// "nb" or "knn", case-insensitive.
ClassifierKind ParseClassifierKind(std::string_view text);

// Diagonal Gaussian naive Bayes over continuous projections. Features are
// rows of the input matrices (k x N), as produced by Project().
class GaussianNb {
 public:
  // Maximum-likelihood per-class means and variances (divisor N_c), priors
  // from class frequencies. Variances are floored at
  // 1e-9 * (largest feature variance) + 1e-12. Every label in
  // [0, max(label)] needs at least 2 samples.
  static GaussianNb Fit(const Matrix& f_train, std::span<const int> y_train);

  // Builds a model from explicit parameters; prior weights are normalized.
  GaussianNb(std::vector<double> prior_weights, Matrix means,
             Matrix variances);

  // argmax_c log prior_c + sum_i log N(x_i; mean_ci, var_ci); ties go to the
  // lower class index.
  std::vector<int> Predict(const Matrix& f_test) const;

  std::size_t num_classes() const { return priors_.size(); }
  std::size_t dim() const { return means_.cols(); }
  const std::vector<double>& priors() const { return priors_; }
  const Matrix& means() const { return means_; }          // C x k
  const Matrix& variances() const { return variances_; }  // C x k

 private:
  std::vector<double> priors_;
  Matrix means_;
  Matrix variances_;
};

// Euclidean k-nearest-neighbour vote. Distance ties prefer the lower training
// index; vote ties prefer the lower class index.
class Knn {
 public:
  static constexpr std::size_t kDefaultNeighbors = 5;

  // Requires 1 <= neighbors <= number of training samples.
  static Knn Fit(const Matrix& f_train, std::span<const int> y_train,
                 std::size_t neighbors = kDefaultNeighbors);

  std::vector<int> Predict(const Matrix& f_test) const;

  std::size_t neighbors() const { return neighbors_; }

 private:
  Knn(Matrix train, std::vector<int> labels, std::size_t neighbors,
      std::size_t classes)
      : train_(std::move(train)),
        labels_(std::move(labels)),
        neighbors_(neighbors),
        classes_(classes) {}

  Matrix train_;  // N_train x k, one sample per row
  std::vector<int> labels_;
  std::size_t neighbors_;
  std::size_t classes_;
};

// Fraction of positions where predicted == truth.
double Accuracy(std::span<const int> predicted, std::span<const int> truth);

}  // namespace misub

#endif  // MISUB_CLASSIFIERS_H_
