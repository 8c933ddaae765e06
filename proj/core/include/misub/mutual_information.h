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

#ifndef MISUB_MUTUAL_INFORMATION_H_
#define MISUB_MUTUAL_INFORMATION_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "misub/matrix.h"
#include "misub/transforms.h"

namespace misub {

// Equal-width binning over the fitted range [lo, hi].
class Discretizer {
 public:
  Discretizer() = default;
  Discretizer(std::size_t bins, double lo, double hi);

  // Fits [min, max] of `values`. Throws kInsufficientData on empty input and
  // kRange when bins < 2.
  static Discretizer Fit(std::span<const double> values, std::size_t bins);

  std::size_t bins() const { return bins_; }
  double lo() const { return lo_; }
  double hi() const { return hi_; }
  bool degenerate() const { return !(hi_ > lo_); }

  // clamp(floor((v - lo) / (hi - lo) * B), 0, B - 1). Scaled positions within
  // 1e-9 of an integer are snapped to it so that bin edges survive positive
  // affine rescaling of the data. Degenerate ranges map everything to bin 0.
  std::size_t Bin(double v) const;
  std::vector<std::size_t> Assign(std::span<const double> values) const;

 private:
  std::size_t bins_ = 2;
  double lo_ = 0.0;
  double hi_ = 0.0;
};

// Counts n_xy over (bin x class) with marginals n_x and n_y.
class JointHistogram {
 public:
  JointHistogram() = default;
  // From a row-major B x C count grid.
  JointHistogram(std::size_t bins, std::size_t classes,
                 std::vector<std::int64_t> counts);

  std::size_t bins() const { return bins_; }
  std::size_t classes() const { return classes_; }
  std::int64_t total() const { return total_; }
  std::int64_t count(std::size_t x, std::size_t y) const {
    return counts_[x * classes_ + y];
  }
  std::span<const std::int64_t> counts() const { return counts_; }
  std::span<const std::int64_t> row_marginals() const { return row_; }
  std::span<const std::int64_t> col_marginals() const { return col_; }

 private:
  std::size_t bins_ = 0;
  std::size_t classes_ = 0;
  std::vector<std::int64_t> counts_;
  std::vector<std::int64_t> row_;
  std::vector<std::int64_t> col_;
  std::int64_t total_ = 0;
};

// Tallies (bin, label) pairs. Throws kShape on length mismatch and kRange for
// ids outside [0, B) x [0, C).
JointHistogram BuildJointHistogram(std::span<const std::size_t> bin_ids,
                                   std::span<const int> labels,
                                   std::size_t bins, std::size_t classes);

// Plug-in mutual information in bits, before clamping at zero.
double MutualInformationRaw(const JointHistogram& h);
// Plug-in mutual information in bits, clamped to >= 0. Requires total >= 1.
double MutualInformation(const JointHistogram& h);

// Shannon entropy (bits) of the empirical label distribution.
double Entropy(std::span<const int> labels, std::size_t classes);
// Shannon entropy (bits) of a count vector.
double EntropyOfCounts(std::span<const std::int64_t> counts);

struct FanoBound {
  double value = 0.0;    // (H(Y) - I(X;Y) - 1) / log2(C), unclamped
  bool vacuous = false;  // value < 0
};

// Fano's lower bound on the misclassification probability. c >= 2.
FanoBound FanoLowerBound(double entropy_bits, double mi_bits, std::size_t c);

// Second-order estimate of the MI estimation error for count fluctuations
// `delta` (row-major B x C, same shape as h). Marginal fluctuations are the
// row and column sums of `delta`; cells with zero count are skipped and must
// carry zero fluctuation.
double MiFluctuation(const JointHistogram& h, std::span<const double> delta);
// MiFluctuation with Poisson fluctuations delta_xy = sqrt(n_xy).
double PoissonMiFluctuation(const JointHistogram& h);

// Histogram bin count used when none is given: ceil(sqrt(N)) in [4, 64].
std::size_t DefaultBins(std::size_t num_samples);

struct MiRanking {
  std::vector<double> mi_bits;      // per base, conventional order
  std::vector<double> fluctuation;  // per base
  std::vector<std::size_t> order;   // base indices, MI descending
  std::vector<Discretizer> discretizers;
  std::size_t bins = 0;

  std::size_t size() const { return mi_bits.size(); }
  // Position of each base in `order` (0 = highest MI).
  std::vector<std::size_t> SelectedRanks() const;
  // First k entries of `order`.
  std::vector<std::size_t> TopK(std::size_t k) const;
};

// Projects x (d x N) onto every base, discretizes each projection with its own
// equal-width discretizer and scores it by MI with `labels`. Ties in MI keep
// the conventional order. Class count is max(label) + 1.
MiRanking RankBases(const BasisSet& basis, const Matrix& x,
                    std::span<const int> labels, std::size_t bins);

// The k highest-MI bases stacked as rows of a k x d matrix, MI descending.
Matrix SelectSubspace(const MiRanking& ranking, const BasisSet& basis,
                      std::size_t k);

// g (k x d) times x (d x N). Projections stay continuous.
Matrix Project(const Matrix& g, const Matrix& x);

// Columns: base_index, conventional_rank, mi_bits, fluctuation, selected_rank.
// One row per base in conventional order; ranks are 1-based.
std::string RankingCsv(const MiRanking& ranking);
void WriteRankingCsv(const MiRanking& ranking,
                     const std::filesystem::path& path);

}  // namespace misub

#endif  // MISUB_MUTUAL_INFORMATION_H_
