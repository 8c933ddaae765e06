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

#include "misub/mutual_information.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "misub/error.h"
#include "text.h"

namespace misub {
namespace {

// Scaled bin positions this close to an integer are treated as on the edge.
constexpr double kEdgeSnap = 1e-9;

}  // namespace

Discretizer::Discretizer(std::size_t bins, double lo, double hi)
    : bins_(bins), lo_(lo), hi_(hi) {
  if (bins < 2) {
    throw Error(ErrorKind::kRange, "discretizer needs at least 2 bins");
  }
}

Discretizer Discretizer::Fit(std::span<const double> values, std::size_t bins) {
  if (values.empty()) {
    throw Error(ErrorKind::kInsufficientData,
                "cannot fit a discretizer on no values");
  }
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  return Discretizer(bins, *lo, *hi);
}

std::size_t Discretizer::Bin(double v) const {
  if (degenerate()) return 0;
  double pos = (v - lo_) / (hi_ - lo_) * static_cast<double>(bins_);
  const double nearest = std::round(pos);
  if (std::abs(pos - nearest) <= kEdgeSnap) pos = nearest;
  if (pos <= 0.0) return 0;
  const double floored = std::floor(pos);
  if (floored >= static_cast<double>(bins_ - 1)) return bins_ - 1;
  return static_cast<std::size_t>(floored);
}

std::vector<std::size_t> Discretizer::Assign(
    std::span<const double> values) const {
  std::vector<std::size_t> ids(values.size());
  std::transform(values.begin(), values.end(), ids.begin(),
                 [this](double v) { return Bin(v); });
  return ids;
}

JointHistogram::JointHistogram(std::size_t bins, std::size_t classes,
                               std::vector<std::int64_t> counts)
    : bins_(bins),
      classes_(classes),
      counts_(std::move(counts)),
      row_(bins, 0),
      col_(classes, 0) {
  if (counts_.size() != bins * classes) {
    throw Error(ErrorKind::kShape, "joint histogram grid has " +
                                       std::to_string(counts_.size()) +
                                       " cells, expected " +
                                       std::to_string(bins * classes));
  }
  for (std::size_t x = 0; x < bins; ++x) {
    for (std::size_t y = 0; y < classes; ++y) {
      const std::int64_t n = counts_[x * classes + y];
      if (n < 0) {
        throw Error(ErrorKind::kRange, "negative histogram count");
      }
      row_[x] += n;
      col_[y] += n;
      total_ += n;
    }
  }
}

JointHistogram BuildJointHistogram(std::span<const std::size_t> bin_ids,
                                   std::span<const int> labels,
                                   std::size_t bins, std::size_t classes) {
  if (bin_ids.size() != labels.size()) {
    throw Error(ErrorKind::kShape, "bin ids and labels differ in length");
  }
  std::vector<std::int64_t> counts(bins * classes, 0);
  for (std::size_t i = 0; i < bin_ids.size(); ++i) {
    if (bin_ids[i] >= bins || labels[i] < 0 ||
        static_cast<std::size_t>(labels[i]) >= classes) {
      throw Error(ErrorKind::kRange,
                  "sample " + std::to_string(i) + " has bin " +
                      std::to_string(bin_ids[i]) + ", label " +
                      std::to_string(labels[i]) + " outside the " +
                      std::to_string(bins) + "x" + std::to_string(classes) +
                      " grid");
    }
    ++counts[bin_ids[i] * classes + static_cast<std::size_t>(labels[i])];
  }
  return JointHistogram(bins, classes, std::move(counts));
}

double MutualInformationRaw(const JointHistogram& h) {
  if (h.total() < 1) {
    throw Error(ErrorKind::kInsufficientData, "empty joint histogram");
  }
  const double n = static_cast<double>(h.total());
  const auto rows = h.row_marginals();
  const auto cols = h.col_marginals();
  double mi = 0.0;
  for (std::size_t x = 0; x < h.bins(); ++x) {
    for (std::size_t y = 0; y < h.classes(); ++y) {
      const double nxy = static_cast<double>(h.count(x, y));
      if (nxy == 0.0) continue;
      mi += nxy / n *
            std::log2(nxy * n / (static_cast<double>(rows[x]) *
                                 static_cast<double>(cols[y])));
    }
  }
  return mi;
}

double MutualInformation(const JointHistogram& h) {
  return std::max(0.0, MutualInformationRaw(h));
}

double EntropyOfCounts(std::span<const std::int64_t> counts) {
  const double total = static_cast<double>(
      std::accumulate(counts.begin(), counts.end(), std::int64_t{0}));
  if (total <= 0.0) {
    throw Error(ErrorKind::kInsufficientData, "entropy of an empty sample");
  }
  double h = 0.0;
  for (std::int64_t c : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / total;
    h -= p * std::log2(p);
  }
  return h;
}

double Entropy(std::span<const int> labels, std::size_t classes) {
  std::vector<std::int64_t> counts(classes, 0);
  for (int y : labels) {
    if (y < 0 || static_cast<std::size_t>(y) >= classes) {
      throw Error(ErrorKind::kRange, "label " + std::to_string(y) +
                                         " outside [0, " +
                                         std::to_string(classes) + ")");
    }
    ++counts[y];
  }
  return EntropyOfCounts(counts);
}

FanoBound FanoLowerBound(double entropy_bits, double mi_bits, std::size_t c) {
  if (c < 2) {
    throw Error(ErrorKind::kRange, "fano bound needs at least 2 classes");
  }
  const double value =
      (entropy_bits - mi_bits - 1.0) / std::log2(static_cast<double>(c));
  return {value, value < 0.0};
}

double MiFluctuation(const JointHistogram& h, std::span<const double> delta) {
  if (delta.size() != h.bins() * h.classes()) {
    throw Error(ErrorKind::kShape,
                "fluctuation grid does not match the histogram");
  }
  if (h.total() < 1) {
    throw Error(ErrorKind::kInsufficientData, "empty joint histogram");
  }
  std::vector<double> row_delta(h.bins(), 0.0);
  std::vector<double> col_delta(h.classes(), 0.0);
  double cell_term = 0.0;
  for (std::size_t x = 0; x < h.bins(); ++x) {
    for (std::size_t y = 0; y < h.classes(); ++y) {
      const double d = delta[x * h.classes() + y];
      const std::int64_t n = h.count(x, y);
      if (n == 0) {
        if (d != 0.0) {
          throw Error(ErrorKind::kData,
                      "non-zero fluctuation in empty cell (" +
                          std::to_string(x) + ", " + std::to_string(y) + ")");
        }
        continue;
      }
      cell_term += d * d / static_cast<double>(n);
      row_delta[x] += d;
      col_delta[y] += d;
    }
  }
  double row_term = 0.0;
  for (std::size_t x = 0; x < h.bins(); ++x) {
    const std::int64_t n = h.row_marginals()[x];
    if (n > 0) row_term += row_delta[x] * row_delta[x] / static_cast<double>(n);
  }
  double col_term = 0.0;
  for (std::size_t y = 0; y < h.classes(); ++y) {
    const std::int64_t n = h.col_marginals()[y];
    if (n > 0) col_term += col_delta[y] * col_delta[y] / static_cast<double>(n);
  }
  return (cell_term - row_term - col_term) /
         (2.0 * static_cast<double>(h.total()));
}

double PoissonMiFluctuation(const JointHistogram& h) {
  std::vector<double> delta(h.counts().size());
  std::transform(h.counts().begin(), h.counts().end(), delta.begin(),
                 [](std::int64_t n) { return std::sqrt(static_cast<double>(n)); });
  return MiFluctuation(h, delta);
}

std::size_t DefaultBins(std::size_t num_samples) {
  const auto root = static_cast<std::size_t>(
      std::ceil(std::sqrt(static_cast<double>(num_samples))));
  return std::clamp<std::size_t>(root, 4, 64);
}

std::vector<std::size_t> MiRanking::SelectedRanks() const {
  std::vector<std::size_t> ranks(order.size());
  for (std::size_t r = 0; r < order.size(); ++r) ranks[order[r]] = r;
  return ranks;
}

std::vector<std::size_t> MiRanking::TopK(std::size_t k) const {
  if (k < 1 || k > order.size()) {
    throw Error(ErrorKind::kRange, "k = " + std::to_string(k) +
                                       " outside [1, " +
                                       std::to_string(order.size()) + "]");
  }
  return {order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k)};
}

MiRanking RankBases(const BasisSet& basis, const Matrix& x,
                    std::span<const int> labels, std::size_t bins) {
  if (basis.dim() != x.rows()) {
    throw Error(ErrorKind::kShape,
                "basis dimension " + std::to_string(basis.dim()) +
                    " does not match data dimension " +
                    std::to_string(x.rows()));
  }
  if (labels.size() != x.cols()) {
    throw Error(ErrorKind::kShape, "label count does not match samples");
  }
  if (labels.empty()) {
    throw Error(ErrorKind::kInsufficientData, "cannot rank on zero samples");
  }
  int max_label = 0;
  for (int y : labels) {
    if (y < 0) throw Error(ErrorKind::kRange, "negative label");
    max_label = std::max(max_label, y);
  }
  const std::size_t classes = static_cast<std::size_t>(max_label) + 1;

  // Step 1: projections of every sample onto every base.
  const Matrix z = MatMul(basis.bases, x);

  // Step 2: per-base histogram MI.
  MiRanking ranking;
  ranking.bins = bins;
  const std::size_t m = basis.size();
  ranking.mi_bits.resize(m);
  ranking.fluctuation.resize(m);
  ranking.discretizers.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    const auto row = z.row(i);
    Discretizer disc = Discretizer::Fit(row, bins);
    const auto ids = disc.Assign(row);
    const JointHistogram h = BuildJointHistogram(ids, labels, bins, classes);
    ranking.mi_bits[i] = MutualInformation(h);
    ranking.fluctuation[i] = PoissonMiFluctuation(h);
    ranking.discretizers.push_back(disc);
  }

  // Step 3: sort by MI, keeping conventional order among equal scores.
  ranking.order.resize(m);
  std::iota(ranking.order.begin(), ranking.order.end(), 0);
  std::stable_sort(ranking.order.begin(), ranking.order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return ranking.mi_bits[a] > ranking.mi_bits[b];
                   });
  return ranking;
}

Matrix SelectSubspace(const MiRanking& ranking, const BasisSet& basis,
                      std::size_t k) {
  if (ranking.size() != basis.size()) {
    throw Error(ErrorKind::kShape, "ranking does not belong to this basis");
  }
  const auto top = ranking.TopK(k);
  return basis.bases.SelectRows(top);
}

Matrix Project(const Matrix& g, const Matrix& x) { return MatMul(g, x); }

std::string RankingCsv(const MiRanking& ranking) {
  std::ostringstream out;
  out << "base_index,conventional_rank,mi_bits,fluctuation,selected_rank\n";
  const auto ranks = ranking.SelectedRanks();
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    out << i << ',' << i + 1 << ',' << internal::FormatDouble(ranking.mi_bits[i])
        << ',' << internal::FormatDouble(ranking.fluctuation[i]) << ','
        << ranks[i] + 1 << '\n';
  }
  return out.str();
}

void WriteRankingCsv(const MiRanking& ranking,
                     const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIo, "cannot write '" + path.string() + "'");
  out << RankingCsv(ranking);
  if (!out) throw Error(ErrorKind::kIo, "write to '" + path.string() + "' failed");
}

}  // namespace misub
