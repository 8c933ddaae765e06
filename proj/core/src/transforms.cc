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

#include "misub/transforms.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "misub/error.h"
#include "misub/linalg.h"
#include "misub/random.h"
#include "text.h"

namespace misub {

using internal::FormatDouble;

std::string_view ToString(TransformKind kind) {
  switch (kind) {
    case TransformKind::kDct: return "DCT";
    case TransformKind::kPca: return "PCA";
    case TransformKind::kLda: return "LDA";
    case TransformKind::kRp: return "RP";
  }
  return "?";
}

TransformKind ParseTransformKind(std::string_view text) {
  std::string upper(internal::Trim(text));
  for (char& c : upper) c = static_cast<char>(std::toupper(c));
  if (upper == "DCT") return TransformKind::kDct;
  if (upper == "PCA") return TransformKind::kPca;
  if (upper == "LDA") return TransformKind::kLda;
  if (upper == "RP" || upper == "RND") return TransformKind::kRp;
  throw Error(ErrorKind::kConfig,
              "unknown transform '" + std::string(text) + "'");
}

BasisSet DctBasis(std::size_t d) {
  if (d < 1) throw Error(ErrorKind::kRange, "dct_basis: d must be >= 1");
  BasisSet out;
  out.kind = TransformKind::kDct;
  out.bases = Matrix(d, d);
  out.scores.resize(d);
  const double n = static_cast<double>(d);
  for (std::size_t u = 0; u < d; ++u) {
    const double alpha = u == 0 ? std::sqrt(1.0 / n) : std::sqrt(2.0 / n);
    for (std::size_t k = 0; k < d; ++k) {
      out.bases(u, k) =
          alpha * std::cos(std::numbers::pi * (2.0 * k + 1.0) *
                           static_cast<double>(u) / (2.0 * n));
    }
    out.scores[u] = static_cast<double>(u);
  }
  return out;
}

BasisSet PcaBasis(const Matrix& x) {
  const EigenDecomposition eig = SymEig(Covariance(x, /*centered=*/true));
  BasisSet out;
  out.kind = TransformKind::kPca;
  out.bases = eig.eigenvectors.Transposed();
  out.scores = eig.eigenvalues;
  out.fitted_on = std::to_string(x.cols()) + " samples";
  return out;
}

Scatter ComputeScatter(const Matrix& x, std::span<const int> labels) {
  const std::size_t d = x.rows();
  const std::size_t n = x.cols();
  if (labels.size() != n) {
    throw Error(ErrorKind::kShape, "lda: label count does not match samples");
  }
  int max_label = -1;
  for (int y : labels) {
    if (y < 0) throw Error(ErrorKind::kData, "lda: negative label");
    max_label = std::max(max_label, y);
  }
  const std::size_t c_total = static_cast<std::size_t>(max_label + 1);
  std::vector<std::size_t> counts(c_total, 0);
  Matrix means(c_total, d);
  std::vector<double> grand(d, 0.0);
  for (std::size_t j = 0; j < n; ++j) {
    ++counts[labels[j]];
    for (std::size_t i = 0; i < d; ++i) {
      means(labels[j], i) += x(i, j);
      grand[i] += x(i, j);
    }
  }
  std::size_t present = 0;
  for (std::size_t c = 0; c < c_total; ++c) {
    if (counts[c] == 0) continue;
    ++present;
    if (counts[c] < 2) {
      throw Error(ErrorKind::kInsufficientData,
                  "lda: class " + std::to_string(c) +
                      " has fewer than 2 samples");
    }
    for (double& v : means.row(c)) v /= static_cast<double>(counts[c]);
  }
  if (present < 2) {
    throw Error(ErrorKind::kInsufficientData, "lda: needs at least 2 classes");
  }
  for (double& v : grand) v /= static_cast<double>(n);

  const double inv_n = 1.0 / static_cast<double>(n);
  Scatter s{Matrix(d, d), Matrix(d, d)};
  std::vector<double> diff(d);
  for (std::size_t j = 0; j < n; ++j) {
    auto mu = means.row(labels[j]);
    for (std::size_t i = 0; i < d; ++i) diff[i] = x(i, j) - mu[i];
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = a; b < d; ++b) {
        s.within(a, b) += diff[a] * diff[b] * inv_n;
      }
    }
  }
  for (std::size_t c = 0; c < c_total; ++c) {
    if (counts[c] == 0) continue;
    const double weight = static_cast<double>(counts[c]) * inv_n;
    auto mu = means.row(c);
    for (std::size_t i = 0; i < d; ++i) diff[i] = mu[i] - grand[i];
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = a; b < d; ++b) {
        s.between(a, b) += weight * diff[a] * diff[b];
      }
    }
  }
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < a; ++b) {
      s.within(a, b) = s.within(b, a);
      s.between(a, b) = s.between(b, a);
    }
  }
  return s;
}

double DefaultLdaRidge(const Matrix& within_scatter) {
  return 1e-6 * Trace(within_scatter) /
         static_cast<double>(within_scatter.rows());
}

BasisSet LdaBasis(const Matrix& x, std::span<const int> labels,
                  std::optional<double> ridge) {
  const Scatter scatter = ComputeScatter(x, labels);
  const double r = ridge.value_or(DefaultLdaRidge(scatter.within));
  const EigenDecomposition eig =
      GeneralizedSymEig(scatter.between, scatter.within, r);
  BasisSet out;
  out.kind = TransformKind::kLda;
  out.bases = eig.eigenvectors.Transposed();
  out.scores = eig.eigenvalues;
  out.fitted_on = std::to_string(x.cols()) + " samples";
  return out;
}

BasisSet RpBasis(std::size_t d, std::uint64_t seed) {
  if (d < 1) throw Error(ErrorKind::kRange, "rp_basis: d must be >= 1");
  Rng rng(seed);
  BasisSet out;
  out.kind = TransformKind::kRp;
  out.bases = Matrix(d, d);
  out.scores.assign(d, 0.0);
  out.fitted_on = "data-independent (seed " + std::to_string(seed) + ")";
  for (std::size_t r = 0; r < d; ++r) {
    for (double& v : out.bases.row(r)) {
      v = static_cast<double>(static_cast<int>(rng.Below(3)) - 1);
    }
  }
  return out;
}

std::string BasisCsv(const BasisSet& basis) {
  std::ostringstream out;
  out << "# kind: " << ToString(basis.kind) << '\n';
  out << "# fitted_on: " << basis.fitted_on << '\n';
  out << "# scores:";
  for (std::size_t i = 0; i < basis.scores.size(); ++i) {
    out << (i ? "," : " ") << FormatDouble(basis.scores[i]);
  }
  out << '\n';
  for (std::size_t j = 0; j < basis.dim(); ++j) {
    out << (j ? "," : "") << 'b' << j;
  }
  out << '\n';
  for (std::size_t r = 0; r < basis.size(); ++r) {
    auto row = basis.bases.row(r);
    for (std::size_t j = 0; j < row.size(); ++j) {
      out << (j ? "," : "") << FormatDouble(row[j]);
    }
    out << '\n';
  }
  return out.str();
}

void WriteBasisCsv(const BasisSet& basis, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIo, "cannot write '" + path.string() + "'");
  out << BasisCsv(basis);
  if (!out) throw Error(ErrorKind::kIo, "write to '" + path.string() + "' failed");
}

BasisSet ReadBasisCsv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kIo, "cannot open '" + path.string() + "'");
  BasisSet basis;
  bool have_kind = false;
  std::vector<double> values;
  std::size_t cols = 0;
  std::size_t rows = 0;
  bool header_seen = false;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    std::string_view view = internal::Trim(line);
    if (view.empty()) continue;
    if (view.front() == '#') {
      view.remove_prefix(1);
      view = internal::Trim(view);
      const std::size_t colon = view.find(':');
      if (colon == std::string_view::npos) continue;
      const std::string_view key = internal::Trim(view.substr(0, colon));
      const std::string_view value = internal::Trim(view.substr(colon + 1));
      if (key == "kind") {
        basis.kind = ParseTransformKind(value);
        have_kind = true;
      } else if (key == "fitted_on") {
        basis.fitted_on = std::string(value);
      } else if (key == "scores" && !value.empty()) {
        for (auto field : internal::SplitFields(value)) {
          double v = 0.0;
          if (!internal::ParseDouble(field, v)) {
            throw Error(ErrorKind::kData, "bad score on line " +
                                              std::to_string(line_number));
          }
          basis.scores.push_back(v);
        }
      }
      continue;
    }
    const auto fields = internal::SplitFields(view);
    if (!header_seen) {
      header_seen = true;
      cols = fields.size();
      continue;
    }
    if (fields.size() != cols) {
      throw Error(ErrorKind::kData, "basis row on line " +
                                        std::to_string(line_number) +
                                        " has the wrong field count");
    }
    for (auto field : fields) {
      double v = 0.0;
      if (!internal::ParseDouble(field, v)) {
        throw Error(ErrorKind::kData, "non-numeric basis entry on line " +
                                          std::to_string(line_number));
      }
      values.push_back(v);
    }
    ++rows;
  }
  if (!have_kind || !header_seen) {
    throw Error(ErrorKind::kData, "'" + path.string() +
                                      "' is missing the kind comment or header");
  }
  basis.bases = Matrix(rows, cols, std::move(values));
  if (basis.scores.size() != rows) {
    throw Error(ErrorKind::kData, "score count does not match basis rows");
  }
  return basis;
}

}  // namespace misub
