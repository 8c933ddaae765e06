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

#ifndef MISUB_TRANSFORMS_H_
#define MISUB_TRANSFORMS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "misub/matrix.h"

namespace misub {

enum class TransformKind { kDct, kPca, kLda, kRp };

std::string_view ToString(TransformKind kind);
// Accepts DCT/PCA/LDA/RP in any case (RND is accepted for RP).
TransformKind ParseTransformKind(std::string_view text);

// Candidate base vectors, one per row of `bases` (m x d), in the transform's
// conventional order: ascending frequency for DCT, descending eigenvalue for
// PCA and LDA, generation order for RP.
struct BasisSet {
  TransformKind kind = TransformKind::kDct;
  Matrix bases;
  // DCT: frequency index; PCA/LDA: eigenvalue; RP: zeros.
  std::vector<double> scores;
  std::string fitted_on = "data-independent";

  std::size_t size() const { return bases.rows(); }
  std::size_t dim() const { return bases.cols(); }
};

// Orthonormal DCT-II matrix of size d x d.
BasisSet DctBasis(std::size_t d);

// Eigenvectors of the centered (divide-by-N) covariance of x (d x N).
BasisSet PcaBasis(const Matrix& x);

// Default LDA ridge: 1e-6 * trace(S_w) / d.
double DefaultLdaRidge(const Matrix& within_scatter);

// All d generalized eigenvectors of (S_b, S_w + ridge * I) for x (d x N)
// with labels in [0, num_classes). Rows are unit length. When `ridge` is
// empty DefaultLdaRidge is used.
BasisSet LdaBasis(const Matrix& x, std::span<const int> labels,
                  std::optional<double> ridge = std::nullopt);

// Scatter matrices used by LdaBasis, both normalized by N.
struct Scatter {
  Matrix within;
  Matrix between;
};
Scatter ComputeScatter(const Matrix& x, std::span<const int> labels);

// d x d matrix with i.i.d. entries +1, 0, -1, each with probability 1/3.
// Rows are not normalized.
BasisSet RpBasis(std::size_t d, std::uint64_t seed);

// CSV with `# kind:`, `# fitted_on:` and `# scores:` comment lines, a header
// row b0..b{d-1}, then one base vector per row.
void WriteBasisCsv(const BasisSet& basis, const std::filesystem::path& path);
std::string BasisCsv(const BasisSet& basis);
BasisSet ReadBasisCsv(const std::filesystem::path& path);

}  // namespace misub

#endif  // MISUB_TRANSFORMS_H_
