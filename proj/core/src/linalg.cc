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

#include "misub/linalg.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "misub/error.h"

namespace misub {
namespace {

constexpr int kMaxSweeps = 100;
constexpr double kRelativeTolerance = 1e-12;
// Relative slack when deciding which component has the largest magnitude.
constexpr double kSignTieTolerance = 1e-12;

void RequireSquare(const Matrix& a, const char* what) {
  if (a.rows() != a.cols()) {
    throw Error(ErrorKind::kShape, std::string(what) + ": matrix is " +
                                       std::to_string(a.rows()) + "x" +
                                       std::to_string(a.cols()) +
                                       ", expected square");
  }
}

double OffDiagonalNorm(const Matrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (i != j) sum += a(i, j) * a(i, j);
    }
  }
  return std::sqrt(sum);
}

void FixSign(Matrix& vectors, std::size_t col) {
  const std::size_t n = vectors.rows();
  double max_abs = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    max_abs = std::max(max_abs, std::abs(vectors(r, col)));
  }
  if (max_abs == 0.0) return;
  for (std::size_t r = 0; r < n; ++r) {
    const double v = vectors(r, col);
    if (std::abs(v) >= max_abs * (1.0 - kSignTieTolerance)) {
      if (v < 0.0) {
        for (std::size_t k = 0; k < n; ++k) vectors(k, col) = -vectors(k, col);
      }
      return;
    }
  }
}

// Sorts eigenpairs by descending eigenvalue; equal eigenvalues keep their
// original column order.
EigenDecomposition SortPairs(const std::vector<double>& values,
                             const Matrix& vectors) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return values[a] > values[b];
                   });
  EigenDecomposition out{std::vector<double>(n), Matrix(n, n)};
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = values[order[j]];
    for (std::size_t r = 0; r < n; ++r) {
      out.eigenvectors(r, j) = vectors(r, order[j]);
    }
    FixSign(out.eigenvectors, j);
  }
  return out;
}

}  // namespace

Matrix Covariance(const Matrix& x, bool centered) {
  const std::size_t d = x.rows();
  const std::size_t n = x.cols();
  if (n < 2) {
    throw Error(ErrorKind::kInsufficientData,
                "covariance needs at least 2 samples, got " + std::to_string(n));
  }
  std::vector<double> mean(d, 0.0);
  if (centered) {
    for (std::size_t i = 0; i < d; ++i) {
      auto row = x.row(i);
      mean[i] = std::accumulate(row.begin(), row.end(), 0.0) /
                static_cast<double>(n);
    }
  }
  Matrix cov(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    auto xi = x.row(i);
    for (std::size_t j = i; j < d; ++j) {
      auto xj = x.row(j);
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        s += (xi[k] - mean[i]) * (xj[k] - mean[j]);
      }
      s /= static_cast<double>(n);
      cov(i, j) = s;
      cov(j, i) = s;
    }
  }
  return cov;
}

EigenDecomposition SymEig(const Matrix& input) {
  RequireSquare(input, "sym_eig");
  const std::size_t n = input.rows();
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a(i, j) = 0.5 * (input(i, j) + input(j, i));
    }
  }
  Matrix v = Matrix::Identity(n);
  const double tolerance = kRelativeTolerance * FrobeniusNorm(a);

  int sweep = 0;
  while (OffDiagonalNorm(a) > tolerance) {
    if (++sweep > kMaxSweeps) {
      throw Error(ErrorKind::kNumeric,
                  "jacobi eigensolver did not converge in " +
                      std::to_string(kMaxSweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p);
        const double aqq = a(q, q);
        const double theta = (aqq - app) / (2.0 * apq);
        // Smaller root of t^2 + 2*theta*t - 1 = 0, so |rotation| <= pi/4.
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = a(p, k) = c * akp - s * akq;
          a(k, q) = a(q, k) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = a(i, i);
  return SortPairs(values, v);
}

Matrix Cholesky(const Matrix& a) {
  RequireSquare(a, "cholesky");
  const std::size_t n = a.rows();
  double max_diag = 0.0;
  for (std::size_t i = 0; i < n; ++i) max_diag = std::max(max_diag, a(i, i));
  // Pivots this small relative to the diagonal are numerically zero.
  const double pivot_floor = 1e-14 * max_diag;

  Matrix l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double diag = a(j, j);
    for (std::size_t k = 0; k < j; ++k) diag -= l(j, k) * l(j, k);
    if (!(diag > pivot_floor)) {
      throw Error(ErrorKind::kSingular,
                  "matrix is not positive definite (pivot " +
                      std::to_string(j) + " = " + std::to_string(diag) + ")");
    }
    const double ljj = std::sqrt(diag);
    l(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = a(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / ljj;
    }
  }
  return l;
}

EigenDecomposition GeneralizedSymEig(const Matrix& sb, const Matrix& sw,
                                     double ridge) {
  RequireSquare(sb, "generalized_sym_eig");
  RequireSquare(sw, "generalized_sym_eig");
  if (sb.rows() != sw.rows()) {
    throw Error(ErrorKind::kShape,
                "generalized_sym_eig: scatter matrices differ in size");
  }
  if (!(ridge >= 0.0)) {
    throw Error(ErrorKind::kRange, "ridge must be non-negative");
  }
  const std::size_t n = sb.rows();
  Matrix regularized = sw;
  for (std::size_t i = 0; i < n; ++i) regularized(i, i) += ridge;

  Matrix l;
  try {
    l = Cholesky(regularized);
  } catch (const Error& e) {
    throw Error(ErrorKind::kSingular,
                std::string("within-class scatter is singular (") + e.what() +
                    "); increase the ridge (currently " +
                    std::to_string(ridge) + ")");
  }

  // Whitened matrix C = L^{-1} * sb * L^{-T}, built by two triangular solves.
  // Step 1: Y = L^{-1} * sb (forward substitution per column).
  Matrix y(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = sb(i, c);
      for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * y(k, c);
      y(i, c) = s / l(i, i);
    }
  }
  // Step 2: C = Y * L^{-T}, i.e. C^T = L^{-1} * Y^T.
  Matrix whitened(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      double s = y(r, i);
      for (std::size_t k = 0; k < i; ++k) s -= l(i, k) * whitened(r, k);
      whitened(r, i) = s / l(i, i);
    }
  }

  EigenDecomposition inner = SymEig(whitened);

  // Back-transform v = L^{-T} u (backward substitution), then normalize.
  Matrix vectors(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t ii = n; ii-- > 0;) {
      double s = inner.eigenvectors(ii, c);
      for (std::size_t k = ii + 1; k < n; ++k) s -= l(k, ii) * vectors(k, c);
      vectors(ii, c) = s / l(ii, ii);
    }
    double norm = 0.0;
    for (std::size_t r = 0; r < n; ++r) norm += vectors(r, c) * vectors(r, c);
    norm = std::sqrt(norm);
    for (std::size_t r = 0; r < n; ++r) vectors(r, c) /= norm;
    FixSign(vectors, c);
  }
  return {std::move(inner.eigenvalues), std::move(vectors)};
}

}  // namespace misub
