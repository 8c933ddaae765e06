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


#include <cmath>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "misub/linalg.h"
#include "misub/matrix.h"
#include "test_util.h"

namespace misub {
namespace {

using testing::ExpectError;
using testing::MaxAbsDiff;

Eigen::MatrixXd ToEigen(const Matrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  }
  return out;
}

Matrix Reconstruct(const EigenDecomposition& e) {
  Matrix lambda = Matrix::Diagonal(e.eigenvalues);
  return MatMul(MatMul(e.eigenvectors, lambda), e.eigenvectors.Transposed());
}

TEST(CovarianceTest, DiagonalPairUsesDivisorN) {
  Matrix x = {{1, -1}, {1, -1}};
  EXPECT_EQ(Covariance(x), (Matrix{{1, 1}, {1, 1}}));
}

TEST(CovarianceTest, ConstantDataGivesZero) {
  Matrix x = {{2, 2, 2}, {-3, -3, -3}};
  EXPECT_EQ(Covariance(x), Matrix(2, 2));
}

TEST(CovarianceTest, AxisAlignedPair) {
  Matrix x = {{1, -1}, {0, 0}};
  EXPECT_EQ(Covariance(x), (Matrix{{1, 0}, {0, 0}}));
}

TEST(CovarianceTest, UncenteredIsSecondMoment) {
  Matrix x = {{1, 3}};
  EXPECT_DOUBLE_EQ(Covariance(x, false)(0, 0), 5.0);
  EXPECT_DOUBLE_EQ(Covariance(x, true)(0, 0), 1.0);
}

TEST(CovarianceTest, SingleSampleIsInsufficient) {
  ExpectError(ErrorKind::kInsufficientData, [] { Covariance(Matrix(3, 1)); });
}

TEST(SymEigTest, DiagonalInput) {
  EigenDecomposition e = SymEig(Matrix{{3, 0}, {0, 1}});
  EXPECT_EQ(e.eigenvalues, (std::vector<double>{3, 1}));
  EXPECT_EQ(e.eigenvectors, Matrix::Identity(2));
}

TEST(SymEigTest, SwapMatrix) {
  EigenDecomposition e = SymEig(Matrix{{0, 1}, {1, 0}});
  ASSERT_EQ(e.eigenvalues.size(), 2u);
  EXPECT_NEAR(e.eigenvalues[0], 1.0, 1e-14);
  EXPECT_NEAR(e.eigenvalues[1], -1.0, 1e-14);
  const double h = 1.0 / std::sqrt(2.0);
  // First column (1,1)/sqrt2. Second is (1,-1)/sqrt2 up to sign; the
  // convention makes the first of two equal-magnitude entries positive.
  EXPECT_NEAR(e.eigenvectors(0, 0), h, 1e-14);
  EXPECT_NEAR(e.eigenvectors(1, 0), h, 1e-14);
  EXPECT_NEAR(e.eigenvectors(0, 1), h, 1e-14);
  EXPECT_NEAR(e.eigenvectors(1, 1), -h, 1e-14);
}

TEST(SymEigTest, ZeroMatrixIsDeterministic) {
  EigenDecomposition a = SymEig(Matrix(4, 4));
  EigenDecomposition b = SymEig(Matrix(4, 4));
  EXPECT_EQ(a.eigenvalues, std::vector<double>(4, 0.0));
  EXPECT_EQ(a.eigenvectors, b.eigenvectors);
  EXPECT_LE(testing::OrthonormalityError(a.eigenvectors), 1e-12);
}

TEST(SymEigTest, NonSquareIsShapeError) {
  ExpectError(ErrorKind::kShape, [] { SymEig(Matrix(2, 3)); });
}

TEST(SymEigTest, ReconstructionAndTraceOnRandomMatrices) {
  Rng rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + rng.Below(64);
    Matrix a = testing::RandomSymmetric(n, rng);
    EigenDecomposition e = SymEig(a);
    double norm = FrobeniusNorm(a);
    EXPECT_LE(FrobeniusNorm(Subtract(a, Reconstruct(e))), 1e-7 * (1 + norm))
        << "n=" << n;
    double sum = 0.0;
    for (double v : e.eigenvalues) sum += v;
    EXPECT_NEAR(sum, Trace(a), 1e-8 * (1 + std::abs(Trace(a))));
    for (std::size_t i = 1; i < n; ++i) {
      EXPECT_GE(e.eigenvalues[i - 1], e.eigenvalues[i]);
    }
  }
}

TEST(SymEigTest, MatchesReferenceSolverSpectrum) {
  Rng rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 2 + rng.Below(30);
    Matrix a = testing::RandomSymmetric(n, rng);
    EigenDecomposition e = SymEig(a);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ref(ToEigen(a));
    Eigen::VectorXd values = ref.eigenvalues();  // ascending
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_NEAR(e.eigenvalues[i], values(n - 1 - i), 1e-9);
    }
  }
}

TEST(SymEigTest, SignConventionLargestComponentPositive) {
  Rng rng(8);
  Matrix a = testing::RandomSymmetric(12, rng);
  EigenDecomposition e = SymEig(a);
  for (std::size_t j = 0; j < 12; ++j) {
    std::size_t arg = 0;
    for (std::size_t i = 1; i < 12; ++i) {
      if (std::abs(e.eigenvectors(i, j)) >
          std::abs(e.eigenvectors(arg, j)) * (1 + 1e-12)) {
        arg = i;
      }
    }
    EXPECT_GT(e.eigenvectors(arg, j), 0.0);
  }
}

TEST(GeneralizedSymEigTest, DiagonalCase) {
  EigenDecomposition e =
      GeneralizedSymEig(Matrix{{2, 0}, {0, 0}}, Matrix::Identity(2), 0.0);
  EXPECT_NEAR(e.eigenvalues[0], 2.0, 1e-14);
  EXPECT_NEAR(e.eigenvalues[1], 0.0, 1e-14);
  EXPECT_NEAR(e.eigenvectors(0, 0), 1.0, 1e-14);
  EXPECT_NEAR(e.eigenvectors(1, 0), 0.0, 1e-14);
}

TEST(GeneralizedSymEigTest, InverseWithinScatter) {
  EigenDecomposition e =
      GeneralizedSymEig(Matrix::Identity(2), Matrix{{1, 0}, {0, 4}}, 0.0);
  EXPECT_NEAR(e.eigenvalues[0], 1.0, 1e-14);
  EXPECT_NEAR(e.eigenvalues[1], 0.25, 1e-14);
}

TEST(GeneralizedSymEigTest, IdentityWithinScatterMatchesSymEig) {
  Rng rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 2 + rng.Below(20);
    Matrix sb = testing::RandomSymmetric(n, rng);
    EigenDecomposition plain = SymEig(sb);
    EigenDecomposition gen = GeneralizedSymEig(sb, Matrix::Identity(n), 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_NEAR(gen.eigenvalues[i], plain.eigenvalues[i], 1e-9);
    }
    EXPECT_LE(FrobeniusNorm(Subtract(sb, Reconstruct(gen))),
              1e-7 * (1 + FrobeniusNorm(sb)));
  }
}

TEST(GeneralizedSymEigTest, SingularWithinScatterRescuedByRidge) {
  // Rank-1 within-class scatter in 3-d.
  Matrix u = {{1}, {2}, {-1}};
  Matrix sw = MatMul(u, u.Transposed());
  Matrix sb = {{2, 1, 0}, {1, 3, 0.5}, {0, 0.5, 1}};
  const double ridge = 1e-6;
  ExpectError(ErrorKind::kSingular, [&] { GeneralizedSymEig(sb, sw, 0.0); });
  EigenDecomposition e = GeneralizedSymEig(sb, sw, ridge);

  Eigen::MatrixXd b = ToEigen(sb);
  Eigen::MatrixXd w =
      ToEigen(sw) + ridge * Eigen::MatrixXd::Identity(3, 3);
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> ref(b, w);
  Eigen::VectorXd values = ref.eigenvalues();
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_NEAR(e.eigenvalues[i] / values(2 - i), 1.0, 1e-6);
    // Each returned vector solves Sb v = lambda (Sw + ridge I) v.
    Eigen::VectorXd v(3);
    for (std::size_t r = 0; r < 3; ++r) v(r) = e.eigenvectors(r, i);
    EXPECT_NEAR(v.norm(), 1.0, 1e-12);
    Eigen::VectorXd residual = b * v - e.eigenvalues[i] * (w * v);
    EXPECT_LE(residual.norm(), 1e-6 * (1 + std::abs(e.eigenvalues[i])));
  }
}

TEST(GeneralizedSymEigTest, NegativeRidgeRejected) {
  ExpectError(ErrorKind::kRange, [] {
    GeneralizedSymEig(Matrix::Identity(2), Matrix::Identity(2), -1.0);
  });
}

TEST(CholeskyTest, FactorReproducesInput) {
  Rng rng(3);
  Matrix r = testing::RandomMatrix(6, 6, rng);
  Matrix spd = Add(MatMul(r, r.Transposed()), Matrix::Identity(6));
  Matrix l = Cholesky(spd);
  EXPECT_LE(MaxAbsDiff(MatMul(l, l.Transposed()), spd), 1e-12 * 10);
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = i + 1; j < 6; ++j) EXPECT_EQ(l(i, j), 0.0);
  }
}

}  // namespace
}  // namespace misub
