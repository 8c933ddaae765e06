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

#ifndef MISUB_LINALG_H_
#define MISUB_LINALG_H_

#include <vector>

#include "misub/matrix.h"

namespace misub {

// Eigenpairs sorted by non-increasing eigenvalue. Column i of `eigenvectors`
// pairs with eigenvalues[i].
struct EigenDecomposition {
  std::vector<double> eigenvalues;
  Matrix eigenvectors;
};

// Covariance of the columns of `x` (d features x N samples), divided by N.
// With `centered` the per-row mean is subtracted first; otherwise this is the
// raw second-moment matrix. Requires N >= 2.
Matrix Covariance(const Matrix& x, bool centered = true);

// Cyclic Jacobi eigensolver for symmetric matrices. The input is symmetrized
// as (A + A^T)/2. Each eigenvector is signed so that its largest-magnitude
// component (first one on ties) is positive.
EigenDecomposition SymEig(const Matrix& a);

// Lower-triangular L with L * L^T == a. Throws kSingular if a is not
// positive definite.
Matrix Cholesky(const Matrix& a);

// Solves sb * v = lambda * (sw + ridge * I) * v by whitening with the Cholesky
// factor of (sw + ridge * I). Returns all d pairs, eigenvectors normalized to
// unit length and signed as in SymEig.
EigenDecomposition GeneralizedSymEig(const Matrix& sb, const Matrix& sw,
                                     double ridge);

}  // namespace misub

#endif  // MISUB_LINALG_H_
