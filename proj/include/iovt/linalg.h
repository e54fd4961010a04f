// Copyright 2026 The IOVT Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

#include "iovt/error.h"

namespace iovt {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Spectral decomposition M = V diag(values) V^dagger with ascending values.
struct EigenSystem {
  RealVector values;
  ComplexMatrix vectors;
};

/// Largest dimension accepted by the Jacobi eigensolver.
inline constexpr Eigen::Index kMaxEigenDimension = 64;

/// Diagonalizes a Hermitian matrix by cyclic complex Jacobi rotations.
///
/// Sweeps run until the off-diagonal Frobenius norm drops below
/// 1e-12 * max(1, |M|_F). The input must be Hermitian to 1e-10 (relative to
/// max(1, |M|_max)); only its Hermitian part is diagonalized. Throws
/// ErrorKind::kSymmetry for non-Hermitian input and ErrorKind::kConvergence
/// if 100 sweeps are not enough.
EigenSystem hermitian_eigensystem(const ComplexMatrix& m);

/// Eigenvalues only, ascending.
RealVector hermitian_eigenvalues(const ComplexMatrix& m);

/// Real symmetric convenience overload.
RealVector symmetric_eigenvalues(const RealMatrix& m);

/// Positive square root of a positive semidefinite Hermitian matrix.
/// Eigenvalues at or below `floor` are treated as zero.
ComplexMatrix psd_sqrt(const ComplexMatrix& m, double floor);

/// Singular values of a complex matrix, descending.
///
/// Computed as the nonnegative half of the spectrum of the Hermitian
/// dilation [[0, A], [A^dagger, 0]], which keeps small singular values at
/// absolute accuracy instead of square-rooting round-off.
RealVector singular_values(const ComplexMatrix& a);

/// Max-norm of M - M^dagger.
double hermiticity_defect(const ComplexMatrix& m);

/// Kronecker product a (x) b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace iovt
