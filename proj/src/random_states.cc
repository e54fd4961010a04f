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

#include "iovt/random_states.h"

#include <cmath>

#include <Eigen/QR>

namespace iovt {

namespace {

ComplexMatrix ginibre(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (Eigen::Index j = 0; j < g.cols(); ++j) {
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

}  // namespace

DensityOperator random_density(int dim, int rank, Rng& rng) {
  if (dim < 1 || rank < 1) throw Error(ErrorKind::kDomain, "dimension and rank must be positive");
  const ComplexMatrix g = ginibre(dim, rank, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityOperator::from_matrix(0.5 * (rho + rho.adjoint()));
}

Eigen::VectorXcd random_pure_vector(int dim, Rng& rng) {
  Eigen::VectorXcd v = ginibre(dim, 1, rng).col(0);
  return v / v.norm();
}

ComplexMatrix random_unitary(int dim, Rng& rng) {
  const ComplexMatrix z = ginibre(dim, dim, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int k = 0; k < dim; ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0.0) q.col(k) *= r(k, k) / mag;
  }
  return q;
}

ComplexMatrix random_local_unitary(int n, Rng& rng) {
  const ComplexMatrix ua = random_unitary(n, rng);
  const ComplexMatrix ub = random_unitary(n, rng);
  return kron(ua, ub);
}

DensityOperator conjugate(const DensityOperator& rho, const ComplexMatrix& u) {
  return DensityOperator::from_matrix(u * rho.matrix() * u.adjoint());
}

std::array<double, 3> random_tetrahedron_point(Rng& rng) {
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  for (;;) {
    const std::array<double, 3> d = {uniform(rng), uniform(rng), uniform(rng)};
    if (standard_form_spectrum(d)[0] >= 0.0) return d;
  }
}

}  // namespace iovt
