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

#include "iovt/su_basis.h"

#include <cmath>
#include <string>

namespace iovt {

namespace {

constexpr double kResidualTolerance = 1e-12;
const Complex kI{0.0, 1.0};

double trace_product_real(const ComplexMatrix& a, const ComplexMatrix& b) {
  // Tr(AB) without forming the product.
  return (a.transpose().cwiseProduct(b)).sum().real();
}

}  // namespace

ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return 0.5 * (a * b + b * a);
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a * b - b * a) / (2.0 * kI);
}

std::vector<ComplexMatrix> generalized_pauli(int n) {
  if (n < 2) {
    throw Error(ErrorKind::kInvalidDimension,
                "basis dimension must be >= 2, got " + std::to_string(n));
  }
  std::vector<ComplexMatrix> sigma;
  sigma.reserve(static_cast<std::size_t>(n) * n);
  sigma.push_back(ComplexMatrix::Identity(n, n));

  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      ComplexMatrix s = ComplexMatrix::Zero(n, n);
      s(j, k) = 1.0;
      s(k, j) = 1.0;
      sigma.push_back(std::move(s));
    }
  }
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      ComplexMatrix s = ComplexMatrix::Zero(n, n);
      s(j, k) = -kI;
      s(k, j) = kI;
      sigma.push_back(std::move(s));
    }
  }
  for (int l = 1; l < n; ++l) {
    ComplexMatrix s = ComplexMatrix::Zero(n, n);
    const double scale = std::sqrt(2.0 / (l * (l + 1.0)));
    for (int i = 0; i < l; ++i) s(i, i) = scale;
    s(l, l) = -l * scale;
    sigma.push_back(std::move(s));
  }
  return sigma;
}

std::pair<StructureTensor, StructureTensor> structure_constants(
    const std::vector<ComplexMatrix>& sigma) {
  const int dim_sq = static_cast<int>(sigma.size());
  const int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(dim_sq))));
  if (n < 2 || n * n != dim_sq || sigma.front().rows() != n) {
    throw Error(ErrorKind::kShape, "basis must hold n^2 matrices of size n x n");
  }
  const int g = dim_sq - 1;
  StructureTensor c(g);
  StructureTensor d(g);

  for (int j = 1; j <= g; ++j) {
    for (int k = 1; k <= g; ++k) {
      const ComplexMatrix anti = anticommutator(sigma[j], sigma[k]);
      const ComplexMatrix comm = commutator(sigma[j], sigma[k]);
      ComplexMatrix anti_residual = anti;
      ComplexMatrix comm_residual = comm;
      if (j == k) anti_residual -= (2.0 / n) * sigma[0];
      for (int l = 1; l <= g; ++l) {
        c(j, k, l) = 0.5 * trace_product_real(comm, sigma[l]);
        d(j, k, l) = 0.5 * trace_product_real(anti, sigma[l]);
        anti_residual -= d(j, k, l) * sigma[l];
        comm_residual -= c(j, k, l) * sigma[l];
      }
      const double residual =
          std::max(anti_residual.cwiseAbs().maxCoeff(), comm_residual.cwiseAbs().maxCoeff());
      if (residual > kResidualTolerance) {
        throw Error(ErrorKind::kBasisInconsistency,
                    "bracket reconstruction residual " + std::to_string(residual) +
                        " at (" + std::to_string(j) + "," + std::to_string(k) + ")");
      }
    }
  }
  return {std::move(c), std::move(d)};
}

HermitianBasis generate_basis(int n) {
  HermitianBasis basis;
  basis.n = n;
  basis.sigma = generalized_pauli(n);
  auto [c, d] = structure_constants(basis.sigma);
  basis.c = std::move(c);
  basis.d = std::move(d);
  return basis;
}

}  // namespace iovt
