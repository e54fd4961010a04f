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

#include <utility>
#include <vector>

#include "iovt/linalg.h"

namespace iovt {

/// Real 3-index array over the traceless generator indices 1..n^2-1.
class StructureTensor {
 public:
  StructureTensor() = default;
  explicit StructureTensor(int generators)
      : generators_(generators),
        values_(static_cast<std::size_t>(generators) * generators * generators, 0.0) {}

  int generators() const { return generators_; }

  // Indices are 1-based, matching sigma[j] for j >= 1.
  double& operator()(int j, int k, int l) { return values_[offset(j, k, l)]; }
  double operator()(int j, int k, int l) const { return values_[offset(j, k, l)]; }

  const std::vector<double>& values() const { return values_; }

 private:
  std::size_t offset(int j, int k, int l) const {
    return (static_cast<std::size_t>(j - 1) * generators_ + (k - 1)) * generators_ + (l - 1);
  }

  int generators_ = 0;
  std::vector<double> values_;
};

/// Generalized Pauli basis of u(n): sigma[0] is the identity, sigma[1..]
/// are traceless Hermitian with Tr(sigma_j sigma_k) = 2 delta_jk.
///
/// Brackets are the halved ones, [A,B]_+ = (AB+BA)/2 and
/// [A,B]_- = (AB-BA)/(2i), so that sigma_j sigma_k = [.,.]_+ + i [.,.]_-,
/// [sigma_j, sigma_k]_+ = (2/n) delta_jk sigma_0 + d_jkl sigma_l and
/// [sigma_j, sigma_k]_- = c_jkl sigma_l.
struct HermitianBasis {
  int n = 0;
  std::vector<ComplexMatrix> sigma;
  StructureTensor c;
  StructureTensor d;

  int generators() const { return n * n - 1; }
};

/// The n^2 generalized Gell-Mann matrices, identity first, then symmetric
/// off-diagonal pairs (row-major), antisymmetric pairs (row-major) and the
/// n-1 diagonal generators. Throws kInvalidDimension for n < 2.
std::vector<ComplexMatrix> generalized_pauli(int n);

/// generalized_pauli(n) together with its structure constants.
HermitianBasis generate_basis(int n);

/// c_jkl = Tr([sigma_j, sigma_k]_- sigma_l)/2 and d_jkl =
/// Tr([sigma_j, sigma_k]_+ sigma_l)/2, followed by a reconstruction check of
/// both brackets to 1e-12 (throws kBasisInconsistency).
std::pair<StructureTensor, StructureTensor> structure_constants(
    const std::vector<ComplexMatrix>& sigma);

/// Halved anticommutator (AB + BA)/2.
ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Halved commutator (AB - BA)/(2i); Hermitian when a and b are.
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace iovt
