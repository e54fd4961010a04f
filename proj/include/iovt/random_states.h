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

#include <array>
#include <random>

#include "iovt/qstate.h"

namespace iovt {

using Rng = std::mt19937_64;

/// rho = G G^dagger / Tr(G G^dagger) with G a dim x rank matrix of
/// independent standard-normal real and imaginary parts.
DensityOperator random_density(int dim, int rank, Rng& rng);

/// Full-rank random_density.
inline DensityOperator random_density(int dim, Rng& rng) { return random_density(dim, dim, rng); }

/// Haar-random unit vector.
Eigen::VectorXcd random_pure_vector(int dim, Rng& rng);

/// Haar-random unitary via QR of a Ginibre matrix with phase correction.
ComplexMatrix random_unitary(int dim, Rng& rng);

/// U_A (x) U_B with independent Haar factors on C^n (x) C^n.
ComplexMatrix random_local_unitary(int n, Rng& rng);

/// U rho U^dagger.
DensityOperator conjugate(const DensityOperator& rho, const ComplexMatrix& u);

/// Uniform point of the standard-form tetrahedron (rejection sampling).
std::array<double, 3> random_tetrahedron_point(Rng& rng);

}  // namespace iovt
