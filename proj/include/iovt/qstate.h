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
#include <span>
#include <utility>

#include "iovt/linalg.h"

namespace iovt {

/// Hermitian, unit-trace, positive semidefinite matrix.
///
/// Construction through from_matrix() checks Hermiticity and trace to 1e-12
/// and the smallest eigenvalue against -1e-10; the stored matrix is the
/// Hermitian part of the input.
class DensityOperator {
 public:
  static constexpr double kHermitianTolerance = 1e-12;
  static constexpr double kTraceTolerance = 1e-12;
  static constexpr double kPositivityTolerance = -1e-10;

  /// Throws kValidation naming the violated invariant.
  static DensityOperator from_matrix(const ComplexMatrix& matrix);

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const ComplexMatrix& matrix() const { return matrix_; }

  /// sqrt(dim) when dim is a perfect square, otherwise 0.
  int local_dim() const;

 private:
  explicit DensityOperator(ComplexMatrix m) : matrix_(std::move(m)) {}

  ComplexMatrix matrix_;
};

/// Maximally mixed state on C^dim.
DensityOperator maximally_mixed(int dim);

/// |psi><psi| for a (not necessarily normalized) vector.
DensityOperator pure_state(const Eigen::VectorXcd& psi);

struct BlochVector {
  int n = 0;
  RealVector m;
};

/// rho = (sigma_0 + m_j sigma_j)/n. The result is Hermitian with unit trace
/// but is not checked for positivity.
ComplexMatrix bloch_encode(const BlochVector& bloch);

/// m_j = (n/2) Tr(rho sigma_j).
BlochVector bloch_decode(const DensityOperator& rho);

/// Bipartite expansion on C^n (x) C^n:
/// rho = (sigma_0(x)sigma_0 + a_j sigma_j(x)1 + b_k 1(x)sigma_k
///        + C_jk sigma_j(x)sigma_k) / n^2.
struct FanoForm {
  int n = 0;
  RealVector local_a;
  RealVector local_b;
  RealMatrix correlation;
};

FanoForm fano_decompose(const DensityOperator& rho);
ComplexMatrix fano_compose(const FanoForm& fano);

/// Tr(rho (A (x) B)) for square A, B with A.rows() * B.rows() == dim.
Complex expectation_product(const ComplexMatrix& rho, const ComplexMatrix& a,
                            const ComplexMatrix& b);

enum class Subsystem { kA, kB };

/// Reduced state of the kept subsystem: kA returns Tr_B(rho).
DensityOperator partial_trace(const DensityOperator& rho, Subsystem keep);

/// (sigma_y (x) sigma_y) conj(rho) (sigma_y (x) sigma_y); two qubits only.
DensityOperator spin_flip(const DensityOperator& rho);

/// Transposes the indices of the given tensor factor. Not necessarily
/// positive.
ComplexMatrix partial_transpose(const DensityOperator& rho, Subsystem factor = Subsystem::kB);

/// (|00> + |11>)/sqrt(2).
Eigen::VectorXcd bell_vector();

/// x |phi+><phi+| + (1 - x) 1/4, x in [0, 1].
DensityOperator werner(double x);

/// x |a><a| + (1 - x) 1/4 with |a> = cos(alpha0)|00> + sin(alpha0)|11>.
DensityOperator schmidt_mix(double x, double alpha0);

/// (1/4)(1(x)1 + sum_j d_j sigma_j (x) sigma_j). Throws kPositivity with
/// the offending eigenvalue outside the state tetrahedron.
DensityOperator standard_form_state(const std::array<double, 3>& d);

/// Spectrum of standard_form_state(d) without the positivity check,
/// ascending.
std::array<double, 4> standard_form_spectrum(const std::array<double, 3>& d);

struct WeightedState {
  double weight;
  DensityOperator state;
};

/// sum_i p_i rho_i. Weights must be nonnegative and sum to 1 within 1e-12.
DensityOperator convex_combine(std::span<const WeightedState> terms);

/// Tr(rho^2).
double purity(const DensityOperator& rho);

}  // namespace iovt
