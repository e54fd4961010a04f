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

#include <span>
#include <vector>

#include "iovt/qstate.h"

namespace iovt {

/// Hermitian operators R(X_j) representing the traceless generators of a
/// Lie algebra. The identity components are not part of the index set.
struct Representation {
  struct Label {
    Subsystem subsystem;
    int basis_index;  // j >= 1 into the generalized Pauli basis
  };

  int n = 0;
  int dim = 0;  // Hilbert-space dimension the operators act on
  std::vector<ComplexMatrix> ops;
  std::vector<Label> labels;

  int size() const { return static_cast<int>(ops.size()); }
};

/// {sigma_j (x) 1} followed by {1 (x) sigma_j}, j = 1..n^2-1.
Representation product_representation(int n);

/// sigma_j, j = 1..n^2-1, acting on C^n. Labels report subsystem A.
Representation defining_representation(int n);

inline constexpr int kMaxTensorOrder = 4;

/// Coefficient array T_{i1..ik} of an order-k tensor field evaluated on a
/// state, stored row-major (last index fastest).
class TensorCoefficients {
 public:
  TensorCoefficients(int order, int extent);

  int order() const { return order_; }
  int extent() const { return extent_; }

  Complex& at(std::span<const int> index) { return values_[offset(index)]; }
  Complex at(std::span<const int> index) const { return values_[offset(index)]; }

  // Order-2 accessors.
  Complex& operator()(int j, int k) { return values_[static_cast<std::size_t>(j) * extent_ + k]; }
  Complex operator()(int j, int k) const {
    return values_[static_cast<std::size_t>(j) * extent_ + k];
  }

  std::span<Complex> values() { return values_; }
  std::span<const Complex> values() const { return values_; }

  /// Order-2 coefficients as a complex matrix.
  ComplexMatrix matrix() const;

 private:
  std::size_t offset(std::span<const int> index) const;

  int order_;
  int extent_;
  std::vector<Complex> values_;
};

/// T_{i1..ik} = Tr(rho R_{i1} R_{i2} ... R_{ik}), 1 <= k <= 4.
TensorCoefficients tensor_coefficients(const DensityOperator& rho, const Representation& rep,
                                       int order);

/// Order-2 split T = L + i Omega with L_jk = Tr(rho [R_j,R_k]_+) real
/// symmetric and Omega_jk = Tr(rho [R_j,R_k]_-) real antisymmetric.
struct SymmetricSplit {
  RealMatrix symmetric;
  RealMatrix antisymmetric;
};

SymmetricSplit split_sym_antisym(const TensorCoefficients& t);

/// K_jk = Tr(rho R_j R_k) - Tr(rho R_j) Tr(rho R_k): the order-2 coefficients
/// of the nonlinear realization R~(X_j) rho = [R(X_j) - rho(R(X_j))] rho.
TensorCoefficients covariance_coefficients(const DensityOperator& rho, const Representation& rep);

/// sum |T_{i1..ik}|^2 (orthonormal coframe).
double inner_product(const TensorCoefficients& t);

enum class Realization { kLinear, kCovariance };

/// f_k(rho) = sum_m a_m <theta|theta>^m. The covariance realization is only
/// defined at order 2.
double monotone_candidate(const DensityOperator& rho, Realization mode, int order,
                          std::span<const double> coefficients);

/// f_2^R: inner product of the linear order-2 coefficients under the
/// product representation.
double f2_linear(const DensityOperator& rho);

/// f_2^R~: the same for the covariance coefficients.
double f2_covariance(const DensityOperator& rho);

}  // namespace iovt
