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
#include <map>
#include <string>
#include <vector>

#include "iovt/qstate.h"

namespace iovt {

/// Default slack on every inequality criterion.
inline constexpr double kCriterionTolerance = 1e-9;

enum class SeparabilityStatus { kSeparable, kEntangled, kUndecided };

std::string_view to_string(SeparabilityStatus status);

/// Outcome of classify(). Separable only ever comes from a sufficient
/// criterion and Entangled only from a violated necessary one.
struct SeparabilityVerdict {
  SeparabilityStatus status = SeparabilityStatus::kUndecided;
  std::string decided_by;
  std::map<std::string, double> witnesses;
};

/// Wootters concurrence max(0, l1 - l2 - l3 - l4) with l_j the square roots
/// of the eigenvalues of rho rho~, descending.
double concurrence_wootters(const DensityOperator& rho);

/// Same ordering but with l_j the eigenvalues of rho rho~ themselves.
double concurrence_variant(const DensityOperator& rho);

/// Square roots of the spectrum of rho rho~, descending. Computed as the singular
/// values of sqrt(rho) sqrt(rho~).
std::array<double, 4> spin_flip_roots(const DensityOperator& rho);

/// Tr(rho rho~).
double tr_rho_rhotilde(const DensityOperator& rho);

/// D(rho) = f_2^R~(rho)/8 - 1/2.
double d_measure(const DensityOperator& rho);

/// Trace norm (sum of singular values).
double kyfan_norm(const RealMatrix& c);

struct NecessaryCriterion {
  bool passes;
  double value;
  double bound;
};

/// ||C||_KF <= n(n-1)/2 for every separable state, with C the Fano
/// correlation matrix.
NecessaryCriterion devicente_necessary(const DensityOperator& rho,
                                       double tolerance = kCriterionTolerance);

struct SufficientCriterion {
  bool passes;
  double value;
};

/// sqrt(2(n-1)/n)(|a| + |b|) + (2(n-1)/n)||C||_KF <= 1 implies separable.
SufficientCriterion devicente_sufficient(const DensityOperator& rho,
                                         double tolerance = kCriterionTolerance);

struct OmegaCriterion {
  bool applicable;  // Omega(rho) = 0 to within tolerance
  bool passes;
  double omega_max;
  double value;  // (2(n-1)/n)||C||_KF
};

/// For states with vanishing antisymmetric coefficients,
/// (2(n-1)/n)||C||_KF <= 1 implies separable.
OmegaCriterion omega_sufficient(const DensityOperator& rho,
                                double tolerance = kCriterionTolerance);

struct PptResult {
  bool separable;
  double min_eigenvalue;
};

/// Peres-Horodecki test on two qubits, where it is decisive.
PptResult ppt_check(const DensityOperator& rho, double tolerance = kCriterionTolerance);

struct OctahedronResult {
  bool separable;
  double l1;
};

/// |d1| + |d2| + |d3| <= 1 for a standard-form triple. Throws kPositivity
/// outside the state tetrahedron.
OctahedronResult octahedron_check(const std::array<double, 3>& d,
                                  double tolerance = kCriterionTolerance);

struct LtildeSignature {
  std::vector<double> eigenvalues;  // ascending
  bool positive_definite;
  bool positive_semidefinite;
};

/// Spectrum of -x L(|phi+><phi+|) + (1 - x) L(rho*) for the Werner family.
LtildeSignature werner_ltilde_signature(double x);

/// Runs necessary criteria, then sufficient ones, then (two qubits) PPT.
SeparabilityVerdict classify(const DensityOperator& rho, double tolerance = kCriterionTolerance);

}  // namespace iovt
