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

#include "iovt/entanglement.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "iovt/su_basis.h"
#include "iovt/tensor_field.h"

namespace iovt {

namespace {

// Eigenvalues of rho at or below this are zeroed before taking sqrt(rho);
// Jacobi round-off on an exact zero would otherwise surface as ~1e-8 after
// the square root.
constexpr double kSqrtFloor = 1e-14;

void require_two_qubit(const DensityOperator& rho, const char* what) {
  if (rho.dim() != 4) {
    throw Error(ErrorKind::kInvalidDimension,
                std::string(what) + " requires a two-qubit state, got dimension " +
                    std::to_string(rho.dim()));
  }
}

int require_bipartite(const DensityOperator& rho) {
  const int n = rho.local_dim();
  if (n < 2) {
    throw Error(ErrorKind::kShape,
                "dimension " + std::to_string(rho.dim()) + " is not n*n for a supported n >= 2");
  }
  return n;
}

ComplexMatrix sigma_y_pair() {
  const std::vector<ComplexMatrix> pauli = generalized_pauli(2);
  return kron(pauli[2], pauli[2]);
}

RealMatrix symmetric_coefficients(const DensityOperator& rho) {
  const Representation rep = product_representation(rho.local_dim());
  return split_sym_antisym(tensor_coefficients(rho, rep, 2)).symmetric;
}

}  // namespace

std::string_view to_string(SeparabilityStatus status) {
  switch (status) {
    case SeparabilityStatus::kSeparable: return "separable";
    case SeparabilityStatus::kEntangled: return "entangled";
    case SeparabilityStatus::kUndecided: return "undecided";
  }
  return "undecided";
}

std::array<double, 4> spin_flip_roots(const DensityOperator& rho) {
  require_two_qubit(rho, "concurrence");
  const ComplexMatrix yy = sigma_y_pair();
  const ComplexMatrix root = psd_sqrt(rho.matrix(), kSqrtFloor);
  // sqrt(rho~) = (Y(x)Y) conj(sqrt(rho)) (Y(x)Y)
  const ComplexMatrix root_tilde = yy * root.conjugate() * yy;
  const RealVector sv = singular_values(root * root_tilde);
  return {sv(0), sv(1), sv(2), sv(3)};
}

double concurrence_wootters(const DensityOperator& rho) {
  const std::array<double, 4> l = spin_flip_roots(rho);
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

double concurrence_variant(const DensityOperator& rho) {
  std::array<double, 4> l = spin_flip_roots(rho);
  for (double& v : l) v *= v;
  return std::max(0.0, l[0] - l[1] - l[2] - l[3]);
}

double tr_rho_rhotilde(const DensityOperator& rho) {
  require_two_qubit(rho, "Tr(rho rho~)");
  return (rho.matrix() * spin_flip(rho).matrix()).trace().real();
}

double d_measure(const DensityOperator& rho) {
  require_two_qubit(rho, "D measure");
  return f2_covariance(rho) / 8.0 - 0.5;
}

double kyfan_norm(const RealMatrix& c) {
  if (c.size() == 0) return 0.0;
  return singular_values(c.cast<Complex>()).sum();
}

NecessaryCriterion devicente_necessary(const DensityOperator& rho, double tolerance) {
  const int n = require_bipartite(rho);
  const double value = kyfan_norm(fano_decompose(rho).correlation);
  const double bound = 0.5 * n * (n - 1);
  return {value <= bound + tolerance, value, bound};
}

SufficientCriterion devicente_sufficient(const DensityOperator& rho, double tolerance) {
  const int n = require_bipartite(rho);
  const FanoForm f = fano_decompose(rho);
  const double factor = 2.0 * (n - 1) / n;
  const double value = std::sqrt(factor) * (f.local_a.norm() + f.local_b.norm()) +
                       factor * kyfan_norm(f.correlation);
  return {value <= 1.0 + tolerance, value};
}

OmegaCriterion omega_sufficient(const DensityOperator& rho, double tolerance) {
  const int n = require_bipartite(rho);
  const Representation rep = product_representation(n);
  const RealMatrix omega = split_sym_antisym(tensor_coefficients(rho, rep, 2)).antisymmetric;
  const double omega_max = omega.size() ? omega.cwiseAbs().maxCoeff() : 0.0;
  const double value = 2.0 * (n - 1) / n * kyfan_norm(fano_decompose(rho).correlation);
  const bool applicable = omega_max < tolerance;
  return {applicable, applicable && value <= 1.0 + tolerance, omega_max, value};
}

PptResult ppt_check(const DensityOperator& rho, double tolerance) {
  require_two_qubit(rho, "PPT check");
  const double min_eigenvalue = hermitian_eigenvalues(partial_transpose(rho))(0);
  return {min_eigenvalue >= -tolerance, min_eigenvalue};
}

OctahedronResult octahedron_check(const std::array<double, 3>& d, double tolerance) {
  const double min_eigenvalue = standard_form_spectrum(d)[0];
  if (min_eigenvalue < DensityOperator::kPositivityTolerance) {
    throw Error(ErrorKind::kPositivity,
                "standard-form parameters lie outside the state tetrahedron (eigenvalue " +
                    std::to_string(min_eigenvalue) + ")");
  }
  const double l1 = std::abs(d[0]) + std::abs(d[1]) + std::abs(d[2]);
  return {l1 <= 1.0 + tolerance, l1};
}

LtildeSignature werner_ltilde_signature(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw Error(ErrorKind::kDomain, "x must lie in [0, 1], got " + std::to_string(x));
  }
  const RealMatrix bell = symmetric_coefficients(werner(1.0));
  const RealMatrix mixed = symmetric_coefficients(werner(0.0));
  const RealMatrix ltilde = -x * bell + (1.0 - x) * mixed;
  const RealVector ev = symmetric_eigenvalues(ltilde);

  LtildeSignature out;
  out.eigenvalues.assign(ev.data(), ev.data() + ev.size());
  out.positive_definite = ev(0) > kCriterionTolerance;
  out.positive_semidefinite = ev(0) >= -kCriterionTolerance;
  return out;
}

SeparabilityVerdict classify(const DensityOperator& rho, double tolerance) {
  const int n = require_bipartite(rho);
  SeparabilityVerdict verdict;
  auto& w = verdict.witnesses;
  w["tolerance"] = tolerance;

  const FanoForm f = fano_decompose(rho);
  w["local_a_norm"] = f.local_a.norm();
  w["local_b_norm"] = f.local_b.norm();

  const NecessaryCriterion necessary = devicente_necessary(rho, tolerance);
  w["kyfan_norm"] = necessary.value;
  w["necessary_bound"] = necessary.bound;

  const SufficientCriterion sufficient = devicente_sufficient(rho, tolerance);
  w["sufficient_value"] = sufficient.value;

  const OmegaCriterion omega = omega_sufficient(rho, tolerance);
  w["omega_max"] = omega.omega_max;
  w["omega_value"] = omega.value;

  if (!necessary.passes) {
    verdict.status = SeparabilityStatus::kEntangled;
    verdict.decided_by = "devicente_necessary";
  } else if (sufficient.passes) {
    verdict.status = SeparabilityStatus::kSeparable;
    verdict.decided_by = "devicente_sufficient";
  } else if (omega.passes) {
    verdict.status = SeparabilityStatus::kSeparable;
    verdict.decided_by = "omega_sufficient";
  }

  if (n == 2) {
    const PptResult ppt = ppt_check(rho, tolerance);
    w["ppt_min_eigenvalue"] = ppt.min_eigenvalue;
    if (verdict.status == SeparabilityStatus::kUndecided) {
      verdict.status = ppt.separable ? SeparabilityStatus::kSeparable : SeparabilityStatus::kEntangled;
      verdict.decided_by = "ppt";
    }
  }
  if (verdict.status == SeparabilityStatus::kUndecided) verdict.decided_by = "none";
  return verdict;
}

}  // namespace iovt
