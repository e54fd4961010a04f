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

#include "iovt/qstate.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "iovt/su_basis.h"

namespace iovt {

namespace {

int require_bipartite(int dim) {
  const int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(dim))));
  if (n < 2 || n * n != dim) {
    throw Error(ErrorKind::kShape,
                "dimension " + std::to_string(dim) + " is not n*n for a supported n >= 2");
  }
  return n;
}

void require_two_qubit(const DensityOperator& rho, const char* what) {
  if (rho.dim() != 4) {
    throw Error(ErrorKind::kInvalidDimension,
                std::string(what) + " requires a two-qubit state, got dimension " +
                    std::to_string(rho.dim()));
  }
}

void require_unit_interval(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw Error(ErrorKind::kDomain, "mixing parameter x must lie in [0, 1], got " +
                                        std::to_string(x));
  }
}

ComplexMatrix sigma_y_pair() {
  const std::vector<ComplexMatrix> pauli = generalized_pauli(2);
  return kron(pauli[2], pauli[2]);
}

}  // namespace

DensityOperator DensityOperator::from_matrix(const ComplexMatrix& matrix) {
  if (matrix.rows() == 0 || matrix.rows() != matrix.cols()) {
    throw Error(ErrorKind::kValidation, "density operator must be a nonempty square matrix");
  }
  if (!matrix.allFinite()) {
    throw Error(ErrorKind::kValidation, "density operator has non-finite entries");
  }
  if (hermiticity_defect(matrix) > kHermitianTolerance) {
    throw Error(ErrorKind::kValidation, "density operator is not Hermitian (defect " +
                                            std::to_string(hermiticity_defect(matrix)) + ")");
  }
  ComplexMatrix hermitian = 0.5 * (matrix + matrix.adjoint());
  const double trace = hermitian.trace().real();
  if (std::abs(trace - 1.0) > kTraceTolerance) {
    throw Error(ErrorKind::kValidation,
                "density operator trace is " + std::to_string(trace) + ", expected 1");
  }
  const double min_eigenvalue = hermitian_eigenvalues(hermitian)(0);
  if (min_eigenvalue < kPositivityTolerance) {
    throw Error(ErrorKind::kValidation, "density operator is not positive (min eigenvalue " +
                                            std::to_string(min_eigenvalue) + ")");
  }
  return DensityOperator(std::move(hermitian));
}

int DensityOperator::local_dim() const {
  const int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(dim()))));
  return n * n == dim() ? n : 0;
}

DensityOperator maximally_mixed(int dim) {
  return DensityOperator::from_matrix(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

DensityOperator pure_state(const Eigen::VectorXcd& psi) {
  const double norm = psi.norm();
  if (norm == 0.0) throw Error(ErrorKind::kDomain, "cannot normalize the zero vector");
  const Eigen::VectorXcd unit = psi / norm;
  return DensityOperator::from_matrix(unit * unit.adjoint());
}

ComplexMatrix bloch_encode(const BlochVector& bloch) {
  if (bloch.n < 2 || bloch.m.size() != bloch.n * bloch.n - 1) {
    throw Error(ErrorKind::kShape, "Bloch vector length must be n^2 - 1");
  }
  const std::vector<ComplexMatrix> sigma = generalized_pauli(bloch.n);
  ComplexMatrix rho = sigma[0];
  for (Eigen::Index j = 0; j < bloch.m.size(); ++j) rho += bloch.m(j) * sigma[j + 1];
  return rho / static_cast<double>(bloch.n);
}

BlochVector bloch_decode(const DensityOperator& rho) {
  const int n = rho.dim();
  const std::vector<ComplexMatrix> sigma = generalized_pauli(n);
  BlochVector out{n, RealVector(n * n - 1)};
  for (int j = 1; j < n * n; ++j) {
    out.m(j - 1) = 0.5 * n * (rho.matrix() * sigma[j]).trace().real();
  }
  return out;
}

Complex expectation_product(const ComplexMatrix& rho, const ComplexMatrix& a,
                            const ComplexMatrix& b) {
  const Eigen::Index na = a.rows();
  const Eigen::Index nb = b.rows();
  if (na * nb != rho.rows()) throw Error(ErrorKind::kShape, "factor sizes do not match state");
  // Tr(rho (A(x)B)) = sum rho[(k,l),(i,j)] A(i,k) B(j,l)
  Complex sum = 0.0;
  for (Eigen::Index i = 0; i < na; ++i) {
    for (Eigen::Index k = 0; k < na; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (Eigen::Index j = 0; j < nb; ++j) {
        for (Eigen::Index l = 0; l < nb; ++l) {
          sum += rho(k * nb + l, i * nb + j) * aik * b(j, l);
        }
      }
    }
  }
  return sum;
}

FanoForm fano_decompose(const DensityOperator& rho) {
  const int n = require_bipartite(rho.dim());
  const int g = n * n - 1;
  const std::vector<ComplexMatrix> sigma = generalized_pauli(n);
  const ComplexMatrix rho_a = partial_trace(rho, Subsystem::kA).matrix();
  const ComplexMatrix rho_b = partial_trace(rho, Subsystem::kB).matrix();

  FanoForm f{n, RealVector(g), RealVector(g), RealMatrix(g, g)};
  for (int j = 1; j <= g; ++j) {
    f.local_a(j - 1) = 0.5 * n * (rho_a * sigma[j]).trace().real();
    f.local_b(j - 1) = 0.5 * n * (rho_b * sigma[j]).trace().real();
  }
  const double scale = 0.25 * n * n;
  for (int j = 1; j <= g; ++j) {
    for (int k = 1; k <= g; ++k) {
      f.correlation(j - 1, k - 1) =
          scale * expectation_product(rho.matrix(), sigma[j], sigma[k]).real();
    }
  }
  return f;
}

ComplexMatrix fano_compose(const FanoForm& f) {
  const int n = f.n;
  const int g = n * n - 1;
  if (n < 2 || f.local_a.size() != g || f.local_b.size() != g || f.correlation.rows() != g ||
      f.correlation.cols() != g) {
    throw Error(ErrorKind::kShape, "Fano form components do not match n");
  }
  const std::vector<ComplexMatrix> sigma = generalized_pauli(n);
  ComplexMatrix rho = kron(sigma[0], sigma[0]);
  for (int j = 1; j <= g; ++j) {
    rho += f.local_a(j - 1) * kron(sigma[j], sigma[0]);
    rho += f.local_b(j - 1) * kron(sigma[0], sigma[j]);
  }
  for (int j = 1; j <= g; ++j) {
    // sum_k C_jk sigma_k first, then one Kronecker product per row.
    ComplexMatrix right = ComplexMatrix::Zero(n, n);
    for (int k = 1; k <= g; ++k) right += f.correlation(j - 1, k - 1) * sigma[k];
    rho += kron(sigma[j], right);
  }
  return rho / static_cast<double>(n * n);
}

DensityOperator partial_trace(const DensityOperator& rho, Subsystem keep) {
  const int n = require_bipartite(rho.dim());
  const ComplexMatrix& m = rho.matrix();
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int s = 0; s < n; ++s) {
        out(i, j) += keep == Subsystem::kA ? m(i * n + s, j * n + s) : m(s * n + i, s * n + j);
      }
    }
  }
  return DensityOperator::from_matrix(out);
}

DensityOperator spin_flip(const DensityOperator& rho) {
  require_two_qubit(rho, "spin flip");
  const ComplexMatrix yy = sigma_y_pair();
  return DensityOperator::from_matrix(yy * rho.matrix().conjugate() * yy);
}

ComplexMatrix partial_transpose(const DensityOperator& rho, Subsystem factor) {
  const int n = require_bipartite(rho.dim());
  const ComplexMatrix& m = rho.matrix();
  ComplexMatrix out(m.rows(), m.cols());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        for (int l = 0; l < n; ++l) {
          // <ij| rho |kl>, with i,k on A and j,l on B.
          const Complex v = m(i * n + j, k * n + l);
          if (factor == Subsystem::kB) {
            out(i * n + l, k * n + j) = v;
          } else {
            out(k * n + j, i * n + l) = v;
          }
        }
      }
    }
  }
  return out;
}

Eigen::VectorXcd bell_vector() {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  return v;
}

DensityOperator werner(double x) {
  require_unit_interval(x);
  const Eigen::VectorXcd phi = bell_vector();
  return DensityOperator::from_matrix(x * phi * phi.adjoint() +
                                      (1.0 - x) * ComplexMatrix::Identity(4, 4) / 4.0);
}

DensityOperator schmidt_mix(double x, double alpha0) {
  require_unit_interval(x);
  if (!std::isfinite(alpha0)) throw Error(ErrorKind::kDomain, "alpha0 must be finite");
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(4);
  v(0) = std::cos(alpha0);
  v(3) = std::sin(alpha0);
  return DensityOperator::from_matrix(x * v * v.adjoint() +
                                      (1.0 - x) * ComplexMatrix::Identity(4, 4) / 4.0);
}

std::array<double, 4> standard_form_spectrum(const std::array<double, 3>& d) {
  // Bell-basis eigenvalues (phi+, phi-, psi+, psi-).
  std::array<double, 4> ev = {
      0.25 * (1.0 + d[0] - d[1] + d[2]),
      0.25 * (1.0 - d[0] + d[1] + d[2]),
      0.25 * (1.0 + d[0] + d[1] - d[2]),
      0.25 * (1.0 - d[0] - d[1] - d[2]),
  };
  std::sort(ev.begin(), ev.end());
  return ev;
}

DensityOperator standard_form_state(const std::array<double, 3>& d) {
  for (double v : d) {
    if (!std::isfinite(v)) throw Error(ErrorKind::kDomain, "standard-form parameters must be finite");
  }
  const double min_eigenvalue = standard_form_spectrum(d)[0];
  if (min_eigenvalue < DensityOperator::kPositivityTolerance) {
    throw Error(ErrorKind::kPositivity,
                "standard-form parameters lie outside the state tetrahedron (eigenvalue " +
                    std::to_string(min_eigenvalue) + ")");
  }
  const std::vector<ComplexMatrix> sigma = generalized_pauli(2);
  ComplexMatrix rho = ComplexMatrix::Identity(4, 4);
  for (int j = 0; j < 3; ++j) rho += d[j] * kron(sigma[j + 1], sigma[j + 1]);
  return DensityOperator::from_matrix(rho / 4.0);
}

DensityOperator convex_combine(std::span<const WeightedState> terms) {
  if (terms.empty()) throw Error(ErrorKind::kNormalization, "no terms to combine");
  const int dim = terms.front().state.dim();
  double total = 0.0;
  ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
  for (const WeightedState& t : terms) {
    if (!(t.weight >= 0.0)) {
      throw Error(ErrorKind::kNormalization, "weights must be nonnegative");
    }
    if (t.state.dim() != dim) throw Error(ErrorKind::kShape, "states have unequal dimensions");
    total += t.weight;
    sum += t.weight * t.state.matrix();
  }
  if (std::abs(total - 1.0) > 1e-12) {
    throw Error(ErrorKind::kNormalization,
                "weights sum to " + std::to_string(total) + ", expected 1");
  }
  return DensityOperator::from_matrix(sum);
}

double purity(const DensityOperator& rho) {
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  return rho.matrix().squaredNorm();
}

}  // namespace iovt
