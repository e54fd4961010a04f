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

#include "iovt/linalg.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

namespace iovt {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidDimension: return "invalid-dimension";
    case ErrorKind::kShape: return "shape";
    case ErrorKind::kBasisInconsistency: return "basis-inconsistency";
    case ErrorKind::kSymmetry: return "symmetry";
    case ErrorKind::kConvergence: return "convergence";
    case ErrorKind::kDomain: return "domain";
    case ErrorKind::kPositivity: return "positivity";
    case ErrorKind::kNormalization: return "normalization";
    case ErrorKind::kValidation: return "validation";
    case ErrorKind::kUnsupportedOrder: return "unsupported-order";
    case ErrorKind::kConfiguration: return "configuration";
    case ErrorKind::kResolution: return "resolution";
    case ErrorKind::kParse: return "parse";
  }
  return "unknown";
}

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalTolerance = 1e-12;
constexpr double kHermitianTolerance = 1e-10;

double off_diagonal_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i != j) sum += std::norm(a(i, j));
    }
  }
  return std::sqrt(sum);
}

// Cyclic Jacobi on the Hermitian part of `m`. No size limit.
EigenSystem jacobi(const ComplexMatrix& m) {
  const Eigen::Index n = m.rows();
  ComplexMatrix a = 0.5 * (m + m.adjoint());
  ComplexMatrix v = ComplexMatrix::Identity(n, n);
  const double target = kOffDiagonalTolerance * std::max(1.0, a.norm());

  bool converged = off_diagonal_norm(a) < target;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double r = std::abs(apq);
        if (r < 1e-300) continue;

        // U = diag(1, e^{-i phi}) * G with G the real Jacobi rotation that
        // annihilates the (now real) off-diagonal entry r.
        const Complex phase = std::conj(apq) / r;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * r);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        const Complex u00 = c;
        const Complex u01 = s;
        const Complex u10 = -s * phase;
        const Complex u11 = c * phase;

        for (Eigen::Index i = 0; i < n; ++i) {
          const Complex aip = a(i, p);
          const Complex aiq = a(i, q);
          a(i, p) = aip * u00 + aiq * u10;
          a(i, q) = aip * u01 + aiq * u11;
          const Complex vip = v(i, p);
          const Complex viq = v(i, q);
          v(i, p) = vip * u00 + viq * u10;
          v(i, q) = vip * u01 + viq * u11;
        }
        for (Eigen::Index j = 0; j < n; ++j) {
          const Complex apj = a(p, j);
          const Complex aqj = a(q, j);
          a(p, j) = std::conj(u00) * apj + std::conj(u10) * aqj;
          a(q, j) = std::conj(u01) * apj + std::conj(u11) * aqj;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
    converged = off_diagonal_norm(a) < target;
  }
  if (!converged) {
    throw Error(ErrorKind::kConvergence,
                "Jacobi eigensolver did not converge after " +
                    std::to_string(kMaxSweeps) + " sweeps");
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) {
    return a(x, x).real() < a(y, y).real();
  });

  EigenSystem out{RealVector(n), ComplexMatrix(n, n)};
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = a(order[k], order[k]).real();
    out.vectors.col(k) = v.col(order[k]);
  }
  return out;
}

void require_hermitian(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::kShape, "matrix is not square");
  }
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if (hermiticity_defect(m) > kHermitianTolerance * scale) {
    throw Error(ErrorKind::kSymmetry, "matrix is not Hermitian");
  }
}

}  // namespace

double hermiticity_defect(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

EigenSystem hermitian_eigensystem(const ComplexMatrix& m) {
  require_hermitian(m);
  if (m.rows() > kMaxEigenDimension) {
    throw Error(ErrorKind::kShape, "eigensolver supports dimension <= 64, got " +
                                       std::to_string(m.rows()));
  }
  return jacobi(m);
}

RealVector hermitian_eigenvalues(const ComplexMatrix& m) {
  return hermitian_eigensystem(m).values;
}

RealVector symmetric_eigenvalues(const RealMatrix& m) {
  return hermitian_eigenvalues(m.cast<Complex>());
}

ComplexMatrix psd_sqrt(const ComplexMatrix& m, double floor) {
  const EigenSystem es = hermitian_eigensystem(m);
  RealVector roots(es.values.size());
  for (Eigen::Index k = 0; k < roots.size(); ++k) {
    roots(k) = es.values(k) > floor ? std::sqrt(es.values(k)) : 0.0;
  }
  return es.vectors * roots.cast<Complex>().asDiagonal() * es.vectors.adjoint();
}

RealVector singular_values(const ComplexMatrix& a) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  const Eigen::Index count = std::min(rows, cols);
  if (count == 0) return RealVector();

  ComplexMatrix dilation = ComplexMatrix::Zero(rows + cols, rows + cols);
  dilation.topRightCorner(rows, cols) = a;
  dilation.bottomLeftCorner(cols, rows) = a.adjoint();
  const RealVector spectrum = jacobi(dilation).values;

  RealVector out(count);
  for (Eigen::Index k = 0; k < count; ++k) {
    out(k) = std::max(0.0, spectrum(spectrum.size() - 1 - k));
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

}  // namespace iovt
