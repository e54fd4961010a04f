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

#include <random>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <gtest/gtest.h>

#include "iovt/qstate.h"

namespace iovt {
namespace {

ComplexMatrix random_hermitian(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  ComplexMatrix g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) g(i, j) = Complex(normal(rng), normal(rng));
  }
  return g + g.adjoint();
}

TEST(HermitianEigensystem, IdentityHasUnitSpectrum) {
  const RealVector ev = hermitian_eigenvalues(ComplexMatrix::Identity(4, 4));
  for (int k = 0; k < 4; ++k) EXPECT_DOUBLE_EQ(ev(k), 1.0);
}

TEST(HermitianEigensystem, PauliZ) {
  ComplexMatrix z = ComplexMatrix::Zero(2, 2);
  z(0, 0) = 1.0;
  z(1, 1) = -1.0;
  const RealVector ev = hermitian_eigenvalues(z);
  EXPECT_DOUBLE_EQ(ev(0), -1.0);
  EXPECT_DOUBLE_EQ(ev(1), 1.0);
}

TEST(HermitianEigensystem, WernerSpectrum) {
  for (double x : {0.0, 0.3, 0.5, 0.9, 1.0}) {
    const RealVector ev = hermitian_eigenvalues(werner(x).matrix());
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(ev(k), (1 - x) / 4, 1e-14) << x;
    EXPECT_NEAR(ev(3), (1 + 3 * x) / 4, 1e-14) << x;
  }
}

TEST(HermitianEigensystem, MatchesEigenOracleAndReconstructs) {
  std::mt19937_64 rng(7);
  for (int dim : {1, 2, 3, 4, 7, 9, 16, 33, 64}) {
    const ComplexMatrix m = random_hermitian(dim, rng);
    const EigenSystem es = hermitian_eigensystem(m);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> oracle(m);
    EXPECT_LT((es.values - oracle.eigenvalues()).cwiseAbs().maxCoeff(), 1e-10 * dim) << dim;
    for (int k = 1; k < dim; ++k) EXPECT_LE(es.values(k - 1), es.values(k));

    const ComplexMatrix rebuilt =
        es.vectors * es.values.cast<Complex>().asDiagonal() * es.vectors.adjoint();
    EXPECT_LT((rebuilt - m).norm(), 1e-10 * std::max(1.0, m.norm())) << dim;
    EXPECT_LT((es.vectors.adjoint() * es.vectors - ComplexMatrix::Identity(dim, dim)).norm(), 1e-12 * dim);
  }
}

TEST(HermitianEigensystem, DegenerateSpectrum) {
  // Rotated diag(1,1,2,2) must come back exactly sorted with a unitary basis.
  std::mt19937_64 rng(3);
  const ComplexMatrix h = random_hermitian(4, rng);
  const ComplexMatrix u = Eigen::SelfAdjointEigenSolver<ComplexMatrix>(h).eigenvectors();
  RealVector d(4);
  d << 1, 1, 2, 2;
  const ComplexMatrix m = u * d.cast<Complex>().asDiagonal() * u.adjoint();
  const RealVector ev = hermitian_eigenvalues(m);
  EXPECT_LT((ev - d).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(HermitianEigensystem, RejectsNonHermitian) {
  ComplexMatrix m = ComplexMatrix::Identity(3, 3);
  m(0, 1) = 0.5;
  try {
    hermitian_eigensystem(m);
    FAIL() << "expected a symmetry error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kSymmetry);
  }
}

TEST(HermitianEigensystem, RejectsOversizedInput) {
  EXPECT_THROW(hermitian_eigensystem(ComplexMatrix::Identity(65, 65)), Error);
}

TEST(SingularValues, MatchEigenSvd) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> normal;
  for (auto [r, c] : {std::pair{3, 3}, {2, 5}, {6, 4}, {15, 15}}) {
    ComplexMatrix a(r, c);
    for (int i = 0; i < r; ++i) {
      for (int j = 0; j < c; ++j) a(i, j) = Complex(normal(rng), normal(rng));
    }
    const RealVector sv = singular_values(a);
    Eigen::JacobiSVD<ComplexMatrix> oracle(a);
    EXPECT_LT((sv - oracle.singularValues()).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(SingularValues, RankDeficientKeepsZerosExact) {
  // Rank one: the trailing singular values must be at round-off, not sqrt(round-off).
  Eigen::VectorXcd u = Eigen::VectorXcd::Ones(4);
  const ComplexMatrix a = u * u.adjoint();
  const RealVector sv = singular_values(a);
  EXPECT_NEAR(sv(0), 4.0, 1e-14);
  for (int k = 1; k < 4; ++k) EXPECT_LT(sv(k), 1e-14);
}

TEST(PsdSqrt, SquaresBack) {
  std::mt19937_64 rng(5);
  const ComplexMatrix h = random_hermitian(5, rng);
  const ComplexMatrix psd = h * h;
  const ComplexMatrix root = psd_sqrt(psd, 0.0);
  EXPECT_LT((root * root - psd).norm(), 1e-10 * psd.norm());
  EXPECT_LT(hermiticity_defect(root), 1e-12 * psd.norm());
}

TEST(Kron, MatchesIndexFormula) {
  std::mt19937_64 rng(9);
  const ComplexMatrix a = random_hermitian(2, rng);
  const ComplexMatrix b = random_hermitian(3, rng);
  const ComplexMatrix k = kron(a, b);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 3; ++q) EXPECT_EQ(k(i * 3 + p, j * 3 + q), a(i, j) * b(p, q));
}

}  // namespace
}  // namespace iovt
