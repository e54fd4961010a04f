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

#include <gtest/gtest.h>

namespace iovt {
namespace {

const Complex kI{0.0, 1.0};

TEST(GeneralizedPauli, QubitBasisIsPauliXYZ) {
  const std::vector<ComplexMatrix> s = generalized_pauli(2);
  ASSERT_EQ(s.size(), 4u);
  ComplexMatrix x(2, 2), y(2, 2), z(2, 2);
  x << 0, 1, 1, 0;
  y << 0, -kI, kI, 0;
  z << 1, 0, 0, -1;
  EXPECT_EQ(s[0], ComplexMatrix::Identity(2, 2));
  EXPECT_EQ(s[1], x);
  EXPECT_EQ(s[2], y);
  EXPECT_EQ(s[3], z);
  EXPECT_DOUBLE_EQ((s[1] * s[1]).trace().real(), 2.0);
}

TEST(GeneralizedPauli, InvariantsHoldUpToN5) {
  for (int n = 2; n <= 5; ++n) {
    const std::vector<ComplexMatrix> s = generalized_pauli(n);
    ASSERT_EQ(static_cast<int>(s.size()), n * n);
    EXPECT_EQ(s[0], ComplexMatrix::Identity(n, n));
    EXPECT_DOUBLE_EQ((s[0] * s[0]).trace().real(), n);
    for (int j = 1; j < n * n; ++j) {
      EXPECT_NEAR(std::abs(s[j].trace()), 0.0, 1e-15);
      EXPECT_EQ(hermiticity_defect(s[j]), 0.0);
      for (int k = 1; k < n * n; ++k) {
        const Complex t = (s[j] * s[k]).trace();
        EXPECT_NEAR(t.real(), j == k ? 2.0 : 0.0, 1e-14) << n << ' ' << j << ' ' << k;
        EXPECT_NEAR(t.imag(), 0.0, 1e-14);
      }
    }
  }
}

TEST(GeneralizedPauli, RejectsSmallDimension) {
  for (int n : {-1, 0, 1}) {
    try {
      generalized_pauli(n);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kInvalidDimension);
    }
  }
}

TEST(StructureConstants, QubitIsLeviCivita) {
  const HermitianBasis b = generate_basis(2);
  for (int j = 1; j <= 3; ++j) {
    for (int k = 1; k <= 3; ++k) {
      for (int l = 1; l <= 3; ++l) {
        // Levi-Civita via the product of index differences.
        const double eps = (j - k) * (k - l) * (l - j) / 2.0;
        EXPECT_NEAR(b.c(j, k, l), eps, 1e-15);
        EXPECT_NEAR(b.d(j, k, l), 0.0, 1e-15);
      }
    }
  }
  EXPECT_DOUBLE_EQ(b.c(1, 2, 3), 1.0);
}

TEST(StructureConstants, GellMannD118) {
  const HermitianBasis b = generate_basis(3);
  EXPECT_NEAR(b.d(1, 1, 8), 1.0 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(b.d(1, 1, 8), 0.57735, 1e-5);
}

TEST(StructureConstants, SymmetriesByEnumeration) {
  for (int n = 2; n <= 4; ++n) {
    const HermitianBasis b = generate_basis(n);
    const int g = b.generators();
    for (int j = 1; j <= g; ++j) {
      for (int k = 1; k <= g; ++k) {
        for (int l = 1; l <= g; ++l) {
          const double c = b.c(j, k, l);
          const double d = b.d(j, k, l);
          EXPECT_NEAR(c, -b.c(k, j, l), 1e-14);
          EXPECT_NEAR(c, b.c(k, l, j), 1e-14);
          EXPECT_NEAR(c, -b.c(j, l, k), 1e-14);
          EXPECT_NEAR(d, b.d(k, j, l), 1e-14);
          EXPECT_NEAR(d, b.d(k, l, j), 1e-14);
          EXPECT_NEAR(d, b.d(j, l, k), 1e-14);
        }
        EXPECT_EQ(b.c(j, j, k), 0.0);
      }
    }
  }
}

TEST(StructureConstants, ProductReconstructionIdentity) {
  for (int n = 2; n <= 4; ++n) {
    const std::vector<ComplexMatrix> s = generalized_pauli(n);
    for (int j = 1; j < n * n; ++j) {
      for (int k = 1; k < n * n; ++k) {
        const ComplexMatrix rebuilt = anticommutator(s[j], s[k]) + kI * commutator(s[j], s[k]);
        EXPECT_LT((rebuilt - s[j] * s[k]).cwiseAbs().maxCoeff(), 1e-14);
      }
    }
  }
}

TEST(StructureConstants, DetectsInconsistentBasis) {
  std::vector<ComplexMatrix> s = generalized_pauli(2);
  s[3] *= 1.5;  // no longer trace-orthonormal
  try {
    structure_constants(s);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kBasisInconsistency);
  }
}

}  // namespace
}  // namespace iovt
