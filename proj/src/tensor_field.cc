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

#include "iovt/tensor_field.h"

#include <string>

#include "iovt/su_basis.h"

namespace iovt {

namespace {

Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a.transpose().cwiseProduct(b).sum();
}

void require_state_matches(const DensityOperator& rho, const Representation& rep) {
  if (rho.dim() != rep.dim) {
    throw Error(ErrorKind::kShape, "state dimension " + std::to_string(rho.dim()) +
                                       " does not match representation dimension " +
                                       std::to_string(rep.dim));
  }
}

// Depth-first over index prefixes; `prefix` holds rho R_{i1} ... R_{im}.
void fill_coefficients(const ComplexMatrix& prefix, const Representation& rep, int depth,
                       std::size_t offset, TensorCoefficients& out) {
  const int extent = rep.size();
  auto values = out.values();
  if (depth == out.order() - 1) {
    for (int i = 0; i < extent; ++i) values[offset * extent + i] = trace_of_product(prefix, rep.ops[i]);
    return;
  }
  for (int i = 0; i < extent; ++i) {
    fill_coefficients(prefix * rep.ops[i], rep, depth + 1, offset * extent + i, out);
  }
}

}  // namespace

Representation product_representation(int n) {
  const std::vector<ComplexMatrix> sigma = generalized_pauli(n);
  Representation rep;
  rep.n = n;
  rep.dim = n * n;
  for (int j = 1; j < n * n; ++j) {
    rep.ops.push_back(kron(sigma[j], sigma[0]));
    rep.labels.push_back({Subsystem::kA, j});
  }
  for (int j = 1; j < n * n; ++j) {
    rep.ops.push_back(kron(sigma[0], sigma[j]));
    rep.labels.push_back({Subsystem::kB, j});
  }
  return rep;
}

Representation defining_representation(int n) {
  std::vector<ComplexMatrix> sigma = generalized_pauli(n);
  Representation rep;
  rep.n = n;
  rep.dim = n;
  for (int j = 1; j < n * n; ++j) {
    rep.ops.push_back(std::move(sigma[j]));
    rep.labels.push_back({Subsystem::kA, j});
  }
  return rep;
}

TensorCoefficients::TensorCoefficients(int order, int extent) : order_(order), extent_(extent) {
  if (order < 1 || order > kMaxTensorOrder) {
    throw Error(ErrorKind::kUnsupportedOrder,
                "tensor order must be in [1, 4], got " + std::to_string(order));
  }
  std::size_t size = 1;
  for (int k = 0; k < order; ++k) size *= static_cast<std::size_t>(extent);
  values_.assign(size, Complex{});
}

std::size_t TensorCoefficients::offset(std::span<const int> index) const {
  if (static_cast<int>(index.size()) != order_) {
    throw Error(ErrorKind::kShape, "index rank does not match tensor order");
  }
  std::size_t off = 0;
  for (int i : index) off = off * extent_ + static_cast<std::size_t>(i);
  return off;
}

ComplexMatrix TensorCoefficients::matrix() const {
  if (order_ != 2) throw Error(ErrorKind::kShape, "matrix view requires order 2");
  ComplexMatrix m(extent_, extent_);
  for (int j = 0; j < extent_; ++j) {
    for (int k = 0; k < extent_; ++k) m(j, k) = (*this)(j, k);
  }
  return m;
}

TensorCoefficients tensor_coefficients(const DensityOperator& rho, const Representation& rep,
                                       int order) {
  require_state_matches(rho, rep);
  TensorCoefficients out(order, rep.size());
  fill_coefficients(rho.matrix(), rep, 0, 0, out);
  return out;
}

SymmetricSplit split_sym_antisym(const TensorCoefficients& t) {
  if (t.order() != 2) throw Error(ErrorKind::kShape, "symmetric split requires order 2");
  const ComplexMatrix m = t.matrix();
  const ComplexMatrix mt = m.transpose();
  return {0.5 * (m + mt).real(), 0.5 * (m - mt).imag()};
}

TensorCoefficients covariance_coefficients(const DensityOperator& rho, const Representation& rep) {
  TensorCoefficients t = tensor_coefficients(rho, rep, 2);
  std::vector<double> first(static_cast<std::size_t>(rep.size()));
  for (int j = 0; j < rep.size(); ++j) {
    first[j] = trace_of_product(rho.matrix(), rep.ops[j]).real();
  }
  for (int j = 0; j < rep.size(); ++j) {
    for (int k = 0; k < rep.size(); ++k) t(j, k) -= first[j] * first[k];
  }
  return t;
}

double inner_product(const TensorCoefficients& t) {
  double sum = 0.0;
  for (const Complex& v : t.values()) sum += std::norm(v);
  return sum;
}

double monotone_candidate(const DensityOperator& rho, Realization mode, int order,
                          std::span<const double> coefficients) {
  const int n = rho.local_dim();
  if (n < 2) throw Error(ErrorKind::kShape, "monotone candidates need a bipartite n x n state");
  if (mode == Realization::kCovariance && order != 2) {
    throw Error(ErrorKind::kUnsupportedOrder, "covariance realization is defined at order 2 only");
  }
  const Representation rep = product_representation(n);
  const double s = mode == Realization::kLinear
                       ? inner_product(tensor_coefficients(rho, rep, order))
                       : inner_product(covariance_coefficients(rho, rep));
  // Horner from the highest power down.
  double value = 0.0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) value = value * s + *it;
  return value;
}

double f2_linear(const DensityOperator& rho) {
  const double a[] = {0.0, 1.0};
  return monotone_candidate(rho, Realization::kLinear, 2, a);
}

double f2_covariance(const DensityOperator& rho) {
  const double a[] = {0.0, 1.0};
  return monotone_candidate(rho, Realization::kCovariance, 2, a);
}

}  // namespace iovt
