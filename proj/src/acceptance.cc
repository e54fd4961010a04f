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

#include "iovt/acceptance.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <ostream>
#include <sstream>

#include "iovt/entanglement.h"
#include "iovt/random_states.h"
#include "iovt/su_basis.h"
#include "iovt/sweep.h"
#include "iovt/tensor_field.h"

namespace iovt {

namespace {

constexpr double kPi = std::numbers::pi;

// Running maximum of an error with the location where it occurred.
struct MaxError {
  double value = 0.0;
  std::string where;

  void update(double err, const std::string& at) {
    if (!(err <= value)) {  // NaN always recorded
      value = err;
      where = at;
    }
  }
  std::string describe() const {
    std::ostringstream s;
    s << "max error " << value;
    if (!where.empty()) s << " at " << where;
    return s.str();
  }
};

std::string at_x(double x) { return "x=" + format_double(x); }
std::string at_xa(double x, double a) { return "x=" + format_double(x) + ",alpha=" + format_double(a); }

RealMatrix linear_symmetric(const DensityOperator& rho) {
  return split_sym_antisym(tensor_coefficients(rho, product_representation(rho.local_dim()), 2))
      .symmetric;
}

RealMatrix linear_antisymmetric(const DensityOperator& rho, const Representation& rep) {
  return split_sym_antisym(tensor_coefficients(rho, rep, 2)).antisymmetric;
}

// Closed forms for the two-parameter family.
double f2_covariance_closed(double x, double a) {
  const double c4 = std::cos(4 * a);
  const double c8 = std::cos(8 * a);
  const double x2 = x * x;
  const double x3 = x2 * x;
  const double x4 = x2 * x2;
  return 2 * c4 * x4 + 0.5 * c8 * x4 + 1.5 * x4 - 2 * c4 * x3 - 2 * x3 - 2 * c4 * x2 + 4 * x2 + 6;
}

double concurrence_variant_closed(double x, double a) {
  const double s = std::sin(2 * a);
  const double inner = -x * x * (2 * std::cos(4 * a) * x * x + (x - 2) * x - 1) * s * s;
  return std::max(-x * x / 8 + x / 4 + 0.5 * std::sqrt(std::max(0.0, inner)) - 0.125, 0.0);
}

// X-state oracle: C = 2 max(0, |rho_14| - sqrt(rho_22 rho_33)).
double concurrence_x_state(double x, double a) {
  return std::max(0.0, x * std::sin(2 * a) - (1 - x) / 2);
}

std::vector<std::pair<double, double>> grid21() {
  std::vector<std::pair<double, double>> pts;
  for (int i = 0; i <= 20; ++i) {
    for (int j = 0; j <= 20; ++j) pts.emplace_back(i / 20.0, j / 20.0 * kPi / 2);
  }
  return pts;
}

CriterionResult werner_threshold() {
  MaxError kyfan;
  int mismatches = 0;
  std::string first_mismatch;
  for (int i = 0; i <= 100; ++i) {
    const double x = i / 100.0;
    const DensityOperator rho = werner(x);
    const bool separable = classify(rho).status == SeparabilityStatus::kSeparable;
    if (separable != (x <= 1.0 / 3.0 + 1e-9)) {
      if (mismatches++ == 0) first_mismatch = at_x(x);
    }
    kyfan.update(std::abs(kyfan_norm(fano_decompose(rho).correlation) - 3 * x), at_x(x));
  }
  const bool ok = mismatches == 0 && kyfan.value <= 1e-10;
  std::string detail = "verdict mismatches " + std::to_string(mismatches) +
                       (mismatches ? " (first " + first_mismatch + ")" : "") + "; kyfan " +
                       kyfan.describe() + " (tol 1e-10)";
  return {1, "werner_threshold", ok, detail};
}

CriterionResult werner_l_matrix() {
  MaxError err;
  for (double x : {0.2, 0.7}) {
    RealMatrix expected = RealMatrix::Identity(6, 6);
    const double off[3] = {x, -x, x};
    for (int j = 0; j < 3; ++j) expected(j, j + 3) = expected(j + 3, j) = off[j];
    err.update((linear_symmetric(werner(x)) - expected).cwiseAbs().maxCoeff(), at_x(x));
  }
  return {2, "werner_l_matrix", err.value <= 1e-12, err.describe() + " (tol 1e-12)"};
}

CriterionResult ltilde_spectrum() {
  MaxError err;
  for (double x : {0.0, 1.0 / 3.0, 0.5, 1.0}) {
    std::vector<double> expected = {1 - 3 * x, 1 - 3 * x, 1 - 3 * x, 1 - x, 1 - x, 1 - x};
    std::sort(expected.begin(), expected.end());
    const LtildeSignature sig = werner_ltilde_signature(x);
    for (int k = 0; k < 6; ++k) err.update(std::abs(sig.eigenvalues[k] - expected[k]), at_x(x));
  }
  return {3, "ltilde_spectrum", err.value <= 1e-10, err.describe() + " (tol 1e-10)"};
}

CriterionResult purity_closed_form() {
  MaxError err;
  for (int i = 0; i <= 20; ++i) {
    const double x = i / 20.0;
    err.update(std::abs(f2_linear(werner(x)) - 6 * (x * x + 1)), "werner " + at_x(x));
  }
  for (auto [x, a] : grid21()) {
    err.update(std::abs(f2_linear(schmidt_mix(x, a)) - 6 * (x * x + 1)), at_xa(x, a));
  }
  return {4, "purity_closed_form", err.value <= 1e-10, err.describe() + " (tol 1e-10)"};
}

CriterionResult covariance_closed_form() {
  MaxError err;
  for (auto [x, a] : grid21()) {
    err.update(std::abs(f2_covariance(schmidt_mix(x, a)) - f2_covariance_closed(x, a)), at_xa(x, a));
  }
  Eigen::VectorXcd up = Eigen::VectorXcd::Zero(4);
  up(0) = 1.0;
  const double bell = f2_covariance(werner(1.0));
  const double product = f2_covariance(pure_state(up));
  const bool spots = std::abs(bell - 12.0) <= 1e-9 && std::abs(product - 8.0) <= 1e-9;
  return {5, "covariance_closed_form", err.value <= 1e-9 && spots,
          err.describe() + " (tol 1e-9); Bell " + format_double(bell) + ", |00> " +
              format_double(product)};
}

CriterionResult concurrence_wootters_check() {
  MaxError err;
  for (int i = 0; i <= 100; ++i) {
    const double x = i / 100.0;
    err.update(std::abs(concurrence_wootters(werner(x)) - std::max(0.0, (3 * x - 1) / 2)),
               "werner " + at_x(x));
  }
  for (auto [x, a] : grid21()) {
    err.update(std::abs(concurrence_wootters(schmidt_mix(x, a)) - concurrence_x_state(x, a)),
               at_xa(x, a));
  }
  return {6, "concurrence_wootters", err.value <= 1e-9, err.describe() + " (tol 1e-9)"};
}

CriterionResult concurrence_variant_check() {
  MaxError err;
  for (auto [x, a] : grid21()) {
    err.update(std::abs(concurrence_variant(schmidt_mix(x, a)) - concurrence_variant_closed(x, a)),
               at_xa(x, a));
  }
  return {7, "concurrence_variant", err.value <= 1e-9, err.describe() + " (tol 1e-9)"};
}

CriterionResult identity_suite() {
  Rng rng(20260801);
  const Representation rep = product_representation(2);
  MaxError sl_inv, purity_id, tangle_id, round_trip;
  for (int s = 0; s < 1000; ++s) {
    const DensityOperator rho = random_density(4, 1 + s % 4, rng);
    const std::string at = "sample " + std::to_string(s);
    const FanoForm f = fano_decompose(rho);
    const double rhs = 1 - f.local_a.squaredNorm() - f.local_b.squaredNorm() +
                       f.correlation.squaredNorm();
    sl_inv.update(std::abs(4 * tr_rho_rhotilde(rho) - rhs), at);

    const SymmetricSplit split = split_sym_antisym(tensor_coefficients(rho, rep, 2));
    const double l2 = split.symmetric.squaredNorm();
    const double w2 = split.antisymmetric.squaredNorm();
    purity_id.update(std::abs((l2 + w2) / 8 - 0.5 - purity(rho)), at);
    tangle_id.update(std::abs((l2 - w2) / 8 - 0.5 - tr_rho_rhotilde(rho)), at);
    round_trip.update((fano_compose(f) - rho.matrix()).cwiseAbs().maxCoeff(), at);
  }
  const double tol = 1e-10;
  const bool ok = sl_inv.value <= tol && purity_id.value <= tol && tangle_id.value <= tol &&
                  round_trip.value <= tol;
  return {8, "identity_suite", ok,
          "(a) " + sl_inv.describe() + "; (b) purity " + purity_id.describe() + ", tangle " +
              tangle_id.describe() + "; (c) " + round_trip.describe() + " (tol 1e-10)"};
}

CriterionResult ppt_octahedron() {
  Rng rng(20260802);
  int compared = 0;
  int disagreements = 0;
  for (int s = 0; s < 1000; ++s) {
    const std::array<double, 3> d = random_tetrahedron_point(rng);
    const OctahedronResult oct = octahedron_check(d);
    if (std::abs(oct.l1 - 1.0) < 1e-9) continue;
    ++compared;
    if (ppt_check(standard_form_state(d)).separable != oct.separable) ++disagreements;
  }
  return {9, "ppt_octahedron", disagreements == 0,
          std::to_string(disagreements) + " disagreements over " + std::to_string(compared) + " points"};
}

CriterionResult local_unitary_invariance() {
  Rng rng(20260803);
  MaxError err;
  const std::function<double(const DensityOperator&)> fns[] = {
      f2_linear, f2_covariance, concurrence_wootters, concurrence_variant};
  const char* names[] = {"f2R", "f2Rtilde", "concurrence_wootters", "concurrence_variant"};
  for (int s = 0; s < 100; ++s) {
    // Alternate generic states with entangled Schmidt mixtures so the
    // concurrences are exercised away from zero.
    const DensityOperator rho = s % 2 ? random_density(4, 1 + s % 3, rng)
                                      : schmidt_mix(0.5 + 0.5 * (s % 10) / 10.0, 0.1 + 0.07 * (s % 20));
    const DensityOperator moved = conjugate(rho, random_local_unitary(2, rng));
    for (int k = 0; k < 4; ++k) {
      err.update(std::abs(fns[k](moved) - fns[k](rho)),
                 std::string(names[k]) + " sample " + std::to_string(s));
    }
  }
  return {10, "local_unitary_invariance", err.value <= 1e-9, err.describe() + " (tol 1e-9)"};
}

CriterionResult purity_and_omega_properties() {
  Rng rng(20260804);
  MaxError pure_norm;
  double worst_mixed_gap = INFINITY;
  int omega_failures = 0;
  std::string omega_note;
  constexpr double kMixedMargin = 1e-6;

  for (int n : {2, 3, 4}) {
    const double bound = std::sqrt(n * (n - 1) / 2.0);
    const Representation def = defining_representation(n);
    const Representation prod = product_representation(n);

    // Bloch norm of pure versus mixed states.
    for (int s = 0; s < 500; ++s) {
      const DensityOperator pure = pure_state(random_pure_vector(n, rng));
      pure_norm.update(std::abs(bloch_decode(pure).m.norm() - bound),
                       "n=" + std::to_string(n) + " sample " + std::to_string(s));
      const DensityOperator mixed = random_density(n, 2 + s % (n - 1), rng);
      worst_mixed_gap = std::min(worst_mixed_gap, bound - bloch_decode(mixed).m.norm());
    }

    // Defining representation: Omega vanishes exactly on the maximally mixed state.
    if (linear_antisymmetric(maximally_mixed(n), def).cwiseAbs().maxCoeff() > 1e-12) {
      ++omega_failures;
      omega_note = "maximally mixed n=" + std::to_string(n);
    }
    for (int s = 0; s < 500; ++s) {
      const DensityOperator rho = random_density(n, 1 + s % n, rng);
      if (linear_antisymmetric(rho, def).cwiseAbs().maxCoeff() < 1e-6) {
        ++omega_failures;
        omega_note = "defining n=" + std::to_string(n) + " sample " + std::to_string(s);
      }
    }

    // Product representation: Omega = 0 iff both reductions are maximally mixed.
    Eigen::VectorXcd phi = Eigen::VectorXcd::Zero(n * n);
    for (int i = 0; i < n; ++i) phi(i * n + i) = 1.0 / std::sqrt(static_cast<double>(n));
    const ComplexMatrix identity = ComplexMatrix::Identity(n, n);
    for (int s = 0; s < 500; ++s) {
      DensityOperator rho = maximally_mixed(n * n);
      if (s % 2 == 0) {
        rho = random_density(n * n, 1 + s % (n * n), rng);
      } else {
        std::vector<WeightedState> terms;
        std::uniform_real_distribution<double> u(0.0, 1.0);
        const int count = 1 + s % 3;
        std::vector<double> w(count + 1);
        double total = 0.0;
        for (double& v : w) total += (v = u(rng));
        for (int t = 0; t < count; ++t) {
          const Eigen::VectorXcd rotated = kron(random_unitary(n, rng), identity) * phi;
          terms.push_back({w[t] / total, pure_state(rotated)});
        }
        double used = 0.0;
        for (const auto& t : terms) used += t.weight;
        terms.push_back({1.0 - used, maximally_mixed(n * n)});
        rho = convex_combine(terms);
      }
      const bool omega_zero = linear_antisymmetric(rho, prod).cwiseAbs().maxCoeff() < 1e-9;
      const double ra = (partial_trace(rho, Subsystem::kA).matrix() - identity / n).cwiseAbs().maxCoeff();
      const double rb = (partial_trace(rho, Subsystem::kB).matrix() - identity / n).cwiseAbs().maxCoeff();
      const bool reductions_mixed = std::max(ra, rb) < 1e-9;
      if (omega_zero != reductions_mixed) {
        ++omega_failures;
        omega_note = "product n=" + std::to_string(n) + " sample " + std::to_string(s);
      }
    }
  }
  const bool ok = pure_norm.value <= 1e-10 && worst_mixed_gap > kMixedMargin && omega_failures == 0;
  std::string detail = "pure Bloch norm " + pure_norm.describe() + " (tol 1e-10); min mixed gap " +
                       format_double(worst_mixed_gap) + " (margin 1e-6); Omega mismatches " +
                       std::to_string(omega_failures);
  if (omega_failures) detail += " (last " + omega_note + ")";
  return {11, "purity_and_omega_properties", ok, detail};
}

CriterionResult wedge_regions(int threads) {
  SweepGrid grid;
  grid.family = Family::kSchmidt;
  grid.axes = {{"x", 0.0, 1.0, 101}, {"alpha", 0.0, kPi / 2, 101}};
  const Table wedge = wedge_field(grid, Quantity::kConcurrenceVariant, Quantity::kDMeasure, threads);

  // Points whose whole stencil has C = 0 form the zero region.
  grid.quantities = {Quantity::kConcurrenceVariant};
  const Table c = grid_sweep(grid, threads);
  auto c_at = [&](int i, int j) { return c.rows[static_cast<std::size_t>(i) * 101 + j][2]; };

  double zero_max = 0.0;
  int zero_points = 0;
  double nonzero_max = 0.0;
  for (const auto& row : wedge.rows) {
    const int i = static_cast<int>(std::lround(row[0] * 100));
    const int j = static_cast<int>(std::lround(row[1] / (kPi / 2) * 100));
    const bool flat = c_at(i, j) == 0 && c_at(i + 1, j) == 0 && c_at(i - 1, j) == 0 &&
                      c_at(i, j + 1) == 0 && c_at(i, j - 1) == 0;
    if (flat) {
      ++zero_points;
      zero_max = std::max(zero_max, std::abs(row[2]));
    } else if (row[3] == 0.0) {
      nonzero_max = std::max(nonzero_max, std::abs(row[2]));
    }
  }
  const bool ok = zero_points > 0 && zero_max < 1e-6 && nonzero_max > 1e-3;
  return {12, "wedge_regions", ok,
          "zero region " + std::to_string(zero_points) + " points, max |wedge| " +
              format_double(zero_max) + " (< 1e-6); smooth region max |wedge| " +
              format_double(nonzero_max) + " (> 1e-3)"};
}

template <typename Fn>
CriterionResult guarded(int id, const char* name, Fn&& fn) {
  try {
    return fn();
  } catch (const std::exception& e) {
    return {id, name, false, std::string("threw: ") + e.what()};
  }
}

}  // namespace

std::vector<CriterionResult> run_acceptance(int threads) {
  std::vector<CriterionResult> out;
  out.push_back(guarded(1, "werner_threshold", werner_threshold));
  out.push_back(guarded(2, "werner_l_matrix", werner_l_matrix));
  out.push_back(guarded(3, "ltilde_spectrum", ltilde_spectrum));
  out.push_back(guarded(4, "purity_closed_form", purity_closed_form));
  out.push_back(guarded(5, "covariance_closed_form", covariance_closed_form));
  out.push_back(guarded(6, "concurrence_wootters", concurrence_wootters_check));
  out.push_back(guarded(7, "concurrence_variant", concurrence_variant_check));
  out.push_back(guarded(8, "identity_suite", identity_suite));
  out.push_back(guarded(9, "ppt_octahedron", ppt_octahedron));
  out.push_back(guarded(10, "local_unitary_invariance", local_unitary_invariance));
  out.push_back(guarded(11, "purity_and_omega_properties", purity_and_omega_properties));
  out.push_back(guarded(12, "wedge_regions", [threads] { return wedge_regions(threads); }));
  return out;
}

bool print_acceptance(const std::vector<CriterionResult>& results, std::ostream& out) {
  bool all = true;
  for (const CriterionResult& r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.id << ' ' << r.name << ": " << r.detail << '\n';
    all = all && r.passed;
  }
  return all;
}

}  // namespace iovt
