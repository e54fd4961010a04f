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

#include "iovt/sweep.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <ostream>
#include <thread>

#include "iovt/tensor_field.h"

namespace iovt {

namespace {

constexpr Quantity kAllQuantities[] = {
    Quantity::kPurity,          Quantity::kLinearEntropy,       Quantity::kTrRhoRhoTilde,
    Quantity::kF2Linear,        Quantity::kF2Covariance,        Quantity::kDMeasure,
    Quantity::kConcurrenceWootters, Quantity::kConcurrenceVariant, Quantity::kKyFan,
    Quantity::kVerdict,
};

// The endpoint pi/2 is commonly typed as 1.5708.
constexpr double kAngleSlack = 1e-4;

bool clipped_at_zero(Quantity q) {
  return q == Quantity::kConcurrenceWootters || q == Quantity::kConcurrenceVariant;
}

double parse_number(std::string_view text) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || text.empty()) {
    throw Error(ErrorKind::kConfiguration, "not a number: '" + std::string(text) + "'");
  }
  return v;
}

void check_range(const Axis& axis, double lo, double hi) {
  const double a = std::min(axis.start, axis.stop);
  const double b = std::max(axis.start, axis.stop);
  if (!(a >= lo && b <= hi)) {
    throw Error(ErrorKind::kConfiguration, "axis '" + axis.name + "' leaves the family domain");
  }
}

// Row-major index over the grid axes.
std::vector<double> grid_point(const SweepGrid& grid, std::size_t flat) {
  std::vector<double> params(grid.axes.size());
  for (std::size_t a = grid.axes.size(); a-- > 0;) {
    const auto count = static_cast<std::size_t>(grid.axes[a].count);
    params[a] = grid.axes[a].point(static_cast<int>(flat % count));
    flat /= count;
  }
  return params;
}

std::size_t grid_size(const SweepGrid& grid) {
  std::size_t size = 1;
  for (const Axis& a : grid.axes) size *= static_cast<std::size_t>(a.count);
  return size;
}

bool inside_family(Family family, std::span<const double> params) {
  if (family != Family::kStandardForm) return true;
  return standard_form_spectrum({params[0], params[1], params[2]})[0] >=
         DensityOperator::kPositivityTolerance;
}

template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
  const auto workers = static_cast<std::size_t>(std::max(1, threads));
  if (workers == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < std::min(workers, count); ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count && !failed; i = next++) {
          try {
            fn(i);
          } catch (...) {
            if (!failed.exchange(true)) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

// Values of `quantities` at every grid point; NaN marks skipped points.
std::vector<double> evaluate_grid(const SweepGrid& grid, std::span<const Quantity> quantities,
                                  int threads) {
  const std::size_t points = grid_size(grid);
  const std::size_t nq = quantities.size();
  std::vector<double> values(points * nq, std::nan(""));
  parallel_for(points, resolve_thread_count(threads), [&](std::size_t p) {
    const std::vector<double> params = grid_point(grid, p);
    if (!inside_family(grid.family, params)) return;
    const DensityOperator rho = family_state(grid.family, params);
    for (std::size_t q = 0; q < nq; ++q) values[p * nq + q] = evaluate(quantities[q], rho, grid.tolerance);
  });
  return values;
}

}  // namespace

std::string_view to_string(Family family) {
  switch (family) {
    case Family::kWerner: return "werner";
    case Family::kSchmidt: return "schmidt";
    case Family::kStandardForm: return "standard_form";
  }
  return "werner";
}

Family parse_family(std::string_view name) {
  if (name == "werner") return Family::kWerner;
  if (name == "schmidt") return Family::kSchmidt;
  if (name == "standard_form" || name == "standard-form") return Family::kStandardForm;
  throw Error(ErrorKind::kConfiguration, "unknown family '" + std::string(name) + "'");
}

std::vector<std::string> family_axes(Family family) {
  switch (family) {
    case Family::kWerner: return {"x"};
    case Family::kSchmidt: return {"x", "alpha"};
    case Family::kStandardForm: return {"d1", "d2", "d3"};
  }
  return {};
}

DensityOperator family_state(Family family, std::span<const double> params) {
  if (params.size() != family_axes(family).size()) {
    throw Error(ErrorKind::kConfiguration, "wrong parameter count for family " +
                                               std::string(to_string(family)));
  }
  switch (family) {
    case Family::kWerner: return werner(params[0]);
    case Family::kSchmidt: return schmidt_mix(params[0], params[1]);
    case Family::kStandardForm: return standard_form_state({params[0], params[1], params[2]});
  }
  throw Error(ErrorKind::kConfiguration, "unknown family");
}

double Axis::point(int i) const {
  if (i == count - 1) return stop;
  return start + i * ((stop - start) / (count - 1));
}

Axis parse_axis(std::string name, std::string_view range) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t colon = range.find(':', pos);
    parts.push_back(range.substr(pos, colon - pos));
    if (colon == std::string_view::npos) break;
    pos = colon + 1;
  }
  if (parts.size() != 3) {
    throw Error(ErrorKind::kConfiguration,
                "range for '" + name + "' must be start:stop:count, got '" + std::string(range) + "'");
  }
  Axis axis{std::move(name), parse_number(parts[0]), parse_number(parts[1]), 0};
  const double count = parse_number(parts[2]);
  if (count != std::floor(count) || count < 1 || count > 1e7) {
    throw Error(ErrorKind::kConfiguration, "axis count must be a positive integer");
  }
  axis.count = static_cast<int>(count);
  return axis;
}

std::string_view to_string(Quantity q) {
  switch (q) {
    case Quantity::kPurity: return "purity";
    case Quantity::kLinearEntropy: return "linear_entropy";
    case Quantity::kTrRhoRhoTilde: return "tr_rho_rhotilde";
    case Quantity::kF2Linear: return "f2R";
    case Quantity::kF2Covariance: return "f2Rtilde";
    case Quantity::kDMeasure: return "D";
    case Quantity::kConcurrenceWootters: return "concurrence_wootters";
    case Quantity::kConcurrenceVariant: return "concurrence_variant";
    case Quantity::kKyFan: return "kyfan_norm";
    case Quantity::kVerdict: return "verdict";
  }
  return "unknown";
}

Quantity parse_quantity(std::string_view name) {
  for (Quantity q : kAllQuantities) {
    if (to_string(q) == name) return q;
  }
  throw Error(ErrorKind::kConfiguration, "unknown quantity '" + std::string(name) + "'");
}

std::span<const Quantity> all_quantities() { return kAllQuantities; }

double evaluate(Quantity q, const DensityOperator& rho, double tolerance) {
  switch (q) {
    case Quantity::kPurity: return purity(rho);
    case Quantity::kLinearEntropy: return 1.0 - purity(rho);
    case Quantity::kTrRhoRhoTilde: return tr_rho_rhotilde(rho);
    case Quantity::kF2Linear: return f2_linear(rho);
    case Quantity::kF2Covariance: return f2_covariance(rho);
    case Quantity::kDMeasure: return d_measure(rho);
    case Quantity::kConcurrenceWootters: return concurrence_wootters(rho);
    case Quantity::kConcurrenceVariant: return concurrence_variant(rho);
    case Quantity::kKyFan: return kyfan_norm(fano_decompose(rho).correlation);
    case Quantity::kVerdict:
      switch (classify(rho, tolerance).status) {
        case SeparabilityStatus::kSeparable: return 0.0;
        case SeparabilityStatus::kEntangled: return 1.0;
        case SeparabilityStatus::kUndecided: return 2.0;
      }
  }
  throw Error(ErrorKind::kConfiguration, "unknown quantity");
}

void validate_grid(const SweepGrid& grid) {
  const std::vector<std::string> names = family_axes(grid.family);
  if (grid.axes.size() != names.size()) {
    throw Error(ErrorKind::kConfiguration, "family " + std::string(to_string(grid.family)) +
                                               " needs " + std::to_string(names.size()) + " axes");
  }
  for (std::size_t a = 0; a < names.size(); ++a) {
    const Axis& axis = grid.axes[a];
    if (axis.name != names[a]) {
      throw Error(ErrorKind::kConfiguration, "expected axis '" + names[a] + "', got '" + axis.name + "'");
    }
    if (axis.count < 2) {
      throw Error(ErrorKind::kConfiguration, "axis '" + axis.name + "' needs at least 2 points");
    }
    if (!std::isfinite(axis.start) || !std::isfinite(axis.stop)) {
      throw Error(ErrorKind::kConfiguration, "axis '" + axis.name + "' has a non-finite bound");
    }
    if (axis.name == "x") {
      check_range(axis, 0.0, 1.0);
    } else if (axis.name == "alpha") {
      check_range(axis, -kAngleSlack, std::numbers::pi / 2 + kAngleSlack);
    } else {
      check_range(axis, -1.0, 1.0);
    }
  }
  if (grid.quantities.empty()) throw Error(ErrorKind::kConfiguration, "no quantities requested");
}

int resolve_thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("IOVT_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

Table grid_sweep(const SweepGrid& grid, int threads) {
  validate_grid(grid);
  Table table;
  for (const Axis& a : grid.axes) table.columns.push_back(a.name);
  for (Quantity q : grid.quantities) table.columns.emplace_back(to_string(q));

  const std::vector<double> values = evaluate_grid(grid, grid.quantities, threads);
  const std::size_t nq = grid.quantities.size();
  for (std::size_t p = 0; p < grid_size(grid); ++p) {
    const std::vector<double> params = grid_point(grid, p);
    if (!inside_family(grid.family, params)) continue;
    std::vector<double> row = params;
    row.insert(row.end(), values.begin() + p * nq, values.begin() + (p + 1) * nq);
    table.rows.push_back(std::move(row));
  }
  return table;
}

Table wedge_field(const SweepGrid& grid, Quantity f, Quantity g, int threads) {
  SweepGrid eval = grid;
  eval.quantities = {f, g};
  validate_grid(eval);
  if (eval.axes.size() != 2) {
    throw Error(ErrorKind::kConfiguration, "wedge field needs exactly two axes");
  }
  const int nx = eval.axes[0].count;
  const int ny = eval.axes[1].count;
  if (nx < 3 || ny < 3) {
    throw Error(ErrorKind::kResolution, "wedge field needs at least 3 points per axis");
  }
  const std::vector<double> values = evaluate_grid(eval, eval.quantities, threads);
  auto at = [&](int q, int i, int j) { return values[(static_cast<std::size_t>(i) * ny + j) * 2 + q]; };
  const double hx = eval.axes[0].spacing();
  const double hy = eval.axes[1].spacing();

  Table table;
  table.columns = {eval.axes[0].name, eval.axes[1].name, "wedge", "boundary_flag"};
  for (int i = 1; i < nx - 1; ++i) {
    for (int j = 1; j < ny - 1; ++j) {
      const double fx = (at(0, i + 1, j) - at(0, i - 1, j)) / (2.0 * hx);
      const double fy = (at(0, i, j + 1) - at(0, i, j - 1)) / (2.0 * hy);
      const double gx = (at(1, i + 1, j) - at(1, i - 1, j)) / (2.0 * hx);
      const double gy = (at(1, i, j + 1) - at(1, i, j - 1)) / (2.0 * hy);

      bool seam = false;
      for (int q = 0; q < 2; ++q) {
        if (!clipped_at_zero(q == 0 ? f : g)) continue;
        const double stencil[] = {at(q, i, j), at(q, i + 1, j), at(q, i - 1, j), at(q, i, j + 1),
                                  at(q, i, j - 1)};
        const bool any_zero = std::any_of(std::begin(stencil), std::end(stencil),
                                          [](double v) { return v == 0.0; });
        const bool any_positive = std::any_of(std::begin(stencil), std::end(stencil),
                                              [](double v) { return v > 0.0; });
        seam = seam || (any_zero && any_positive);
      }
      table.rows.push_back({eval.axes[0].point(i), eval.axes[1].point(j), fx * gy - fy * gx,
                            seam ? 1.0 : 0.0});
    }
  }
  return table;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(const Table& table, std::ostream& out) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (c) out << ',';
    out << table.columns[c];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ',';
      out << format_double(row[c]);
    }
    out << '\n';
  }
}

}  // namespace iovt
