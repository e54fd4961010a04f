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

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "iovt/entanglement.h"

namespace iovt {

enum class Family { kWerner, kSchmidt, kStandardForm };

std::string_view to_string(Family family);
Family parse_family(std::string_view name);

/// Axis names a family expects, in grid order: werner {x}, schmidt
/// {x, alpha}, standard_form {d1, d2, d3}.
std::vector<std::string> family_axes(Family family);

/// Two-qubit state of a family at the given parameters (axis order).
DensityOperator family_state(Family family, std::span<const double> params);

/// Inclusive range start:stop with `count` evenly spaced points.
struct Axis {
  std::string name;
  double start = 0.0;
  double stop = 0.0;
  int count = 0;

  double spacing() const { return (stop - start) / (count - 1); }
  double point(int i) const;
};

/// Parses "start:stop:count".
Axis parse_axis(std::string name, std::string_view range);

enum class Quantity {
  kPurity,
  kLinearEntropy,
  kTrRhoRhoTilde,
  kF2Linear,
  kF2Covariance,
  kDMeasure,
  kConcurrenceWootters,
  kConcurrenceVariant,
  kKyFan,
  kVerdict,
};

std::string_view to_string(Quantity q);

/// Throws kConfiguration for unknown names.
Quantity parse_quantity(std::string_view name);

/// Every quantity, in declaration order.
std::span<const Quantity> all_quantities();

/// Verdict codes in sweep tables: 0 separable, 1 entangled, 2 undecided.
double evaluate(Quantity q, const DensityOperator& rho, double tolerance = kCriterionTolerance);

struct SweepGrid {
  Family family = Family::kWerner;
  std::vector<Axis> axes;
  std::vector<Quantity> quantities;
  double tolerance = kCriterionTolerance;
};

/// Throws kConfiguration when axes do not match the family, a count is
/// below 2, or a range leaves the family domain.
void validate_grid(const SweepGrid& grid);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Worker count: `requested` if positive, otherwise IOVT_THREADS if set,
/// otherwise the hardware concurrency.
int resolve_thread_count(int requested = 0);

/// One row per grid point (first axis slowest) holding the axis values and
/// the requested quantities. Standard-form points outside the state
/// tetrahedron are skipped. Output does not depend on the thread count.
Table grid_sweep(const SweepGrid& grid, int threads = 0);

/// d f ^ d g = f_x g_a - f_a g_x by central differences on the interior of a
/// two-axis grid. Columns: both axes, "wedge", "boundary_flag". The flag is 1
/// where the stencil of a max(0, .) quantity mixes zero and positive values.
/// Throws kResolution for fewer than 3 points on an axis.
Table wedge_field(const SweepGrid& grid, Quantity f, Quantity g, int threads = 0);

/// Header row, then rows; 17 significant digits, LF line endings.
void write_csv(const Table& table, std::ostream& out);

/// Line plot (one axis) or heatmap of `value_column` (two axes).
void write_svg(const Table& table, int axis_count, std::string_view value_column,
               std::ostream& out);

/// %.17g
std::string format_double(double v);

}  // namespace iovt
