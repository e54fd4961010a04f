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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>

#include "iovt/sweep.h"

namespace iovt {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kMargin = 60.0;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
                                "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::size_t column_index(const Table& table, std::string_view name) {
  for (std::size_t c = 0; c < table.columns.size(); ++c) {
    if (table.columns[c] == name) return c;
  }
  throw Error(ErrorKind::kConfiguration, "no column named '" + std::string(name) + "'");
}

std::pair<double, double> finite_range(const Table& table, std::size_t column) {
  double lo = INFINITY;
  double hi = -INFINITY;
  for (const auto& row : table.rows) {
    if (!std::isfinite(row[column])) continue;
    lo = std::min(lo, row[column]);
    hi = std::max(hi, row[column]);
  }
  if (!(lo <= hi)) return {0.0, 1.0};
  if (lo == hi) return {lo - 0.5, hi + 0.5};
  return {lo, hi};
}

// Linear blue -> white -> red map on t in [0, 1].
std::string color(double t) {
  t = std::clamp(t, 0.0, 1.0);
  int r, g, b;
  if (t < 0.5) {
    const double s = t / 0.5;
    r = static_cast<int>(std::lround(59 + s * (255 - 59)));
    g = static_cast<int>(std::lround(76 + s * (255 - 76)));
    b = static_cast<int>(std::lround(192 + s * (255 - 192)));
  } else {
    const double s = (t - 0.5) / 0.5;
    r = static_cast<int>(std::lround(255 + s * (180 - 255)));
    g = static_cast<int>(std::lround(255 + s * (4 - 255)));
    b = static_cast<int>(std::lround(255 + s * (38 - 255)));
  }
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", r, g, b);
  return buf;
}

void header(std::ostream& out) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

void line_plot(const Table& table, std::string_view value_column, std::ostream& out) {
  std::vector<std::size_t> series;
  if (value_column.empty()) {
    for (std::size_t c = 1; c < table.columns.size(); ++c) series.push_back(c);
  } else {
    series.push_back(column_index(table, value_column));
  }
  const auto [x0, x1] = finite_range(table, 0);
  double y0 = INFINITY;
  double y1 = -INFINITY;
  for (std::size_t c : series) {
    const auto [lo, hi] = finite_range(table, c);
    y0 = std::min(y0, lo);
    y1 = std::max(y1, hi);
  }
  auto px = [&](double x) { return kMargin + (x - x0) / (x1 - x0) * (kWidth - 2 * kMargin); };
  auto py = [&](double y) { return kHeight - kMargin - (y - y0) / (y1 - y0) * (kHeight - 2 * kMargin); };

  header(out);
  out << "<rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << kWidth - 2 * kMargin
      << "\" height=\"" << kHeight - 2 * kMargin << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (std::size_t s = 0; s < series.size(); ++s) {
    const char* stroke = kPalette[s % std::size(kPalette)];
    out << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"1.5\" points=\"";
    for (const auto& row : table.rows) {
      if (!std::isfinite(row[series[s]])) continue;
      out << px(row[0]) << ',' << py(row[series[s]]) << ' ';
    }
    out << "\"/>\n";
    out << "<text x=\"" << kWidth - kMargin + 4 << "\" y=\"" << kMargin + 14 * (s + 1) << "\" fill=\""
        << stroke << "\">" << table.columns[series[s]] << "</text>\n";
  }
  out << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 20 << "\">" << table.columns[0]
      << "</text>\n";
  out << "<text x=\"4\" y=\"" << kMargin << "\">max " << format_double(y1) << "</text>\n";
  out << "<text x=\"4\" y=\"" << kHeight - kMargin << "\">min " << format_double(y0) << "</text>\n";
  out << "</svg>\n";
}

void heatmap(const Table& table, std::string_view value_column, std::ostream& out) {
  const std::size_t vc = value_column.empty() ? 2 : column_index(table, value_column);
  std::map<double, int> xs;
  std::map<double, int> ys;
  for (const auto& row : table.rows) {
    xs.emplace(row[0], 0);
    ys.emplace(row[1], 0);
  }
  int k = 0;
  for (auto& [v, i] : xs) i = k++;
  k = 0;
  for (auto& [v, i] : ys) i = k++;
  const auto [v0, v1] = finite_range(table, vc);
  const double cw = (kWidth - 2 * kMargin) / std::max<std::size_t>(1, xs.size());
  const double ch = (kHeight - 2 * kMargin) / std::max<std::size_t>(1, ys.size());

  header(out);
  for (const auto& row : table.rows) {
    if (!std::isfinite(row[vc])) continue;
    const double x = kMargin + xs[row[0]] * cw;
    const double y = kHeight - kMargin - (ys[row[1]] + 1) * ch;
    out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cw + 0.01 << "\" height=\""
        << ch + 0.01 << "\" fill=\"" << color((row[vc] - v0) / (v1 - v0)) << "\"/>\n";
  }
  out << "<text x=\"" << kWidth / 2 << "\" y=\"" << kHeight - 20 << "\">" << table.columns[0]
      << "</text>\n";
  out << "<text x=\"4\" y=\"" << kHeight / 2 << "\">" << table.columns[1] << "</text>\n";
  out << "<text x=\"" << kMargin << "\" y=\"20\">" << table.columns[vc] << ": min "
      << format_double(v0) << ", max " << format_double(v1) << "</text>\n";
  out << "</svg>\n";
}

}  // namespace

void write_svg(const Table& table, int axis_count, std::string_view value_column, std::ostream& out) {
  if (table.columns.size() <= static_cast<std::size_t>(axis_count)) {
    throw Error(ErrorKind::kConfiguration, "table has no value columns to plot");
  }
  if (axis_count == 1) {
    line_plot(table, value_column, out);
  } else if (axis_count == 2) {
    heatmap(table, value_column, out);
  } else {
    throw Error(ErrorKind::kConfiguration, "SVG output supports one or two axes");
  }
}

}  // namespace iovt
