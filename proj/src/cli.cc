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

#include "iovt/cli.h"

#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "iovt/acceptance.h"
#include "iovt/entanglement.h"
#include "iovt/state_io.h"
#include "iovt/sweep.h"
#include "iovt/tensor_field.h"

namespace iovt::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

double to_number(const std::string& text, const char* flag) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string(flag) + " expects a number, got '" + text + "'");
  }
}

std::array<double, 3> to_triple(const std::string& text) {
  const std::vector<std::string> parts = split(text, ',');
  if (parts.size() != 3) throw UsageError("--d expects three comma-separated numbers");
  return {to_number(parts[0], "--d"), to_number(parts[1], "--d"), to_number(parts[2], "--d")};
}

std::string one_line(std::string text) {
  for (char& c : text) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  return text;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParse: return kExitParse;
    case ErrorKind::kValidation:
    case ErrorKind::kPositivity:
    case ErrorKind::kDomain:
    case ErrorKind::kInvalidDimension:
      return kExitValidation;
    case ErrorKind::kConfiguration:
    case ErrorKind::kResolution:
      return kExitUsage;
    default: return kExitFailure;
  }
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error(ErrorKind::kConfiguration, "cannot write " + path);
  file << text;
}

// Values that must be finite before they reach a report.
double finite(double v, const char* what) {
  if (!std::isfinite(v)) throw Error(ErrorKind::kConvergence, std::string(what) + " is not finite");
  return v;
}

struct AnalyzeOptions {
  std::string state;
  std::string family;
  std::string x;
  std::string alpha;
  std::string d;
  std::string dump_state;
  std::string out;
  double tolerance = kCriterionTolerance;
};

DensityOperator load_state(const AnalyzeOptions& o) {
  if (!o.state.empty() && !o.family.empty()) throw UsageError("use either --state or --family");
  if (!o.state.empty()) return read_state_file(o.state);
  if (o.family.empty()) throw UsageError("analyze needs --state or --family");

  const Family family = parse_family(o.family);
  auto need = [](const std::string& v, const char* flag) {
    if (v.empty()) throw UsageError(std::string("family needs ") + flag);
    return v;
  };
  switch (family) {
    case Family::kWerner: return werner(to_number(need(o.x, "--x"), "--x"));
    case Family::kSchmidt:
      return schmidt_mix(to_number(need(o.x, "--x"), "--x"), to_number(need(o.alpha, "--alpha"), "--alpha"));
    case Family::kStandardForm: return standard_form_state(to_triple(need(o.d, "--d")));
  }
  throw UsageError("unknown family");
}

std::string matrix_csv(const std::string& title, const RealMatrix& m) {
  std::string text = "# " + title + "\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) text += ',';
      text += format_double(m(i, j));
    }
    text += '\n';
  }
  return text;
}

int analyze(const AnalyzeOptions& o, std::ostream& out, std::ostream& err) {
  const DensityOperator rho = load_state(o);
  if (!o.dump_state.empty()) write_state_file(o.dump_state, rho);

  nlohmann::ordered_json report;
  report["dim"] = rho.dim();
  const double p = purity(rho);
  report["purity"] = finite(p, "purity");
  report["linear_entropy"] = 1.0 - p;

  const int n = rho.local_dim();
  if (n < 2) {
    const RealVector m = bloch_decode(rho).m;
    report["bloch_vector"] = std::vector<double>(m.data(), m.data() + m.size());
    out << report.dump(2) << '\n';
    err << "single-system state, dim " << rho.dim() << ", purity " << p << '\n';
    return kExitOk;
  }
  report["n"] = n;
  const Representation rep = product_representation(n);
  const SymmetricSplit split = split_sym_antisym(tensor_coefficients(rho, rep, 2));
  const TensorCoefficients k = covariance_coefficients(rho, rep);
  report["f2R"] = finite(f2_linear(rho), "f2R");
  report["f2Rtilde"] = finite(inner_product(k), "f2Rtilde");
  if (n == 2) {
    report["D"] = finite(d_measure(rho), "D");
    report["concurrence_wootters"] = finite(concurrence_wootters(rho), "concurrence");
    report["concurrence_variant"] = finite(concurrence_variant(rho), "concurrence");
    report["tr_rho_rhotilde"] = finite(tr_rho_rhotilde(rho), "Tr(rho rho~)");
  }
  const SeparabilityVerdict verdict = classify(rho, o.tolerance);
  nlohmann::ordered_json witnesses;
  for (const auto& [name, value] : verdict.witnesses) witnesses[name] = finite(value, name.c_str());
  report["verdict"] = {{"status", std::string(to_string(verdict.status))},
                       {"decided_by", verdict.decided_by},
                       {"witnesses", witnesses}};
  report["L"] = real_matrix_to_json(split.symmetric);
  report["Omega"] = real_matrix_to_json(split.antisymmetric);
  report["K"] = complex_matrix_to_json(k.matrix());
  out << report.dump(2) << '\n';

  if (!o.out.empty()) {
    const ComplexMatrix km = k.matrix();
    emit(o.out,
         matrix_csv("L", split.symmetric) + matrix_csv("Omega", split.antisymmetric) +
             matrix_csv("K_real", km.real()) + matrix_csv("K_imag", km.imag()),
         out);
  }
  err << "state dim " << rho.dim() << ": purity " << p << ", f2R " << report["f2R"].get<double>()
      << ", verdict " << to_string(verdict.status) << " (" << verdict.decided_by << ")\n";
  return kExitOk;
}

int standard_form(const std::string& d_text, double tolerance, std::ostream& out, std::ostream& err) {
  const std::array<double, 3> d = to_triple(d_text);
  const DensityOperator rho = standard_form_state(d);
  const OctahedronResult oct = octahedron_check(d, tolerance);
  const PptResult ppt = ppt_check(rho, tolerance);
  const RealVector spectrum = hermitian_eigenvalues(rho.matrix());

  nlohmann::ordered_json report;
  report["d"] = d;
  report["matrix"] = complex_matrix_to_json(rho.matrix());
  report["spectrum"] = std::vector<double>(spectrum.data(), spectrum.data() + spectrum.size());
  report["octahedron"] = {{"separable", oct.separable}, {"l1", oct.l1}};
  report["ppt"] = {{"separable", ppt.separable}, {"min_eigenvalue", ppt.min_eigenvalue}};
  report["kyfan_norm"] = kyfan_norm(fano_decompose(rho).correlation);
  out << report.dump(2) << '\n';
  err << "standard form: l1 " << oct.l1 << ", " << (oct.separable ? "separable" : "entangled")
      << " (octahedron), " << (ppt.separable ? "separable" : "entangled") << " (PPT)\n";
  return kExitOk;
}

struct SweepOptions {
  std::string family;
  std::string x;
  std::string alpha;
  std::string d;
  std::string quantities;
  std::string out;
  std::string svg;
  double tolerance = kCriterionTolerance;
};

SweepGrid build_grid(const SweepOptions& o, Family default_family) {
  SweepGrid grid;
  grid.family = o.family.empty() ? default_family : parse_family(o.family);
  grid.tolerance = o.tolerance;
  for (const std::string& name : family_axes(grid.family)) {
    if (name == "x" || name == "alpha") {
      const std::string& range = name == "x" ? o.x : o.alpha;
      if (range.empty()) throw UsageError("family " + std::string(to_string(grid.family)) + " needs --" + name);
      grid.axes.push_back(parse_axis(name, range));
    }
  }
  if (grid.family == Family::kStandardForm) {
    if (o.d.empty()) throw UsageError("family standard_form needs --d r1,r2,r3");
    const std::vector<std::string> ranges = split(o.d, ',');
    if (ranges.size() != 3) throw UsageError("--d expects three comma-separated ranges");
    for (int a = 0; a < 3; ++a) grid.axes.push_back(parse_axis("d" + std::to_string(a + 1), ranges[a]));
  }
  if (o.quantities.empty()) {
    const auto all = all_quantities();
    grid.quantities.assign(all.begin(), all.end());
  } else {
    for (const std::string& q : split(o.quantities, ',')) grid.quantities.push_back(parse_quantity(q));
  }
  return grid;
}

int sweep(const SweepOptions& o, std::ostream& out, std::ostream& err) {
  const SweepGrid grid = build_grid(o, Family::kWerner);
  const Table table = grid_sweep(grid);
  std::ostringstream csv;
  write_csv(table, csv);
  emit(o.out, csv.str(), out);
  if (!o.svg.empty()) {
    if (grid.axes.size() > 2) throw UsageError("--svg supports one- or two-axis sweeps");
    std::ostringstream svg;
    write_svg(table, static_cast<int>(grid.axes.size()), "", svg);
    emit(o.svg, svg.str(), out);
  }
  err << "sweep " << to_string(grid.family) << ": " << table.rows.size() << " rows\n";
  return kExitOk;
}

int wedge(const SweepOptions& o, std::ostream& out, std::ostream& err) {
  SweepOptions opts = o;
  if (opts.quantities.empty()) opts.quantities = "concurrence_variant,D";
  const SweepGrid grid = build_grid(opts, Family::kSchmidt);
  if (grid.quantities.size() != 2) throw UsageError("wedge needs exactly two --quantities f,g");
  const Table table = wedge_field(grid, grid.quantities[0], grid.quantities[1]);
  std::ostringstream csv;
  write_csv(table, csv);
  emit(o.out, csv.str(), out);
  if (!o.svg.empty()) {
    std::ostringstream svg;
    write_svg(table, 2, "wedge", svg);
    emit(o.svg, svg.str(), out);
  }
  err << "wedge " << to_string(grid.quantities[0]) << " ^ " << to_string(grid.quantities[1]) << ": "
      << table.rows.size() << " interior points\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Entanglement analysis from invariant operator-valued tensor fields", "iovt"};
  app.require_subcommand(1);

  int basis_n = 2;
  std::string basis_out;
  auto* basis_cmd = app.add_subcommand("basis", "Emit the generalized Pauli basis as JSON");
  basis_cmd->add_option("--n", basis_n, "Local dimension")->required();
  basis_cmd->add_option("--out", basis_out, "Output path (default stdout)");

  AnalyzeOptions analyze_opts;
  auto* analyze_cmd = app.add_subcommand("analyze", "Report invariants and separability of a state");
  analyze_cmd->add_option("--state", analyze_opts.state, "State JSON file");
  analyze_cmd->add_option("--family", analyze_opts.family, "werner | schmidt | standard_form");
  analyze_cmd->add_option("--x", analyze_opts.x, "Mixing parameter");
  analyze_cmd->add_option("--alpha", analyze_opts.alpha, "Schmidt angle (radians)");
  analyze_cmd->add_option("--d", analyze_opts.d, "Standard-form triple d1,d2,d3");
  analyze_cmd->add_option("--dump-state", analyze_opts.dump_state, "Write the analyzed state as JSON");
  analyze_cmd->add_option("--out", analyze_opts.out, "Write L, Omega, K as CSV blocks");
  analyze_cmd->add_option("--tolerance", analyze_opts.tolerance, "Criterion tolerance");

  SweepOptions sweep_opts;
  auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate quantities over a family grid (CSV)");
  SweepOptions wedge_opts;
  auto* wedge_cmd = app.add_subcommand("wedge", "Functional-dependence field df ^ dg (CSV)");
  for (auto [cmd, o] : {std::pair{sweep_cmd, &sweep_opts}, std::pair{wedge_cmd, &wedge_opts}}) {
    cmd->add_option("--family", o->family, "werner | schmidt | standard_form");
    cmd->add_option("--x", o->x, "Range start:stop:count");
    cmd->add_option("--alpha", o->alpha, "Range start:stop:count");
    cmd->add_option("--d", o->d, "Three ranges r1,r2,r3");
    cmd->add_option("--quantities", o->quantities, "Comma-separated quantity names");
    cmd->add_option("--out", o->out, "CSV output path (default stdout)");
    cmd->add_option("--svg", o->svg, "SVG plot output path");
    cmd->add_option("--tolerance", o->tolerance, "Criterion tolerance");
  }

  std::string sf_d;
  double sf_tolerance = kCriterionTolerance;
  auto* sf_cmd = app.add_subcommand("standard-form", "Octahedron and PPT verdicts for a standard-form state");
  sf_cmd->add_option("--d", sf_d, "Triple d1,d2,d3")->required();
  sf_cmd->add_option("--tolerance", sf_tolerance, "Criterion tolerance");

  auto* selftest_cmd = app.add_subcommand("selftest", "Run the acceptance suite");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: usage: " << one_line(e.what()) << '\n';
    return kExitUsage;
  }

  try {
    if (*basis_cmd) {
      emit(basis_out, basis_to_json(generate_basis(basis_n)).dump() + "\n", out);
      return kExitOk;
    }
    if (*analyze_cmd) return analyze(analyze_opts, out, err);
    if (*sweep_cmd) return sweep(sweep_opts, out, err);
    if (*wedge_cmd) return wedge(wedge_opts, out, err);
    if (*sf_cmd) return standard_form(sf_d, sf_tolerance, out, err);
    if (*selftest_cmd) {
      return print_acceptance(run_acceptance(), out) ? kExitOk : kExitFailure;
    }
  } catch (const UsageError& e) {
    err << "error: usage: " << one_line(e.what()) << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << one_line(e.what()) << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: internal: " << one_line(e.what()) << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace iovt::cli
