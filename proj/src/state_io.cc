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

#include "iovt/state_io.h"

#include <fstream>
#include <sstream>

namespace iovt {

namespace {

[[noreturn]] void parse_error(const std::string& what) {
  throw Error(ErrorKind::kParse, "state file: " + what);
}

double number_at(const nlohmann::json& v, const char* what) {
  if (!v.is_number()) parse_error(std::string(what) + " must be a number");
  return v.get<double>();
}

}  // namespace

nlohmann::json complex_matrix_to_json(const ComplexMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json real_matrix_to_json(const RealMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json basis_to_json(const HermitianBasis& basis) {
  nlohmann::json doc;
  doc["n"] = basis.n;
  doc["sigma"] = nlohmann::json::array();
  for (const ComplexMatrix& s : basis.sigma) doc["sigma"].push_back(complex_matrix_to_json(s));
  const int g = basis.generators();
  auto tensor = [g](const StructureTensor& t) {
    nlohmann::json out = nlohmann::json::array();
    for (int j = 1; j <= g; ++j) {
      nlohmann::json plane = nlohmann::json::array();
      for (int k = 1; k <= g; ++k) {
        nlohmann::json line = nlohmann::json::array();
        for (int l = 1; l <= g; ++l) line.push_back(t(j, k, l));
        plane.push_back(std::move(line));
      }
      out.push_back(std::move(plane));
    }
    return out;
  };
  doc["c"] = tensor(basis.c);
  doc["d"] = tensor(basis.d);
  return doc;
}

nlohmann::json state_to_json(const DensityOperator& rho) {
  return {{"dim", rho.dim()}, {"matrix", complex_matrix_to_json(rho.matrix())}};
}

DensityOperator state_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) parse_error("top level must be an object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer()) parse_error("missing integer 'dim'");
  if (!doc.contains("matrix") || !doc["matrix"].is_array()) parse_error("missing array 'matrix'");
  const auto& rows = doc["matrix"];
  const auto size = static_cast<Eigen::Index>(rows.size());
  ComplexMatrix m(size, size);
  for (Eigen::Index i = 0; i < size; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != size) {
      parse_error("matrix must be square");
    }
    for (Eigen::Index j = 0; j < size; ++j) {
      const auto& entry = row[static_cast<std::size_t>(j)];
      if (!entry.is_array() || entry.size() != 2) parse_error("entries must be [re, im] pairs");
      m(i, j) = Complex(number_at(entry[0], "real part"), number_at(entry[1], "imaginary part"));
    }
  }
  if (doc["dim"].get<long long>() != size) {
    throw Error(ErrorKind::kValidation, "'dim' does not match the matrix size");
  }
  return DensityOperator::from_matrix(m);
}

DensityOperator read_state_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParse, "cannot open state file " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::kParse, std::string("malformed JSON: ") + e.what());
  }
  return state_from_json(doc);
}

void write_state_file(const std::filesystem::path& path, const DensityOperator& rho) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::kConfiguration, "cannot write " + path.string());
  out << state_to_json(rho).dump(2) << '\n';
}

}  // namespace iovt
