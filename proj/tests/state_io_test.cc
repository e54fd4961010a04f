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

#include <filesystem>
#include <fstream>
#include <functional>

#include <gtest/gtest.h>

#include "iovt/random_states.h"

namespace iovt {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::kConfiguration;
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "iovt_state_io_test";
  fs::create_directories(dir);
  return dir / name;
}

TEST(StateJson, Layout) {
  const json doc = state_to_json(werner(1.0));
  EXPECT_EQ(doc.at("dim"), 4);
  ASSERT_EQ(doc.at("matrix").size(), 4u);
  EXPECT_DOUBLE_EQ(doc["matrix"][0][0][0].get<double>(), 0.5);
  EXPECT_DOUBLE_EQ(doc["matrix"][0][3][0].get<double>(), 0.5);
  EXPECT_EQ(doc["matrix"][0][3][1].get<double>(), 0.0);
}

TEST(StateJson, RoundTripIsExact) {
  Rng rng(90);
  for (int dim : {2, 4, 9}) {
    const DensityOperator rho = random_density(dim, rng);
    const DensityOperator back = state_from_json(json::parse(state_to_json(rho).dump()));
    EXPECT_EQ(back.matrix(), rho.matrix());
  }
}

TEST(StateJson, FileRoundTrip) {
  Rng rng(91);
  const DensityOperator rho = random_density(4, 2, rng);
  const fs::path p = scratch("round_trip.json");
  write_state_file(p, rho);
  EXPECT_EQ(read_state_file(p).matrix(), rho.matrix());
}

TEST(StateJson, StructuralErrorsAreParseErrors) {
  EXPECT_EQ(kind_of([] { state_from_json(json::array()); }), ErrorKind::kParse);
  EXPECT_EQ(kind_of([] { state_from_json(json{{"dim", 2}}); }), ErrorKind::kParse);
  EXPECT_EQ(kind_of([] { state_from_json(json::parse(R"({"dim": 1, "matrix": [[1.0]]})")); }),
            ErrorKind::kParse);
  EXPECT_EQ(kind_of([] { state_from_json(json::parse(R"({"dim": 2, "matrix": [[[1,0],[0,0]],[[0,0]]]})")); }),
            ErrorKind::kParse);
  EXPECT_EQ(kind_of([] { state_from_json(json::parse(R"({"dim": "two", "matrix": [[[1,0]]]})")); }),
            ErrorKind::kParse);
}

TEST(StateJson, InvariantErrorsAreValidationErrors) {
  EXPECT_EQ(kind_of([] { state_from_json(json::parse(R"({"dim": 2, "matrix": [[[1,0]]]})")); }),
            ErrorKind::kValidation);
  // Trace 2.
  EXPECT_EQ(kind_of([] {
              state_from_json(json::parse(R"({"dim": 2, "matrix": [[[1,0],[0,0]],[[0,0],[1,0]]]})"));
            }),
            ErrorKind::kValidation);
  // Not Hermitian.
  EXPECT_EQ(kind_of([] {
              state_from_json(json::parse(R"({"dim": 2, "matrix": [[[0.5,0],[0.2,0]],[[0,0],[0.5,0]]]})"));
            }),
            ErrorKind::kValidation);
}

TEST(StateFile, MalformedAndMissing) {
  const fs::path p = scratch("malformed.json");
  std::ofstream(p) << "{\"dim\": 2, \"matrix\": [";
  EXPECT_EQ(kind_of([&] { read_state_file(p); }), ErrorKind::kParse);
  EXPECT_EQ(kind_of([] { read_state_file(scratch("does_not_exist.json")); }), ErrorKind::kParse);
}

TEST(BasisJson, QubitStructureConstants) {
  const json doc = basis_to_json(generate_basis(2));
  EXPECT_EQ(doc.at("n"), 2);
  EXPECT_EQ(doc.at("sigma").size(), 4u);
  EXPECT_NEAR(doc["c"][0][1][2].get<double>(), 1.0, 1e-15);
  EXPECT_NEAR(doc["c"][1][0][2].get<double>(), -1.0, 1e-15);
  EXPECT_NEAR(doc["d"][0][0][0].get<double>(), 0.0, 1e-15);
}

TEST(MatrixJson, RealLayout) {
  RealMatrix m(2, 3);
  m << 1, 2, 3, 4, 5, 6;
  EXPECT_EQ(real_matrix_to_json(m).dump(), "[[1.0,2.0,3.0],[4.0,5.0,6.0]]");
}

}  // namespace
}  // namespace iovt
