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

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "json.hpp"

namespace iovt::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "iovt_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

bool all_finite(const json& j) {
  if (j.is_number()) return std::isfinite(j.get<double>());
  if (j.is_structured()) {
    for (const json& v : j) {
      if (!all_finite(v)) return false;
    }
  }
  return true;
}

int count_lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

TEST(Cli, AnalyzeWerner) {
  const Outcome r = invoke({"analyze", "--family", "werner", "--x", "0.5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json report = json::parse(r.out);
  EXPECT_NEAR(report.at("concurrence_wootters").get<double>(), 0.25, 1e-9);
  EXPECT_NEAR(report.at("f2R").get<double>(), 7.5, 1e-12);
  EXPECT_NEAR(report.at("purity").get<double>() + report.at("linear_entropy").get<double>(), 1.0, 1e-15);
  EXPECT_EQ(report.at("verdict").at("status"), "entangled");
  EXPECT_EQ(report.at("L").size(), 6u);
  EXPECT_TRUE(all_finite(report));
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, AnalyzeReportsAreFinite) {
  for (auto args : std::vector<std::vector<std::string>>{
           {"analyze", "--family", "werner", "--x", "0"},
           {"analyze", "--family", "werner", "--x", "1"},
           {"analyze", "--family", "schmidt", "--x", "1", "--alpha", "0"},
           {"analyze", "--family", "standard_form", "--d", "1,-1,1"}}) {
    const Outcome r = invoke(args);
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_TRUE(all_finite(json::parse(r.out)));
  }
}

TEST(Cli, AnalyzeDumpAndReloadGiveIdenticalReports) {
  const fs::path p = scratch("werner.json");
  const Outcome a = invoke({"analyze", "--family", "werner", "--x", "0.5", "--dump-state", p.string()});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  const Outcome b = invoke({"analyze", "--state", p.string()});
  ASSERT_EQ(b.code, kExitOk) << b.err;
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, AnalyzeWritesMatrixCsv) {
  const fs::path p = scratch("blocks.csv");
  ASSERT_EQ(invoke({"analyze", "--family", "werner", "--x", "0.3", "--out", p.string()}).code, kExitOk);
  const std::string csv = slurp(p);
  for (const char* block : {"# L\n", "# Omega\n", "# K_real\n", "# K_imag\n"}) {
    EXPECT_NE(csv.find(block), std::string::npos) << block;
  }
}

TEST(Cli, LoadErrors) {
  const fs::path bad = scratch("bad.json");
  std::ofstream(bad) << "{\"dim\": 2,";
  const Outcome parse = invoke({"analyze", "--state", bad.string()});
  EXPECT_EQ(parse.code, kExitParse);
  EXPECT_EQ(count_lines(parse.err), 1);
  EXPECT_EQ(parse.err.rfind("error: parse:", 0), 0u) << parse.err;

  const fs::path invalid = scratch("invalid.json");
  std::ofstream(invalid) << R"({"dim": 2, "matrix": [[[1,0],[0,0]],[[0,0],[1,0]]]})";
  const Outcome validation = invoke({"analyze", "--state", invalid.string()});
  EXPECT_EQ(validation.code, kExitValidation);
  EXPECT_NE(validation.err.find("trace"), std::string::npos);

  EXPECT_EQ(invoke({"analyze", "--family", "werner", "--x", "1.5"}).code, kExitValidation);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({"analyze", "--bogus"}).code, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"sweep", "--family", "werner", "--x", "0:1:3", "--quantities", "nope"}).code, kExitUsage);
  EXPECT_EQ(invoke({"wedge", "--family", "schmidt", "--x", "0:1:2", "--alpha", "0:1:5"}).code, kExitUsage);
  const Outcome both = invoke({"analyze"});
  EXPECT_EQ(both.code, kExitUsage);
  EXPECT_EQ(count_lines(both.err), 1);
}

TEST(Cli, StandardForm) {
  const Outcome r = invoke({"standard-form", "--d", "0,0,0"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json report = json::parse(r.out);
  EXPECT_TRUE(report.at("octahedron").at("separable").get<bool>());
  EXPECT_EQ(report.at("octahedron").at("l1").get<double>(), 0.0);
  EXPECT_TRUE(report.at("ppt").at("separable").get<bool>());

  const json bell = json::parse(invoke({"standard-form", "--d", "1,-1,1"}).out);
  EXPECT_FALSE(bell.at("octahedron").at("separable").get<bool>());
  EXPECT_NEAR(bell.at("ppt").at("min_eigenvalue").get<double>(), -0.5, 1e-12);

  EXPECT_EQ(invoke({"standard-form", "--d", "1,1,1"}).code, kExitValidation);
}

TEST(Cli, Basis) {
  const Outcome r = invoke({"basis", "--n", "3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(json::parse(r.out).at("sigma").size(), 9u);
  EXPECT_EQ(invoke({"basis", "--n", "1"}).code, kExitValidation);
}

TEST(Cli, SweepSchmidtGrid) {
  const Outcome r = invoke({"sweep", "--family", "schmidt", "--x", "0:1:11", "--alpha", "0:1.5708:11",
                            "--quantities", "D"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(count_lines(r.out), 122);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "x,alpha,D");
}

TEST(Cli, SweepWritesFiles) {
  const fs::path csv = scratch("sweep.csv");
  const fs::path svg = scratch("sweep.svg");
  const Outcome r = invoke({"sweep", "--family", "werner", "--x", "0:1:201", "--quantities",
                            "concurrence_wootters,purity", "--out", csv.string(), "--svg", svg.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(count_lines(slurp(csv)), 202);
  EXPECT_NE(slurp(svg).find("<svg"), std::string::npos);
}

TEST(Cli, WedgeDefaults) {
  const Outcome r = invoke({"wedge", "--x", "0:1:11", "--alpha", "0:1.5:11"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "x,alpha,wedge,boundary_flag");
  EXPECT_EQ(count_lines(r.out), 1 + 9 * 9);
}

TEST(Cli, Selftest) {
  const Outcome r = invoke({"selftest"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  std::istringstream lines(r.out);
  std::string line;
  int passed = 0;
  while (std::getline(lines, line)) passed += line.rfind("PASS ", 0) == 0;
  EXPECT_EQ(passed, 12);
}

}  // namespace
}  // namespace iovt::cli
