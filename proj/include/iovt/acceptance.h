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
#include <string>
#include <vector>

namespace iovt {

struct CriterionResult {
  int id;
  std::string name;
  bool passed;
  std::string detail;
};

/// Evaluates every acceptance criterion with fixed seeds and tolerances.
std::vector<CriterionResult> run_acceptance(int threads = 0);

/// One "PASS|FAIL <id> <name>: <detail>" line per criterion. Returns true
/// when all passed.
bool print_acceptance(const std::vector<CriterionResult>& results, std::ostream& out);

}  // namespace iovt
