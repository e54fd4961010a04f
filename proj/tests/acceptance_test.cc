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

#include <chrono>
#include <iostream>

#include "iovt/acceptance.h"

int main() {
  const auto start = std::chrono::steady_clock::now();
  const bool ok = iovt::print_acceptance(iovt::run_acceptance(), std::cout);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  std::cout << (ok ? "all criteria passed" : "some criteria FAILED") << " in " << elapsed.count()
            << " s\n";
  return ok ? 0 : 1;
}
