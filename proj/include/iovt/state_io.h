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

#include <filesystem>
#include <string>

#include "json.hpp"

#include "iovt/qstate.h"
#include "iovt/su_basis.h"

namespace iovt {

/// [[[re, im], ...], ...], row-major.
nlohmann::json complex_matrix_to_json(const ComplexMatrix& m);

/// [[v, ...], ...], row-major.
nlohmann::json real_matrix_to_json(const RealMatrix& m);

/// {"n": n, "sigma": [...], "c": [[[...]]], "d": [[[...]]]} with c and d
/// indexed from generator 1 at position 0.
nlohmann::json basis_to_json(const HermitianBasis& basis);

/// {"dim": d, "matrix": [[[re, im], ...], ...]}.
nlohmann::json state_to_json(const DensityOperator& rho);

/// Structural problems throw kParse; invariant violations throw kValidation.
DensityOperator state_from_json(const nlohmann::json& doc);

DensityOperator read_state_file(const std::filesystem::path& path);
void write_state_file(const std::filesystem::path& path, const DensityOperator& rho);

}  // namespace iovt
