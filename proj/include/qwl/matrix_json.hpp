// Copyright 2026 The qwl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qwl/matrix.hpp"

namespace qwl {

// Library-wide matrix format:
//   {"rows": R, "cols": C, "entries": [[re, im], ...]}   (row-major)

nlohmann::json matrix_to_json(const ComplexMatrix& m);

/// Throws ParseError when fields are missing, of the wrong type, or the
/// entry count differs from rows * cols.
ComplexMatrix matrix_from_json(const nlohmann::json& j);

/// Column vector as a list of [re, im] pairs.
nlohmann::json vector_to_json(const ComplexVector& v);
ComplexVector vector_from_json(const nlohmann::json& j);

/// Parse JSON text; syntax errors are reported with line and column.
nlohmann::json parse_json_text(std::string_view text, std::string_view source_name);

/// Read and parse a JSON file (ParseError on I/O or syntax failure).
nlohmann::json read_json_file(const std::string& path);

using LabeledMatrix = std::pair<std::string, ComplexMatrix>;

/// Operator list format: [{"label": "...", "matrix": {...}}, ...].
std::vector<LabeledMatrix> labeled_matrices_from_json(const nlohmann::json& j);
nlohmann::json labeled_matrices_to_json(const std::vector<LabeledMatrix>& items);

} // namespace qwl
