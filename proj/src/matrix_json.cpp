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

#include "qwl/matrix_json.hpp"

#include <fstream>
#include <sstream>

#include "qwl/errors.hpp"

namespace qwl {

using nlohmann::json;

namespace {

Complex complex_from_json(const json& pair, std::size_t index) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
        throw ParseError("entry " + std::to_string(index) + " is not a [re, im] number pair");
    }
    return {pair[0].get<double>(), pair[1].get<double>()};
}

Eigen::Index positive_dim(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer()) {
        throw ParseError(std::string("matrix field '") + key + "' missing or not an integer");
    }
    const auto value = j[key].get<long long>();
    if (value <= 0) {
        throw ParseError(std::string("matrix field '") + key + "' must be positive");
    }
    return static_cast<Eigen::Index>(value);
}

// 1-based line and column of a byte offset.
std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

} // namespace

json matrix_to_json(const ComplexMatrix& m) {
    json entries = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index k = 0; k < m.cols(); ++k) {
            entries.push_back({m(i, k).real(), m(i, k).imag()});
        }
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_json(const json& j) {
    if (!j.is_object()) {
        throw ParseError("matrix must be a JSON object");
    }
    const Eigen::Index rows = positive_dim(j, "rows");
    const Eigen::Index cols = positive_dim(j, "cols");
    if (!j.contains("entries") || !j["entries"].is_array()) {
        throw ParseError("matrix field 'entries' missing or not an array");
    }
    const json& entries = j["entries"];
    if (entries.size() != static_cast<std::size_t>(rows * cols)) {
        throw ParseError("matrix has " + std::to_string(entries.size()) + " entries, expected " +
                         std::to_string(rows * cols));
    }
    ComplexMatrix m(rows, cols);
    std::size_t idx = 0;
    for (Eigen::Index i = 0; i < rows; ++i) {
        for (Eigen::Index k = 0; k < cols; ++k, ++idx) {
            m(i, k) = complex_from_json(entries[idx], idx);
        }
    }
    if (!all_finite(m)) {
        throw ParseError("matrix contains non-finite entries");
    }
    return m;
}

json vector_to_json(const ComplexVector& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out.push_back({v(i).real(), v(i).imag()});
    }
    return out;
}

ComplexVector vector_from_json(const json& j) {
    if (!j.is_array() || j.empty()) {
        throw ParseError("vector must be a non-empty array of [re, im] pairs");
    }
    ComplexVector v(static_cast<Eigen::Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
        v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i], i);
    }
    return v;
}

json parse_json_text(std::string_view text, std::string_view source_name) {
    try {
        return json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
        std::ostringstream msg;
        msg << source_name << ":" << line << ":" << col << ": malformed JSON";
        throw ParseError(msg.str());
    }
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(path + ": cannot open file");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_json_text(buffer.str(), path);
}

std::vector<LabeledMatrix> labeled_matrices_from_json(const json& j) {
    if (!j.is_array()) {
        throw ParseError("operator list must be a JSON array");
    }
    std::vector<LabeledMatrix> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        const json& item = j[i];
        if (!item.is_object() || !item.contains("matrix")) {
            throw ParseError("operator " + std::to_string(i) + " lacks a 'matrix' field");
        }
        std::string label = "H" + std::to_string(i);
        if (item.contains("label")) {
            if (!item["label"].is_string()) {
                throw ParseError("operator " + std::to_string(i) + " label is not a string");
            }
            label = item["label"].get<std::string>();
        }
        try {
            out.emplace_back(std::move(label), matrix_from_json(item["matrix"]));
        } catch (const ParseError& e) {
            throw ParseError("operator " + std::to_string(i) + ": " + e.what());
        }
    }
    return out;
}

json labeled_matrices_to_json(const std::vector<LabeledMatrix>& items) {
    json out = json::array();
    for (const auto& [label, m] : items) {
        out.push_back({{"label", label}, {"matrix", matrix_to_json(m)}});
    }
    return out;
}

} // namespace qwl
