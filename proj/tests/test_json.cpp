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

#include <doctest.h>

#include "qwl/errors.hpp"
#include "qwl/matrix_json.hpp"
#include "qwl/random.hpp"

using namespace qwl;
using nlohmann::json;

TEST_SUITE("json") {

TEST_CASE("matrix JSON round trip is exact") {
    RandomSource rng(4);
    ComplexMatrix m(2, 3);
    for (Eigen::Index j = 0; j < 3; ++j)
        for (Eigen::Index i = 0; i < 2; ++i) m(i, j) = rng.complex_normal();
    const json j = matrix_to_json(m);
    CHECK(j["rows"] == 2);
    CHECK(j["cols"] == 3);
    CHECK(j["entries"].size() == 6);
    // Row-major order.
    CHECK(j["entries"][1][0].get<double>() == m(0, 1).real());
    const ComplexMatrix back = matrix_from_json(json::parse(j.dump()));
    CHECK(back == m);
}

TEST_CASE("matrix JSON rejects malformed input") {
    CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"rows": 2, "cols": 2, "entries": [[1,0],[0,0],[0,0]]})")),
                    ParseError);
    CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"rows": 1, "cols": 1, "entries": [[1]]})")), ParseError);
    CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"rows": 0, "cols": 1, "entries": []})")), ParseError);
    CHECK_THROWS_AS(matrix_from_json(json::parse(R"({"cols": 1, "entries": [[1,0]]})")), ParseError);
    CHECK_THROWS_AS(matrix_from_json(json::parse(R"([1,2])")), ParseError);
}

TEST_CASE("syntax errors carry line and column") {
    const std::string text = "{\n  \"rows\": 1,\n  \"cols\": 1 x\n}";
    try {
        parse_json_text(text, "state.json");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("state.json:3:") == 0);
    }
}

TEST_CASE("labeled operator lists") {
    const json j = json::parse(R"([
        {"label": "A", "matrix": {"rows": 1, "cols": 1, "entries": [[2, 0]]}},
        {"matrix": {"rows": 1, "cols": 1, "entries": [[0, 1]]}}
    ])");
    const auto items = labeled_matrices_from_json(j);
    REQUIRE(items.size() == 2);
    CHECK(items[0].first == "A");
    CHECK(items[1].first == "H1");
    CHECK(items[1].second(0, 0) == Complex(0.0, 1.0));
    CHECK(labeled_matrices_from_json(labeled_matrices_to_json(items)) == items);
    CHECK_THROWS_AS(labeled_matrices_from_json(json::parse(R"([{"label": "A"}])")), ParseError);
}

} // TEST_SUITE
