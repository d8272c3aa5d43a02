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

#include <algorithm>
#include <numbers>

#include <doctest.h>

#include "oracles.hpp"
#include "qwl/register.hpp"
#include "qwl/universality.hpp"
#include "qwl/weyl.hpp"

using namespace qwl;

namespace {

int closure_dim(const std::vector<ComplexMatrix>& gens) { return lie_closure(gens).dimension; }

} // namespace

TEST_SUITE("universality") {

TEST_CASE("theorem1_set generators") {
    const HamiltonianSet s2 = theorem1_set(2);
    REQUIRE(s2.generators.size() == 3);
    const WeylOperators w = build_weyl(2);
    CHECK(s2.generators[0].matrix == tensor(w.X, identity(2)));
    CHECK(s2.generators[1].matrix == tensor(identity(2), w.X));
    CHECK(s2.generators[2].matrix == tensor(w.Z, w.Z));
    CHECK(theorem1_set(3).generators.size() == 5);
    CHECK_THROWS_AS(theorem1_set(1), DomainError);
}

TEST_CASE("lie_closure small cases against the word oracle") {
    const WeylOperators w = build_weyl(2);
    CHECK(closure_dim({w.Z}) == 1);
    CHECK(closure_dim({w.X, w.Z}) == 3);
    CHECK(oracle::lie_dimension_by_words({w.X, w.Z}) == 3);

    for (const HamiltonianSet& set : {theorem1_set(2), theorem2_set(2), theorem1_set(3)}) {
        CAPTURE(set.name);
        CHECK(closure_dim(set.matrices()) == oracle::lie_dimension_by_words(set.matrices()));
    }
}

TEST_CASE("closure dimensions of the qubit sets") {
    // n(2n-1) for the Theorem 1 set, 4^n - 1 with Z_1, Z_2 added.
    CHECK(closure_dim(theorem1_set(2).matrices()) == 6);
    CHECK(closure_dim(theorem1_set(3).matrices()) == 15);
    CHECK(closure_dim(theorem2_set(2).matrices()) == 15);
    CHECK(closure_dim(theorem2_set(3).matrices()) == 63);
}

TEST_CASE("is_universal") {
    const UniversalityReport t1 = is_universal(theorem1_set(2));
    CHECK_FALSE(t1.universal);
    CHECK(t1.expected == 15);
    CHECK(t1.closure.traceless_dimension == 6);
    CHECK(t1.closure.converged);

    const UniversalityReport t2 = is_universal(theorem2_set(2));
    CHECK(t2.universal);
    CHECK(t2.closure.dimension == 15);

    const UniversalityReport t3 = is_universal(theorem3_set(3, 2));
    CHECK(t3.universal);
    CHECK(t3.closure.traceless_dimension == 80);
    CHECK_FALSE(t3.closure.contains_identity);
}

TEST_CASE("theorem3_set structure") {
    const HamiltonianSet s = theorem3_set(3, 2);
    CHECK(s.generators.size() == 8);
    CHECK(s.notes.empty());
    const SetStructureReport r = check_structure(s);
    CHECK(r.hermiticity <= kDefaultTol);
    CHECK(r.neighbour_only);
    CHECK(r.couplings_diagonal);
    int diagonal = 0;
    for (const auto& g : s.generators) {
        if (g.expect_diagonal) {
            ++diagonal;
            CHECK(support(g.matrix, 3, 2) == std::vector<int>{1, 2});
        }
    }
    CHECK(diagonal == 2);
    CHECK_THROWS_AS(theorem3_set(3, 5), CapacityError);
}

TEST_CASE("theorem3_set at d = 2 drops vanishing generators") {
    const HamiltonianSet s = theorem3_set(2, 2);
    CHECK(s.generators.size() == 4);
    CHECK(s.notes.size() == 4);
    // The surviving generators are 2 Z_1, 2 X_1, 2 X_2, 2 Z_1 Z_2: Theorem 2's set
    // without Z_2, so the closure is so(5) rather than su(4).
    const auto t2 = theorem2_set(2).matrices();
    std::vector<Eigen::VectorXd> span;
    for (const auto& m : t2) span.push_back(oracle::realify(m));
    const int base_rank = oracle::svd_rank(span);
    for (const auto& g : s.generators) {
        span.push_back(oracle::realify(g.matrix));
        CHECK(oracle::svd_rank(span) == base_rank);
        span.pop_back();
    }
    CHECK(closure_dim(s.matrices()) == 10);
    CHECK(oracle::lie_dimension_by_words(s.matrices()) == 10);
}

TEST_CASE("qutrit example set") {
    const auto one = qutrit_one_site_hamiltonians();
    ComplexMatrix h1 = ComplexMatrix::Zero(3, 3);
    h1.diagonal() << 1.0, -1.0, 0.0;
    CHECK(one[0] == h1);
    ComplexMatrix h3 = ComplexMatrix::Ones(3, 3) - identity(3);
    CHECK(one[2] == h3);
    const WeylOperators w = build_weyl(3);
    CHECK(deviation(one[3], Complex(0.0, 1.0) * (w.X - dagger(w.X))) == 0.0);

    ComplexMatrix hd = ComplexMatrix::Zero(9, 9);
    hd.diagonal() << 1, 0, 0, 0, 1, 0, 0, 0, 1;
    CHECK(qutrit_pair_hamiltonian() == hd);

    const HamiltonianSet s = qutrit_example_set(2);
    CHECK(s.generators.size() == 13);
    const SetStructureReport r = check_structure(s);
    CHECK(r.neighbour_only);
    CHECK(r.couplings_diagonal);

    const UniversalityReport u = is_universal(s);
    CHECK(u.universal);
    // H_d has non-zero trace, so the identity direction is generated as well.
    CHECK(u.closure.dimension == 81);
    CHECK(u.closure.contains_identity);
    CHECK(u.closure.traceless_dimension == 80);
}

TEST_CASE("closure basis invariants") {
    const LieClosureResult r = lie_closure(theorem2_set(2).matrices());
    CHECK(r.converged);
    double worst_ortho = 0.0;
    double worst_anti = 0.0;
    for (std::size_t i = 0; i < r.basis.size(); ++i) {
        worst_anti = std::max(worst_anti, (r.basis[i] + r.basis[i].adjoint()).norm());
        for (std::size_t j = 0; j < r.basis.size(); ++j) {
            const double ip = hs_inner(r.basis[i], r.basis[j]).real();
            worst_ortho = std::max(worst_ortho, std::abs(ip - (i == j ? 1.0 : 0.0)));
        }
    }
    CHECK(worst_ortho <= 1e-8);
    CHECK(worst_anti <= 1e-8);
    CHECK(max_commutator_residual(r) <= 1e-6);
}

TEST_CASE("closure dimension is invariant under generator edits") {
    auto gens = theorem2_set(2).matrices();
    const int base = closure_dim(gens);
    REQUIRE(base == 15);

    auto permuted = gens;
    std::reverse(permuted.begin(), permuted.end());
    CHECK(closure_dim(permuted) == base);
    std::rotate(permuted.begin(), permuted.begin() + 2, permuted.end());
    CHECK(closure_dim(permuted) == base);

    auto scaled = gens;
    scaled[0] *= -3.5;
    scaled[3] *= 0.01;
    CHECK(closure_dim(scaled) == base);

    auto mixed = gens;
    mixed[1] = gens[1] + 0.7 * gens[0] - 2.0 * gens[4];
    CHECK(closure_dim(mixed) == base);

    // The same edits on the non-universal set keep its dimension too.
    auto t1 = theorem1_set(3).matrices();
    t1[2] = t1[2] + 0.5 * t1[0];
    std::swap(t1[0], t1[4]);
    CHECK(closure_dim(t1) == 15);
}

TEST_CASE("lie_closure errors and cap") {
    ComplexMatrix bad = identity(2);
    bad(0, 1) = 1.0;
    CHECK_THROWS_AS(lie_closure({bad}), ContractError);
    CHECK_THROWS_AS(lie_closure({identity(2), identity(3)}), ShapeError);

    LieClosureOptions capped;
    capped.max_dim = 5;
    const LieClosureResult r = lie_closure(theorem2_set(2).matrices(), capped);
    CHECK_FALSE(r.converged);
    CHECK(r.dimension == 5);

    CHECK(lie_closure({}).dimension == 0);
}

TEST_CASE("lie_closure is deterministic") {
    const auto a = lie_closure(theorem3_set(3, 2).matrices());
    const auto b = lie_closure(theorem3_set(3, 2).matrices());
    REQUIRE(a.basis.size() == b.basis.size());
    for (std::size_t i = 0; i < a.basis.size(); ++i) CHECK(a.basis[i] == b.basis[i]);
    CHECK(a.iterations == b.iterations);
}

TEST_CASE("gate") {
    CHECK(deviation(gate(ComplexMatrix::Zero(2, 2), 1.0), identity(2)) <= 1e-14);
    ComplexMatrix expected = identity(9);
    expected(0, 0) = expected(4, 4) = expected(8, 8) = -1.0;
    CHECK(deviation(gate(qutrit_pair_hamiltonian(), std::numbers::pi), expected) <= 1e-12);
    const WeylOperators w = build_weyl(2);
    const ComplexMatrix g = gate(w.X, std::numbers::pi / 2.0);
    CHECK(unitarity_defect(g) <= 1e-10);
    CHECK(deviation(g, Complex(0.0, -1.0) * w.X) <= 1e-12);
}

TEST_CASE("custom sets") {
    const WeylOperators w = build_weyl(2);
    const HamiltonianSet s = custom_set(2, 1, "pauli", {{"x", w.X}, {"z", w.Z}});
    CHECK(is_universal(s).universal);
    CHECK_THROWS_AS(custom_set(2, 2, "bad", {{"x", w.X}}), ShapeError);
}

} // TEST_SUITE
