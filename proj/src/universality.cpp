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

#include "qwl/universality.hpp"

#include <algorithm>

#include "qwl/errors.hpp"
#include "qwl/register.hpp"
#include "qwl/weyl.hpp"

namespace qwl {

namespace {

constexpr double kZeroGenerator = 1e-12;

void add(HamiltonianSet& set, std::string label, ComplexMatrix m, bool diagonal = false) {
    if (m.norm() < kZeroGenerator) {
        set.notes.push_back("dropped zero generator " + label);
        return;
    }
    set.generators.push_back({std::move(label), std::move(m), diagonal});
}

std::string site_label(const std::string& op, int k) { return op + "_" + std::to_string(k); }

void add_hermitian_parts(HamiltonianSet& set, const std::string& label, const ComplexMatrix& a, bool diagonal) {
    const ComplexMatrix ad = dagger(a);
    add(set, label + "+h.c.", a + ad, diagonal);
    add(set, "i(" + label + "-h.c.)", Complex(0.0, 1.0) * (a - ad), diagonal);
}

HamiltonianSet qubit_chain(int n, std::string name) {
    if (n < 2) {
        throw DomainError(name + ": n must be at least 2");
    }
    register_dim(2, n, kMaxHamiltonianDim);
    const WeylOperators w = build_weyl(2);
    HamiltonianSet set{2, n, std::move(name), {}, {}};
    for (int k = 1; k <= n; ++k) {
        add(set, site_label("X", k), embed_site(w.X, n, k));
    }
    for (int k = 1; k < n; ++k) {
        add(set, "Z_" + std::to_string(k) + "Z_" + std::to_string(k + 1),
            embed_site(w.Z, n, k) * embed_site(w.Z, n, k + 1), true);
    }
    return set;
}

} // namespace

std::vector<ComplexMatrix> HamiltonianSet::matrices() const {
    std::vector<ComplexMatrix> out;
    out.reserve(generators.size());
    for (const auto& g : generators) {
        out.push_back(g.matrix);
    }
    return out;
}

HamiltonianSet theorem1_set(int n) { return qubit_chain(n, "theorem1"); }

HamiltonianSet theorem2_set(int n) {
    HamiltonianSet set = qubit_chain(n, "theorem2");
    const WeylOperators w = build_weyl(2);
    add(set, "Z_1", embed_site(w.Z, n, 1));
    add(set, "Z_2", embed_site(w.Z, n, 2));
    return set;
}

HamiltonianSet theorem3_set(int d, int n) {
    if (d < 2 || n < 2) {
        throw DomainError("theorem3: requires d >= 2 and n >= 2");
    }
    register_dim(d, n, kMaxHamiltonianDim);
    const WeylOperators w = build_weyl(d);
    HamiltonianSet set{d, n, "theorem3", {}, {}};
    add_hermitian_parts(set, "Z_1", embed_site(w.Z, n, 1), false);
    for (int k = 1; k <= n; ++k) {
        add_hermitian_parts(set, site_label("X", k), embed_site(w.X, n, k), false);
    }
    for (int k = 1; k < n; ++k) {
        const ComplexMatrix pair = embed_site(w.Z, n, k) * embed_site(dagger(w.Z), n, k + 1);
        add_hermitian_parts(set, "Z_" + std::to_string(k) + "Z^dag_" + std::to_string(k + 1), pair, true);
    }
    return set;
}

std::vector<ComplexMatrix> qutrit_one_site_hamiltonians() {
    const Complex i(0.0, 1.0);
    ComplexMatrix h1 = ComplexMatrix::Zero(3, 3);
    h1.diagonal() << 1.0, -1.0, 0.0;
    ComplexMatrix h2 = ComplexMatrix::Zero(3, 3);
    h2.diagonal() << 1.0, 0.0, -1.0;
    ComplexMatrix h3(3, 3);
    h3 << 0.0, 1.0, 1.0,
          1.0, 0.0, 1.0,
          1.0, 1.0, 0.0;
    ComplexMatrix h4(3, 3);
    h4 << 0.0, i, -i,
          -i, 0.0, i,
          i, -i, 0.0;
    return {h1, h2, h3, h4};
}

ComplexMatrix qutrit_pair_hamiltonian() {
    ComplexMatrix h = ComplexMatrix::Zero(9, 9);
    for (int j = 0; j < 3; ++j) {
        h(4 * j, 4 * j) = 1.0;
    }
    return h;
}

HamiltonianSet qutrit_example_set(int n) {
    if (n < 2) {
        throw DomainError("qutrit-example: n must be at least 2");
    }
    register_dim(3, n, kMaxHamiltonianDim);
    const WeylOperators w = build_weyl(3);
    const auto one_site = qutrit_one_site_hamiltonians();
    HamiltonianSet set{3, n, "qutrit-example", {}, {}};
    for (int k = 1; k <= n; ++k) {
        for (std::size_t m = 0; m < one_site.size(); ++m) {
            add(set, "G" + std::to_string(m + 1) + "_" + std::to_string(k), embed_site(one_site[m], n, k));
        }
        add_hermitian_parts(set, site_label("X", k), embed_site(w.X, n, k), false);
    }
    const ComplexMatrix pair = qutrit_pair_hamiltonian();
    for (int k = 1; k < n; ++k) {
        const ComplexMatrix left = identity(register_dim(3, k - 1));
        const ComplexMatrix right = identity(register_dim(3, n - k - 1));
        add(set, "H_d_" + std::to_string(k) + std::to_string(k + 1), tensor(tensor(left, pair), right), true);
    }
    return set;
}

HamiltonianSet custom_set(int d, int n, std::string name, const std::vector<LabeledMatrix>& items) {
    if (d < 2 || n < 1) {
        throw DomainError("custom set: requires d >= 2 and n >= 1");
    }
    const auto dim = static_cast<Eigen::Index>(register_dim(d, n, kMaxHamiltonianDim));
    HamiltonianSet set{d, n, std::move(name), {}, {}};
    for (const auto& [label, m] : items) {
        if (m.rows() != dim || m.cols() != dim) {
            throw ShapeError("custom set: generator " + label + " is not " + std::to_string(dim) + "x" +
                             std::to_string(dim));
        }
        add(set, label, m);
    }
    return set;
}

std::vector<int> support(const ComplexMatrix& h, int d, int n, double tol) {
    const WeylOperators w = build_weyl(d);
    std::vector<int> sites;
    for (int s = 1; s <= n; ++s) {
        const ComplexMatrix xs = embed_site(w.X, n, s);
        const ComplexMatrix zs = embed_site(w.Z, n, s);
        if (commutator(h, xs).norm() > tol || commutator(h, zs).norm() > tol) {
            sites.push_back(s);
        }
    }
    return sites;
}

SetStructureReport check_structure(const HamiltonianSet& set) {
    SetStructureReport report;
    for (const auto& g : set.generators) {
        report.hermiticity = std::max(report.hermiticity, hermiticity_defect(g.matrix));
        const auto sites = support(g.matrix, set.d, set.n);
        if (sites.size() > 2 || (sites.size() == 2 && sites[1] != sites[0] + 1)) {
            report.neighbour_only = false;
        }
        if (g.expect_diagonal) {
            const ComplexMatrix off = g.matrix - ComplexMatrix(g.matrix.diagonal().asDiagonal());
            if (off.norm() > kExactTol) {
                report.couplings_diagonal = false;
            }
        }
    }
    return report;
}

UniversalityReport is_universal(const HamiltonianSet& set, const LieClosureOptions& options) {
    UniversalityReport report;
    const long long dim = register_dim(set.d, set.n, kMaxHamiltonianDim);
    report.expected = static_cast<int>(dim * dim - 1);
    report.closure = lie_closure(set.matrices(), options);
    report.universal = report.closure.traceless_dimension >= report.expected;
    return report;
}

ComplexMatrix gate(const ComplexMatrix& h, double tau) { return expm_hermitian(h, tau); }

} // namespace qwl
