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
#include <vector>

#include "qwl/lie_closure.hpp"
#include "qwl/matrix.hpp"
#include "qwl/matrix_json.hpp"

namespace qwl {

/// Register dimension cap for the Hamiltonian sets (closure works on (d^n)^2-dim algebras).
inline constexpr long long kMaxHamiltonianDim = 81;

struct Generator {
    std::string label;
    ComplexMatrix matrix;
    bool expect_diagonal = false; // two-qudit Z-type couplings
};

/// Labeled Hermitian generators on an n-qudit register.
struct HamiltonianSet {
    int d = 0;
    int n = 0;
    std::string name;
    std::vector<Generator> generators;
    std::vector<std::string> notes; // e.g. dropped zero generators

    std::vector<ComplexMatrix> matrices() const;
};

/// X_k for every site and Z_k Z_{k+1} for every neighbouring pair (qubits).
HamiltonianSet theorem1_set(int n);

/// theorem1_set(n) plus Z_1 and Z_2.
HamiltonianSet theorem2_set(int n);

/// Hermitian parts of Z_1, X_k and Z_k Z_{k+1}^dag. Zero matrices are dropped with a note.
HamiltonianSet theorem3_set(int d, int n);

/// Qutrit set: four one-qutrit Hamiltonians and X + X^dag, i(X - X^dag) on every
/// site, and the diagonal coupling sum_j |jj><jj| on every neighbouring pair.
HamiltonianSet qutrit_example_set(int n);

/// The four one-qutrit Hamiltonians of the qutrit construction.
std::vector<ComplexMatrix> qutrit_one_site_hamiltonians();

/// sum_{j=0}^{2} |j><j| (x) |j><j|
ComplexMatrix qutrit_pair_hamiltonian();

/// User-provided set; every matrix must be d^n x d^n.
HamiltonianSet custom_set(int d, int n, std::string name, const std::vector<LabeledMatrix>& items);

/// Sites (1-based) on which h acts non-trivially: h fails to commute with X_s or Z_s.
std::vector<int> support(const ComplexMatrix& h, int d, int n, double tol = 1e-10);

struct SetStructureReport {
    double hermiticity = 0;      // max ||H - H^dag||
    bool neighbour_only = true;  // every support is one site or a neighbouring pair
    bool couplings_diagonal = true;
};

SetStructureReport check_structure(const HamiltonianSet& set);

struct UniversalityReport {
    bool universal = false;
    int expected = 0; // d^{2n} - 1
    LieClosureResult closure;
};

/// Universal when the traceless part of the closure has dimension d^{2n} - 1.
UniversalityReport is_universal(const HamiltonianSet& set, const LieClosureOptions& options = {});

/// e^{-i H tau}
ComplexMatrix gate(const ComplexMatrix& h, double tau);

} // namespace qwl
