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

#include "qwl/matrix.hpp"

namespace qwl {

/// Real Lie algebra generated by {iH} under commutators.
struct LieClosureResult {
    int dimension = 0;           // full real dimension, identity direction included
    int traceless_dimension = 0; // dimension with the identity direction projected out
    bool contains_identity = false;
    std::vector<ComplexMatrix> basis; // anti-Hermitian, orthonormal under Re Tr(A^dag B)
    int iterations = 0;               // commutator sweeps performed
    bool converged = false;
};

struct LieClosureOptions {
    /// A projected candidate joins the basis when its residual exceeds tol * |candidate|.
    double tol = 1e-8;
    /// Candidates with norm below this are dropped before projection.
    double discard_norm = 1e-12;
    /// Stop (converged = false) once the basis reaches this size; 0 means N^2.
    int max_dim = 0;
};

/// Commutator closure of {i H : H in hermitian_generators}.
///
/// Sweep 1 commutes every pair of initial elements; sweep s > 1 commutes each
/// element added in sweep s-1 with every element before it. Pairs are visited
/// in lexicographic (j, i < j) order and new directions are appended
/// immediately, so the basis is a deterministic function of the input.
LieClosureResult lie_closure(const std::vector<ComplexMatrix>& hermitian_generators,
                             const LieClosureOptions& options = {});

/// Largest residual of [B_i, B_j] outside span(basis), over all basis pairs.
double max_commutator_residual(const LieClosureResult& result);

} // namespace qwl
