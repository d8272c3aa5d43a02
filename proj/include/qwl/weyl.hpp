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

#include <vector>

#include "qwl/matrix.hpp"

namespace qwl {

/// e^{2 pi i k / m}. Multiples of a quarter turn come out exact (0, +-1, +-i).
Complex unit_root(long long k, long long m);

/// The Weyl pair U, V for one qudit and the generalized Pauli triple built from it.
///
/// U is the cyclic shift with ones on the superdiagonal and in the lower-left
/// corner, V = diag(1, zeta, ..., zeta^{d-1}), X = U, Z = V and
/// Y = e^{i pi (d-1)/d} U V. The phase reproduces sigma_y at d = 2 and makes
/// Y^d = 1 for every d.
struct WeylOperators {
    int d = 0;
    Complex zeta;
    Complex y_phase;
    std::vector<Complex> zeta_powers; // zeta^k, k = 0..d-1
    ComplexMatrix U;
    ComplexMatrix V;
    ComplexMatrix X;
    ComplexMatrix Y;
    ComplexMatrix Z;

    Complex zeta_pow(long long k) const;
};

WeylOperators build_weyl(int d);

/// Frobenius deviations of the defining relations.
struct WeylRelationReport {
    double uv = 0;       // UV - zeta VU
    double xy = 0;       // XY - zeta YX
    double yz = 0;       // YZ - zeta ZY
    double xz = 0;       // XZ - zeta ZX
    double zx_order = 0; // ZX - zeta^{-1} XZ
    double powers = 0;   // max of X^d, Y^d, Z^d against 1

    double max() const;
};

WeylRelationReport check_weyl_relation(const WeylOperators& w);

/// Displacement X^a Z^b, 0 <= a, b < d.
ComplexMatrix weyl_monomial(const WeylOperators& w, int a, int b);

} // namespace qwl
