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

#include "qwl/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qwl/errors.hpp"

namespace qwl {

Complex unit_root(long long k, long long m) {
    if (m <= 0) {
        throw DomainError("unit_root: order must be positive");
    }
    k %= m;
    if (k < 0) {
        k += m;
    }
    if ((4 * k) % m == 0) {
        switch ((4 * k) / m) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
        }
    }
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m));
}

Complex WeylOperators::zeta_pow(long long k) const {
    k %= d;
    if (k < 0) {
        k += d;
    }
    return zeta_powers[static_cast<std::size_t>(k)];
}

WeylOperators build_weyl(int d) {
    if (d < 2) {
        throw DomainError("build_weyl: d must be at least 2, got " + std::to_string(d));
    }
    WeylOperators w;
    w.d = d;
    w.zeta = unit_root(1, d);
    w.y_phase = unit_root(d - 1, 2LL * d);
    w.zeta_powers.resize(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) {
        w.zeta_powers[static_cast<std::size_t>(k)] = unit_root(k, d);
    }

    w.U = ComplexMatrix::Zero(d, d);
    w.V = ComplexMatrix::Zero(d, d);
    w.Y = ComplexMatrix::Zero(d, d);
    for (int i = 0; i < d; ++i) {
        const int j = (i + 1) % d;
        w.U(i, j) = 1.0;
        w.V(i, i) = w.zeta_pow(i);
        // (UV)(i, i+1) = zeta^{i+1}; folding the phase into one root keeps entries exact.
        w.Y(i, j) = unit_root(d - 1 + 2LL * j, 2LL * d);
    }
    w.X = w.U;
    w.Z = w.V;
    return w;
}

double WeylRelationReport::max() const { return std::max({uv, xy, yz, xz, zx_order, powers}); }

WeylRelationReport check_weyl_relation(const WeylOperators& w) {
    const Complex zeta = w.zeta;
    const Complex zeta_inv = std::conj(w.zeta);
    const ComplexMatrix id = identity(w.d);
    const auto d = static_cast<unsigned>(w.d);

    WeylRelationReport r;
    r.uv = deviation(w.U * w.V, zeta * (w.V * w.U));
    r.xy = deviation(w.X * w.Y, zeta * (w.Y * w.X));
    r.yz = deviation(w.Y * w.Z, zeta * (w.Z * w.Y));
    r.xz = deviation(w.X * w.Z, zeta * (w.Z * w.X));
    r.zx_order = deviation(w.Z * w.X, zeta_inv * (w.X * w.Z));
    r.powers = std::max({deviation(matrix_power(w.X, d), id), deviation(matrix_power(w.Y, d), id),
                         deviation(matrix_power(w.Z, d), id)});
    return r;
}

ComplexMatrix weyl_monomial(const WeylOperators& w, int a, int b) {
    if (a < 0 || a >= w.d || b < 0 || b >= w.d) {
        throw DomainError("weyl_monomial: exponents must lie in [0, d)");
    }
    // X^a Z^b e_j = zeta^{b j} e_{j - a}
    ComplexMatrix m = ComplexMatrix::Zero(w.d, w.d);
    for (int j = 0; j < w.d; ++j) {
        m(((j - a) % w.d + w.d) % w.d, j) = w.zeta_pow(static_cast<long long>(b) * j);
    }
    return m;
}

} // namespace qwl
