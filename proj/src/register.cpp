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

#include "qwl/register.hpp"

#include <algorithm>
#include <cmath>

#include "qwl/errors.hpp"

namespace qwl {

namespace {

void check_register(int d, int n) {
    if (d < 2) {
        throw DomainError("register: d must be at least 2");
    }
    if (n < 1) {
        throw DomainError("register: n must be at least 1");
    }
    register_dim(d, n);
}

// prefix^{(k-1)} (x) last (x) 1^{(n-k)}
ComplexMatrix string_operator(const ComplexMatrix& prefix, const ComplexMatrix& last, int n, int k) {
    const Eigen::Index d = last.rows();
    std::vector<ComplexMatrix> factors;
    factors.reserve(static_cast<std::size_t>(n));
    for (int s = 1; s <= n; ++s) {
        factors.push_back(s < k ? prefix : (s == k ? last : identity(d)));
    }
    return tensor_chain(factors);
}

const ComplexMatrix& pick(const WeylOperators& w, SiteLabel label) {
    switch (label) {
    case SiteLabel::X: return w.X;
    case SiteLabel::Y: return w.Y;
    default: return w.Z;
    }
}

// Best unit scalar c minimizing ||a - c b|| for unitary b, and the residual.
std::pair<Complex, double> fit_phase(const ComplexMatrix& a, const ComplexMatrix& b) {
    const Complex overlap = hs_inner(b, a);
    const Complex c = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex(1.0, 0.0);
    return {c, deviation(a, c * b)};
}

} // namespace

long long register_dim(int d, int n, long long cap) {
    long long dim = 1;
    for (int i = 0; i < n; ++i) {
        dim *= d;
        if (dim > cap) {
            throw CapacityError("register dimension " + std::to_string(d) + "^" + std::to_string(n) +
                                " exceeds cap " + std::to_string(cap));
        }
    }
    return dim;
}

std::string to_string(FamilyKind kind) { return kind == FamilyKind::x_family ? "x" : "z"; }

ComplexMatrix tensor_chain(std::span<const ComplexMatrix> factors) {
    if (factors.empty()) {
        return identity(1);
    }
    ComplexMatrix out = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) {
        out = tensor(out, factors[i]);
    }
    return out;
}

ComplexMatrix embed_site(const ComplexMatrix& op, int n, int k) {
    if (k < 1 || k > n) {
        throw DomainError("embed_site: site " + std::to_string(k) + " outside 1.." + std::to_string(n));
    }
    const Eigen::Index d = op.rows();
    const ComplexMatrix left = identity(static_cast<Eigen::Index>(register_dim(static_cast<int>(d), k - 1)));
    const ComplexMatrix right = identity(static_cast<Eigen::Index>(register_dim(static_cast<int>(d), n - k)));
    return tensor(tensor(left, op), right);
}

SiteOperator site_operator(int d, int n, int k, SiteLabel label) {
    check_register(d, n);
    if (k < 1 || k > n) {
        throw DomainError("site_operator: site " + std::to_string(k) + " outside 1.." + std::to_string(n));
    }
    const WeylOperators w = build_weyl(d);
    return {d, n, k, label, embed_site(pick(w, label), n, k)};
}

std::vector<RegisterOperator> build_x_family(int d, int n) {
    check_register(d, n);
    const WeylOperators w = build_weyl(d);
    std::vector<RegisterOperator> ops;
    ops.reserve(2U * static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        ops.push_back({d, n, 2 * k - 1, FamilyKind::x_family, string_operator(w.Z, w.X, n, k)});
        ops.push_back({d, n, 2 * k, FamilyKind::x_family, string_operator(w.Z, w.Y, n, k)});
    }
    return ops;
}

std::vector<RegisterOperator> build_z_family(int d, int n) {
    check_register(d, n);
    const WeylOperators w = build_weyl(d);
    std::vector<RegisterOperator> ops;
    ops.reserve(2U * static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        ops.push_back({d, n, 2 * k - 1, FamilyKind::z_family, dagger(string_operator(w.X, w.Z, n, k))});
        ops.push_back({d, n, 2 * k, FamilyKind::z_family, dagger(string_operator(w.X, w.Y, n, k))});
    }
    return ops;
}

Complex commutation_root(FamilyKind kind, const WeylOperators& w) {
    return kind == FamilyKind::x_family ? w.zeta : std::conj(w.zeta);
}

QuantumPlaneReport verify_quantum_plane(std::span<const RegisterOperator> ops, int d) {
    QuantumPlaneReport report;
    if (ops.empty()) {
        return report;
    }
    const WeylOperators w = build_weyl(d);
    const Complex q = commutation_root(ops.front().kind, w);
    const ComplexMatrix id = identity(ops.front().matrix.rows());
    for (std::size_t j = 0; j < ops.size(); ++j) {
        if (ops[j].kind != ops.front().kind) {
            throw ContractError("verify_quantum_plane: operators from different families");
        }
        const ComplexMatrix& a = ops[j].matrix;
        report.order = std::max(report.order, deviation(matrix_power(a, static_cast<unsigned>(d)), id));
        for (std::size_t k = j + 1; k < ops.size(); ++k) {
            const ComplexMatrix& b = ops[k].matrix;
            report.commutation = std::max(report.commutation, deviation(matmul(a, b), q * matmul(b, a)));
        }
    }
    return report;
}

double verify_power_identity(std::span<const RegisterOperator> ops, std::span<const Complex> coeffs, int d) {
    if (ops.size() != coeffs.size()) {
        throw ShapeError("verify_power_identity: " + std::to_string(coeffs.size()) + " coefficients for " +
                         std::to_string(ops.size()) + " operators");
    }
    if (ops.empty()) {
        throw ShapeError("verify_power_identity: empty operator list");
    }
    const Eigen::Index dim = ops.front().matrix.rows();
    ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
    Complex scalar = 0.0;
    for (std::size_t j = 0; j < ops.size(); ++j) {
        sum += coeffs[j] * ops[j].matrix;
        scalar += std::pow(coeffs[j], d);
    }
    return deviation(matrix_power(sum, static_cast<unsigned>(d)), scalar * identity(dim));
}

PairingReport verify_pairing(int d, int n) {
    if (n < 2) {
        throw DomainError("verify_pairing: n must be at least 2");
    }
    const WeylOperators w = build_weyl(d);
    const auto z = build_z_family(d, n);
    const Complex x_expected = w.y_phase * w.zeta;
    const Complex z_expected = std::conj(w.y_phase);

    PairingReport report;
    auto record = [&](const ComplexMatrix& product, const ComplexMatrix& target, Complex expected, Complex& slot) {
        const auto [c, residual] = fit_phase(product, target);
        report.literal = std::max(report.literal, deviation(product, target));
        report.up_to_phase = std::max(report.up_to_phase, residual);
        report.scalar_deviation = std::max(report.scalar_deviation, std::abs(c - expected));
        slot = c;
    };

    for (int k = 1; k <= n; ++k) {
        const ComplexMatrix& odd = z[static_cast<std::size_t>(2 * k - 2)].matrix;
        const ComplexMatrix& even = z[static_cast<std::size_t>(2 * k - 1)].matrix;
        record(matmul(odd, dagger(even)), embed_site(w.X, n, k), x_expected, report.x_scalar);
        if (k < n) {
            const ComplexMatrix& next = z[static_cast<std::size_t>(2 * k)].matrix;
            const ComplexMatrix target = matmul(embed_site(dagger(w.Z), n, k), embed_site(w.Z, n, k + 1));
            record(matmul(even, dagger(next)), target, z_expected, report.z_scalar);
        }
    }
    return report;
}

} // namespace qwl
