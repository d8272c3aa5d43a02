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

#include <span>
#include <string>
#include <vector>

#include "qwl/matrix.hpp"
#include "qwl/weyl.hpp"

namespace qwl {

/// Largest register dimension d^n materialized as a dense matrix.
inline constexpr long long kMaxRegisterDim = 1024;

/// d^n, or CapacityError when it exceeds `cap`.
long long register_dim(int d, int n, long long cap = kMaxRegisterDim);

enum class FamilyKind { x_family, z_family };

std::string to_string(FamilyKind kind);

/// One of the 2n string operators on an n-qudit register (1-based index).
struct RegisterOperator {
    int d = 0;
    int n = 0;
    int index = 0;
    FamilyKind kind = FamilyKind::x_family;
    ComplexMatrix matrix;
};

enum class SiteLabel { X, Y, Z };

struct SiteOperator {
    int d = 0;
    int n = 0;
    int site = 0; // 1-based
    SiteLabel label = SiteLabel::X;
    ComplexMatrix matrix;
};

/// op placed on site k (1-based) of n qudits, identity elsewhere.
ComplexMatrix embed_site(const ComplexMatrix& op, int n, int k);

/// Ordered Kronecker product f[0] (x) f[1] (x) ...
ComplexMatrix tensor_chain(std::span<const ComplexMatrix> factors);

SiteOperator site_operator(int d, int n, int k, SiteLabel label);

/// x_{2k-1} = Z^{(k-1)} (x) X (x) 1^{(n-k)},  x_{2k} = Z^{(k-1)} (x) Y (x) 1^{(n-k)}.
std::vector<RegisterOperator> build_x_family(int d, int n);

/// The same construction with X -> Z^dag, Z -> X^dag:
/// z_{2k-1}^dag = X^{(k-1)} (x) Z (x) 1,  z_{2k}^dag = X^{(k-1)} (x) Y (x) 1.
/// The returned matrices are the z_k themselves.
std::vector<RegisterOperator> build_z_family(int d, int n);

/// q such that ops_j ops_k = q ops_k ops_j for j < k. The x-family commutes with
/// zeta; the exchange X <-> Z^dag conjugates the relation, so the z-family
/// commutes with conj(zeta).
Complex commutation_root(FamilyKind kind, const WeylOperators& w);

struct QuantumPlaneReport {
    double commutation = 0; // max_{j<k} || o_j o_k - q o_k o_j ||
    double order = 0;       // max_j || o_j^d - 1 ||
    double max() const { return commutation > order ? commutation : order; }
};

/// Quantum-plane relations of one family, ordered by index.
QuantumPlaneReport verify_quantum_plane(std::span<const RegisterOperator> ops, int d);

/// || (sum_j a_j o_j)^d - (sum_j a_j^d) 1 ||_F
double verify_power_identity(std::span<const RegisterOperator> ops, std::span<const Complex> coeffs, int d);

/// Pairing identities z_{2k-1} z_{2k}^dag ~ X_k and z_{2k} z_{2k+1}^dag ~ Z_k^dag Z_{k+1}.
///
/// The products equal the site operators times fixed unit scalars
/// (y_phase * zeta and conj(y_phase)), so both the literal deviation and the
/// deviation after dividing out the best unit scalar are reported.
struct PairingReport {
    double literal = 0;
    double up_to_phase = 0;
    Complex x_scalar;          // fitted scalar, first identity (last k)
    Complex z_scalar;          // fitted scalar, second identity (last k)
    double scalar_deviation = 0; // max |fitted - closed form| over all k
};

PairingReport verify_pairing(int d, int n);

} // namespace qwl
