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
#include "qwl/random.hpp"

namespace qwl {

/// Hermitian, unit-trace, positive semidefinite d x d matrix.
struct DensityMatrix {
    int d = 0;
    ComplexMatrix matrix;
};

/// Validates the density-matrix invariants at tolerance 1e-10 (ContractError otherwise).
DensityMatrix make_density(const ComplexMatrix& m);

/// rho = A A^dag / Tr(A A^dag) with complex Gaussian A.
DensityMatrix random_density(int d, RandomSource& rng);

/// |psi><psi| for a unit vector.
DensityMatrix pure_density(const ComplexVector& psi);

/// Largest prime dimension served by mub_prime.
inline constexpr int kMaxMubDim = 31;

bool is_prime(int d);

/// d+1 mutually unbiased bases for prime d: eigenvectors of Z, X, XZ, ..., XZ^{d-1}.
struct MubSet {
    int d = 0;
    std::vector<ComplexMatrix> bases; // columns are basis vectors
    std::vector<std::string> labels;
};

MubSet mub_prime(int d);

struct MubReport {
    double unbiasedness = 0;   // max | |<phi|psi>|^2 - 1/d | across bases
    double orthonormality = 0; // max | <phi_i|phi_j> - delta_ij | within a basis
    double max() const { return unbiasedness > orthonormality ? unbiasedness : orthonormality; }
};

MubReport verify_mub(const MubSet& set);

/// Closest vector of the form (1/sqrt d) e^{2 pi i (a k^2 + b k)/d}, up to global phase.
struct ClosedFormMatch {
    int a = 0;
    int b = 0;
    double deviation = 0;
};

ClosedFormMatch match_quadratic_phase(const ComplexVector& v);

/// <phi|rho|phi>, clamped to [0, 1]; ContractError unless |phi| = 1 within 1e-10.
double born_probability(const DensityMatrix& rho, const ComplexVector& phi);

struct MeasurementRecord {
    int basis = 0;
    std::vector<long long> counts; // one per outcome
    long long shots = 0;
};

/// Multinomial sampling of every basis. Each basis draws from its own stream
/// derived from one value taken from `rng`, so basis order does not matter.
std::vector<MeasurementRecord> simulate_measurements(const DensityMatrix& rho, const MubSet& set, long long shots,
                                                     RandomSource& rng);

/// Outcome probabilities per basis.
std::vector<std::vector<double>> exact_probabilities(const DensityMatrix& rho, const MubSet& set);

struct Reconstruction {
    DensityMatrix state;
    ComplexMatrix linear_estimate; // before positivity repair
    double residual = 0;           // || A x - f ||_2 of the linear estimate
    double min_eigenvalue = 0;     // of the linear estimate
    bool projected = false;        // negative eigenvalues were clipped
};

/// Least-squares inversion over Hermitian unit-trace matrices, then
/// clip-and-renormalize onto the positive cone.
Reconstruction reconstruct(const std::vector<MeasurementRecord>& records, const MubSet& set);

/// Same, from outcome frequencies indexed [basis][outcome].
Reconstruction reconstruct_from_frequencies(const std::vector<std::vector<double>>& frequencies, const MubSet& set);

} // namespace qwl
