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

#include "qwl/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include <Eigen/Eigenvalues>

namespace qwl {

namespace {

constexpr double kClusterTol = 1e-9;

// Modified Gram-Schmidt over columns [first, last) against everything before them
// in the same range; fixed column order keeps the result deterministic.
void orthonormalize_range(ComplexMatrix& w, Eigen::Index first, Eigen::Index last) {
    for (Eigen::Index c = first; c < last; ++c) {
        for (int pass = 0; pass < 2; ++pass) {
            for (Eigen::Index p = first; p < c; ++p) {
                const Complex proj = w.col(p).dot(w.col(c));
                w.col(c) -= proj * w.col(p);
            }
        }
        w.col(c).normalize();
    }
}

template <typename Key>
void orthonormalize_clusters(ComplexMatrix& w, const std::vector<Key>& keys, double scale) {
    const auto n = static_cast<Eigen::Index>(keys.size());
    Eigen::Index start = 0;
    for (Eigen::Index i = 1; i <= n; ++i) {
        if (i == n || std::abs(keys[i] - keys[start]) > kClusterTol * scale) {
            if (i - start > 1) {
                orthonormalize_range(w, start, i);
            }
            start = i;
        }
    }
}

} // namespace

void fix_column_phases(ComplexMatrix& columns, double floor) {
    for (Eigen::Index c = 0; c < columns.cols(); ++c) {
        for (Eigen::Index r = 0; r < columns.rows(); ++r) {
            const double mag = std::abs(columns(r, c));
            if (mag > floor) {
                const Complex phase = std::conj(columns(r, c)) / mag;
                columns.col(c) *= phase;
                columns(r, c) = Complex(mag, 0.0);
                break;
            }
        }
    }
}

bool all_finite(const ComplexMatrix& a) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            if (!std::isfinite(a(i, j).real()) || !std::isfinite(a(i, j).imag())) {
                return false;
            }
        }
    }
    return true;
}

HermitianEig hermitian_eig(const ComplexMatrix& a) {
    if (a.rows() != a.cols()) {
        throw ShapeError("hermitian_eig: matrix is not square");
    }
    const double defect = hermiticity_defect(a);
    if (!(defect <= kDefaultTol)) {
        throw ContractError("hermitian_eig: input is not Hermitian (defect " + std::to_string(defect) + ")");
    }
    // Symmetrize so round-off in the lower triangle cannot leak into the solver.
    const ComplexMatrix sym = 0.5 * (a + a.adjoint());
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
    if (solver.info() != Eigen::Success) {
        throw ContractError("hermitian_eig: eigensolver did not converge");
    }
    HermitianEig out{solver.eigenvalues(), solver.eigenvectors()};
    std::vector<double> keys(out.eigenvalues.data(), out.eigenvalues.data() + out.eigenvalues.size());
    const double scale = std::max(1.0, out.eigenvalues.cwiseAbs().maxCoeff());
    orthonormalize_clusters(out.eigenvectors, keys, scale);
    fix_column_phases(out.eigenvectors);
    return out;
}

UnitaryEig unitary_eig(const ComplexMatrix& a) {
    if (a.rows() != a.cols()) {
        throw ShapeError("unitary_eig: matrix is not square");
    }
    const double defect = unitarity_defect(a);
    if (!(defect <= kDefaultTol)) {
        throw ContractError("unitary_eig: input is not unitary (defect " + std::to_string(defect) + ")");
    }
    // A normal matrix has a diagonal Schur form, so the Schur vectors are eigenvectors.
    Eigen::ComplexSchur<ComplexMatrix> schur(a);
    if (schur.info() != Eigen::Success) {
        throw ContractError("unitary_eig: Schur decomposition did not converge");
    }
    const ComplexMatrix& t = schur.matrixT();
    const ComplexMatrix& q = schur.matrixU();
    const Eigen::Index n = a.rows();

    constexpr double two_pi = 2.0 * std::numbers::pi;
    std::vector<double> phase(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        double p = std::arg(t(i, i));
        if (p < 0.0) {
            p += two_pi;
        }
        if (p > two_pi - kClusterTol) {
            p = 0.0;
        }
        phase[static_cast<std::size_t>(i)] = p;
    }
    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) {
        return phase[static_cast<std::size_t>(x)] < phase[static_cast<std::size_t>(y)] - kClusterTol;
    });

    UnitaryEig out{ComplexVector(n), ComplexMatrix(n, n)};
    std::vector<double> keys(static_cast<std::size_t>(n));
    for (Eigen::Index i = 0; i < n; ++i) {
        const Eigen::Index src = order[static_cast<std::size_t>(i)];
        out.eigenvalues(i) = t(src, src);
        out.eigenvectors.col(i) = q.col(src);
        keys[static_cast<std::size_t>(i)] = phase[static_cast<std::size_t>(src)];
    }
    orthonormalize_clusters(out.eigenvectors, keys, 1.0);
    fix_column_phases(out.eigenvectors);
    return out;
}

ComplexMatrix expm_hermitian(const ComplexMatrix& h, double tau) {
    const HermitianEig eig = hermitian_eig(h);
    ComplexVector phases(eig.eigenvalues.size());
    for (Eigen::Index i = 0; i < phases.size(); ++i) {
        phases(i) = std::polar(1.0, -eig.eigenvalues(i) * tau);
    }
    return eig.eigenvectors * phases.asDiagonal() * eig.eigenvectors.adjoint();
}

} // namespace qwl
