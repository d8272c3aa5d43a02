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

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

#include "qwl/errors.hpp"

namespace qwl {

template <typename Scalar>
using CMatrix = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using CVector = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

using Complex = std::complex<double>;
using ComplexMatrix = CMatrix<double>;
using ComplexVector = CVector<double>;
using RealVector = Eigen::VectorXd;

/// Default Frobenius tolerance for numerically derived identities.
inline constexpr double kDefaultTol = 1e-10;
/// Tolerance for identities that hold exactly by construction.
inline constexpr double kExactTol = 1e-12;

template <typename Derived>
using PlainOf = typename Derived::PlainObject;

inline ComplexMatrix identity(Eigen::Index n) { return ComplexMatrix::Identity(n, n); }

/// Matrix product with an explicit shape check (Eigen only asserts in debug builds).
template <typename DA, typename DB>
PlainOf<DA> matmul(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
    if (a.cols() != b.rows()) {
        throw ShapeError("matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                         " times " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
    PlainOf<DA> out = a * b;
    return out;
}

template <typename Derived>
PlainOf<Derived> dagger(const Eigen::MatrixBase<Derived>& a) {
    return a.adjoint();
}

/// Kronecker product, entry[(i*rb + k), (j*cb + l)] = a(i,j) * b(k,l).
template <typename DA, typename DB>
PlainOf<DA> tensor(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
    const Eigen::Index rb = b.rows();
    const Eigen::Index cb = b.cols();
    PlainOf<DA> out(a.rows() * rb, a.cols() * cb);
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * rb, j * cb, rb, cb) = a(i, j) * b;
        }
    }
    return out;
}

/// Hilbert-Schmidt inner product Tr(a^dag b).
template <typename DA, typename DB>
typename DA::Scalar hs_inner(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeError("hs_inner: operand shapes differ");
    }
    return a.conjugate().cwiseProduct(b).sum();
}

/// Frobenius distance, the library-wide deviation measure.
template <typename DA, typename DB>
double deviation(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeError("deviation: operand shapes differ");
    }
    return static_cast<double>((a - b).norm());
}

template <typename Derived>
double hermiticity_defect(const Eigen::MatrixBase<Derived>& a) {
    if (a.rows() != a.cols()) {
        throw ShapeError("hermiticity_defect: matrix is not square");
    }
    return static_cast<double>((a - a.adjoint()).norm());
}

template <typename Derived>
double unitarity_defect(const Eigen::MatrixBase<Derived>& a) {
    if (a.rows() != a.cols()) {
        throw ShapeError("unitarity_defect: matrix is not square");
    }
    return static_cast<double>((a.adjoint() * a - PlainOf<Derived>::Identity(a.rows(), a.cols())).norm());
}

/// a^k by repeated squaring; k >= 0.
template <typename Derived>
PlainOf<Derived> matrix_power(const Eigen::MatrixBase<Derived>& a, unsigned k) {
    if (a.rows() != a.cols()) {
        throw ShapeError("matrix_power: matrix is not square");
    }
    PlainOf<Derived> result = PlainOf<Derived>::Identity(a.rows(), a.cols());
    PlainOf<Derived> base = a;
    while (k > 0) {
        if (k & 1U) {
            result = (result * base).eval();
        }
        k >>= 1U;
        if (k > 0) {
            base = (base * base).eval();
        }
    }
    return result;
}

/// Commutator [a, b] = ab - ba.
template <typename DA, typename DB>
PlainOf<DA> commutator(const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b) {
    return matmul(a, b) - matmul(b, a);
}

struct HermitianEig {
    RealVector eigenvalues;     // ascending
    ComplexMatrix eigenvectors; // columns
};

struct UnitaryEig {
    ComplexVector eigenvalues;  // ordered by phase in [0, 2pi)
    ComplexMatrix eigenvectors; // columns
};

/// Eigendecomposition of a Hermitian matrix; throws ContractError when
/// ||a - a^dag||_F exceeds 1e-10. Columns inside a degenerate cluster are
/// re-orthonormalized in column order and every column has its first
/// non-negligible component made real positive.
HermitianEig hermitian_eig(const ComplexMatrix& a);

/// Eigendecomposition of a unitary matrix via its Schur form.
UnitaryEig unitary_eig(const ComplexMatrix& a);

/// exp(-i h tau) through the spectral decomposition of h.
ComplexMatrix expm_hermitian(const ComplexMatrix& h, double tau);

/// Make the first component of each column with modulus above `floor` real positive.
void fix_column_phases(ComplexMatrix& columns, double floor = 1e-12);

/// True when every entry has finite real and imaginary parts.
bool all_finite(const ComplexMatrix& a);

} // namespace qwl
