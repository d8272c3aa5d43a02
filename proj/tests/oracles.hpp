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

// Reference computations used as test oracles. They use plain loops and a
// different numerical route from the library so that agreement is evidence.

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "qwl/matrix.hpp"

namespace qwl::oracle {

inline ComplexMatrix naive_matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix c = ComplexMatrix::Zero(a.rows(), b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < b.cols(); ++j)
            for (Eigen::Index k = 0; k < a.cols(); ++k)
                c(i, j) += a(i, k) * b(k, j);
    return c;
}

inline ComplexMatrix naive_kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            for (Eigen::Index k = 0; k < b.rows(); ++k)
                for (Eigen::Index l = 0; l < b.cols(); ++l)
                    c(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return c;
}

/// Tr(a^dag b) by explicit summation.
inline Complex naive_hs(const ComplexMatrix& a, const ComplexMatrix& b) {
    Complex s = 0.0;
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            s += std::conj(a(i, j)) * b(i, j);
    return s;
}

/// Real vectorization of a complex matrix.
inline Eigen::VectorXd realify(const ComplexMatrix& m) {
    Eigen::VectorXd v(2 * m.size());
    for (Eigen::Index i = 0; i < m.size(); ++i) {
        v(2 * i) = m.data()[i].real();
        v(2 * i + 1) = m.data()[i].imag();
    }
    return v;
}

inline int svd_rank(const std::vector<Eigen::VectorXd>& vectors, double rel_tol = 1e-9) {
    if (vectors.empty()) return 0;
    Eigen::MatrixXd m(vectors.front().size(), static_cast<Eigen::Index>(vectors.size()));
    for (std::size_t i = 0; i < vectors.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = vectors[i];
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
    const auto& s = svd.singularValues();
    int rank = 0;
    for (Eigen::Index i = 0; i < s.size(); ++i)
        if (s(i) > rel_tol * s(0)) ++rank;
    return rank;
}

/// Dimension of the real Lie algebra generated by {i H}: right-nested brackets
/// [g, w] of generators with previously accepted words, accepted when they
/// raise the SVD rank, level by level until a level adds nothing.
inline int lie_dimension_by_words(const std::vector<ComplexMatrix>& hermitian) {
    const Complex i_unit(0.0, 1.0);
    std::vector<ComplexMatrix> gens;
    std::vector<Eigen::VectorXd> accepted;
    std::vector<ComplexMatrix> frontier;
    for (const auto& h : hermitian) {
        gens.push_back(i_unit * h);
        accepted.push_back(realify(gens.back()));
        if (svd_rank(accepted) < static_cast<int>(accepted.size())) {
            accepted.pop_back();
        } else {
            frontier.push_back(gens.back());
        }
    }
    while (!frontier.empty()) {
        std::vector<ComplexMatrix> next;
        for (const auto& g : gens) {
            for (const auto& w : frontier) {
                const ComplexMatrix c = naive_matmul(g, w) - naive_matmul(w, g);
                if (c.norm() < 1e-12) continue;
                accepted.push_back(realify(c / c.norm()));
                if (svd_rank(accepted) < static_cast<int>(accepted.size())) {
                    accepted.pop_back();
                } else {
                    next.push_back(c);
                }
            }
        }
        frontier = std::move(next);
    }
    return static_cast<int>(accepted.size());
}

} // namespace qwl::oracle
