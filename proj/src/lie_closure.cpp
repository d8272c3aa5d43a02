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

#include "qwl/lie_closure.hpp"

#include <cmath>
#include <string>

#include "qwl/errors.hpp"

namespace qwl {

namespace {

double real_inner(const ComplexMatrix& a, const ComplexMatrix& b) { return hs_inner(a, b).real(); }

// Two rounds of classical Gram-Schmidt; returns the residual.
ComplexMatrix project_out(const std::vector<ComplexMatrix>& basis, ComplexMatrix v) {
    for (int pass = 0; pass < 2; ++pass) {
        for (const auto& b : basis) {
            v -= real_inner(b, v) * b;
        }
    }
    return v;
}

class ClosureBuilder {
  public:
    ClosureBuilder(const LieClosureOptions& options, int cap) : options_(options), cap_(cap) {}

    // true when the candidate contributed a new direction
    bool offer(const ComplexMatrix& candidate) {
        const double norm = candidate.norm();
        if (!(norm > options_.discard_norm)) {
            return false;
        }
        ComplexMatrix residual = project_out(basis_, candidate);
        const double rnorm = residual.norm();
        if (!(rnorm > options_.tol * norm)) {
            return false;
        }
        // Anti-Hermitian part only; the projection keeps it up to round-off.
        residual = 0.5 * (residual - residual.adjoint()).eval();
        basis_.push_back(residual / residual.norm());
        return true;
    }

    bool full() const { return static_cast<int>(basis_.size()) >= cap_; }
    std::vector<ComplexMatrix>& basis() { return basis_; }

  private:
    LieClosureOptions options_;
    int cap_;
    std::vector<ComplexMatrix> basis_;
};

} // namespace

LieClosureResult lie_closure(const std::vector<ComplexMatrix>& hermitian_generators, const LieClosureOptions& options) {
    if (hermitian_generators.empty()) {
        return {};
    }
    const Eigen::Index dim = hermitian_generators.front().rows();
    for (std::size_t g = 0; g < hermitian_generators.size(); ++g) {
        const ComplexMatrix& h = hermitian_generators[g];
        if (h.rows() != dim || h.cols() != dim) {
            throw ShapeError("lie_closure: generator " + std::to_string(g) + " has mismatched shape");
        }
        const double defect = hermiticity_defect(h);
        if (!(defect <= kDefaultTol)) {
            throw ContractError("lie_closure: generator " + std::to_string(g) + " is not Hermitian (defect " +
                                std::to_string(defect) + ")");
        }
    }
    const int cap = options.max_dim > 0 ? options.max_dim : static_cast<int>(dim * dim);
    ClosureBuilder builder(options, cap);
    const Complex i_unit(0.0, 1.0);

    LieClosureResult result;
    for (const auto& h : hermitian_generators) {
        if (builder.full()) {
            break;
        }
        builder.offer(i_unit * h);
    }

    auto& basis = builder.basis();
    std::size_t sweep_begin = 0;
    bool hit_cap = builder.full();
    while (!hit_cap) {
        const std::size_t sweep_end = basis.size();
        ++result.iterations;
        for (std::size_t j = sweep_begin; j < sweep_end && !hit_cap; ++j) {
            for (std::size_t i = 0; i < j; ++i) {
                const ComplexMatrix c = basis[i] * basis[j] - basis[j] * basis[i];
                if (builder.offer(c) && builder.full()) {
                    hit_cap = true;
                    break;
                }
            }
        }
        if (basis.size() == sweep_end) {
            break;
        }
        sweep_begin = sweep_end;
    }

    result.basis = std::move(basis);
    result.dimension = static_cast<int>(result.basis.size());
    // Closed when the last sweep added nothing; a full u(N) is closed as well.
    result.converged = !hit_cap || result.dimension == static_cast<int>(dim * dim);

    const ComplexMatrix i_identity = i_unit * identity(dim) / std::sqrt(static_cast<double>(dim));
    const double outside = project_out(result.basis, i_identity).norm();
    result.contains_identity = outside < 1e-6;
    result.traceless_dimension = result.dimension - (result.contains_identity ? 1 : 0);
    return result;
}

double max_commutator_residual(const LieClosureResult& result) {
    double worst = 0.0;
    const auto& basis = result.basis;
    for (std::size_t j = 0; j < basis.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            const ComplexMatrix c = basis[i] * basis[j] - basis[j] * basis[i];
            worst = std::max(worst, project_out(basis, c).norm());
        }
    }
    return worst;
}

} // namespace qwl
