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

#include "qwl/sic.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "qwl/errors.hpp"
#include "qwl/weyl.hpp"

namespace qwl {

namespace {

void require_unit(const ComplexVector& phi, const char* where) {
    if (!(std::abs(phi.norm() - 1.0) <= kDefaultTol)) {
        throw ContractError(std::string(where) + ": vector is not normalized");
    }
}

// First component real non-negative.
ComplexVector gauge_fixed(const ComplexVector& v) {
    const double mag = std::abs(v(0));
    if (mag == 0.0) {
        return v;
    }
    ComplexVector out = v * (std::conj(v(0)) / mag);
    out(0) = mag;
    return out;
}

// [Re v0, Re v1, Im v1, ..., Re v_{d-1}, Im v_{d-1}]
Eigen::VectorXd to_params(const ComplexVector& v) {
    const auto d = v.size();
    Eigen::VectorXd x(2 * d - 1);
    x(0) = v(0).real();
    for (Eigen::Index k = 1; k < d; ++k) {
        x(2 * k - 1) = v(k).real();
        x(2 * k) = v(k).imag();
    }
    return x;
}

ComplexVector from_params(const Eigen::VectorXd& x) {
    const auto d = (x.size() + 1) / 2;
    ComplexVector v(d);
    v(0) = x(0);
    for (Eigen::Index k = 1; k < d; ++k) {
        v(k) = Complex(x(2 * k - 1), x(2 * k));
    }
    return v;
}

// <phi| X^a Z^b |phi> for all (a, b), indexed a*d + b.
std::vector<Complex> displacement_overlaps(const ComplexVector& phi, const WeylOperators& w) {
    const int d = w.d;
    std::vector<Complex> out(static_cast<std::size_t>(d) * d);
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            Complex s = 0.0;
            for (int j = 0; j < d; ++j) {
                s += std::conj(phi((j - a + d) % d)) * w.zeta_pow(static_cast<long long>(b) * j) * phi(j);
            }
            out[static_cast<std::size_t>(a * d + b)] = s;
        }
    }
    return out;
}

double frame_error_with(const ComplexVector& phi, const WeylOperators& w) {
    const double target = 1.0 / (w.d + 1);
    const auto overlaps = displacement_overlaps(phi, w);
    double err = 0.0;
    for (std::size_t i = 1; i < overlaps.size(); ++i) {
        const double dev = std::norm(overlaps[i]) - target;
        err += dev * dev;
    }
    return err;
}

} // namespace

std::vector<ComplexVector> weyl_orbit(const ComplexVector& phi, int d) {
    if (phi.size() != d) {
        throw ShapeError("weyl_orbit: vector length " + std::to_string(phi.size()) + " differs from d = " +
                         std::to_string(d));
    }
    require_unit(phi, "weyl_orbit");
    const WeylOperators w = build_weyl(d);
    std::vector<ComplexVector> orbit;
    orbit.reserve(static_cast<std::size_t>(d) * d);
    for (int a = 0; a < d; ++a) {
        for (int b = 0; b < d; ++b) {
            orbit.push_back(weyl_monomial(w, a, b) * phi);
        }
    }
    return orbit;
}

double frame_error(const ComplexVector& phi) {
    require_unit(phi, "frame_error");
    return frame_error_with(phi, build_weyl(static_cast<int>(phi.size())));
}

SicCandidate make_candidate(const ComplexVector& phi) {
    const int d = static_cast<int>(phi.size());
    return {d, phi, weyl_orbit(phi, d), frame_error(phi)};
}

double verify_sic(const SicCandidate& candidate) {
    const double target = 1.0 / (candidate.d + 1);
    double worst = 0.0;
    const auto& orbit = candidate.orbit;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
        for (std::size_t j = i + 1; j < orbit.size(); ++j) {
            worst = std::max(worst, std::abs(std::norm(orbit[i].dot(orbit[j])) - target));
        }
    }
    return worst;
}

SicSearchResult search_fiducial(int d, RandomSource& rng, const SicSearchOptions& options) {
    if (d < 2 || d > kMaxSicDim) {
        throw DomainError("search_fiducial: d must lie in [2, " + std::to_string(kMaxSicDim) + "]");
    }
    if (options.restarts < 1) {
        throw DomainError("search_fiducial: restarts must be positive");
    }
    const WeylOperators w = build_weyl(d);
    const RandomSource base(rng.next_u64());
    const auto objective = [&w](const Eigen::VectorXd& x) {
        const ComplexVector v = from_params(x);
        const double norm = v.norm();
        if (!(norm > 1e-8)) {
            return std::numeric_limits<double>::infinity();
        }
        return frame_error_with(v / norm, w);
    };

    SicSearchResult result;
    double best_error = std::numeric_limits<double>::infinity();
    ComplexVector best_vector;
    for (int r = 0; r < options.restarts; ++r) {
        RandomSource stream = base.derive(static_cast<std::uint64_t>(r));
        const ComplexVector start = gauge_fixed(random_unit_vector(d, stream));
        const SimplexResult opt = nelder_mead(objective, to_params(start), options.simplex);
        const ComplexVector v = gauge_fixed(from_params(opt.x).normalized());
        const double err = frame_error_with(v, w);
        result.restarts_used = r + 1;
        if (err < best_error) {
            best_error = err;
            best_vector = v;
            result.best_restart = r;
        }
        if (err <= options.tol && verify_sic(make_candidate(v)) <= options.verify_tol) {
            break;
        }
    }
    result.best = make_candidate(best_vector);
    result.max_pair_deviation = verify_sic(result.best);
    result.found = result.best.frame_error <= options.tol && result.max_pair_deviation <= options.verify_tol;
    return result;
}

} // namespace qwl
