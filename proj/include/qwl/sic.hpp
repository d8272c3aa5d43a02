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
#include "qwl/random.hpp"
#include "qwl/simplex.hpp"

namespace qwl {

inline constexpr int kMaxSicDim = 8;

/// A fiducial vector, its Weyl orbit and its frame error.
struct SicCandidate {
    int d = 0;
    ComplexVector fiducial;
    std::vector<ComplexVector> orbit; // orbit[a*d + b] = X^a Z^b fiducial
    double frame_error = 0;
};

/// X^a Z^b phi for (a, b) in lexicographic order; phi must be a unit vector of length d.
std::vector<ComplexVector> weyl_orbit(const ComplexVector& phi, int d);

/// sum over (a, b) != (0, 0) of ( |<phi|X^a Z^b|phi>|^2 - 1/(d+1) )^2
double frame_error(const ComplexVector& phi);

/// max over distinct orbit pairs of | |<u|v>|^2 - 1/(d+1) |
double verify_sic(const SicCandidate& candidate);

SicCandidate make_candidate(const ComplexVector& phi);

struct SicSearchOptions {
    int restarts = 20;
    double tol = 1e-10;         // frame-error success threshold
    double verify_tol = 1e-6;   // per-pair overlap threshold
    SimplexOptions simplex{};
};

struct SicSearchResult {
    bool found = false;
    SicCandidate best; // winner, or the best failure
    double max_pair_deviation = 0;
    int restarts_used = 0;
    int best_restart = -1;
};

/// Multi-start simplex minimization of the frame error over unit vectors with a
/// real non-negative first component. Restart r starts from a Haar-random vector
/// drawn from its own stream, derived from one value taken from `rng`. The search
/// stops at the first restart that reaches `tol`; otherwise the lowest error wins
/// and ties go to the lower restart index.
SicSearchResult search_fiducial(int d, RandomSource& rng, const SicSearchOptions& options = {});

} // namespace qwl
