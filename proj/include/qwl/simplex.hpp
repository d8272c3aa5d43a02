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

#include <functional>

#include <Eigen/Dense>

namespace qwl {

struct SimplexOptions {
    double initial_step = 0.2;
    int max_evaluations = 40000;
    /// Stop a cycle when max f - min f over the simplex falls below this.
    double value_spread = 1e-32;
    /// ... or when the simplex diameter falls below this.
    double diameter = 1e-14;
    /// Restart the simplex around the incumbent at most this many times.
    int max_cycles = 8;
};

struct SimplexResult {
    Eigen::VectorXd x;
    double value = 0;
    int evaluations = 0;
};

/// Nelder-Mead downhill simplex with dimension-adaptive coefficients,
/// restarted around the incumbent until a cycle stops improving.
SimplexResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& objective, const Eigen::VectorXd& start,
                          const SimplexOptions& options = {});

} // namespace qwl
