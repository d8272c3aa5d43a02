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

#include "qwl/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace qwl {

namespace {

struct Vertex {
    Eigen::VectorXd x;
    double f;
};

class Cycle {
  public:
    Cycle(const std::function<double(const Eigen::VectorXd&)>& objective, const SimplexOptions& options,
          int& evaluations)
        : objective_(objective), options_(options), evaluations_(evaluations) {}

    Vertex run(const Eigen::VectorXd& start, double step) {
        const auto n = start.size();
        const double dim = static_cast<double>(n);
        const double reflect = 1.0;
        const double expand = 1.0 + 2.0 / dim;
        const double contract = 0.75 - 1.0 / (2.0 * dim);
        const double shrink = 1.0 - 1.0 / dim;

        std::vector<Vertex> simplex;
        simplex.reserve(static_cast<std::size_t>(n + 1));
        simplex.push_back(eval(start));
        for (Eigen::Index i = 0; i < n; ++i) {
            Eigen::VectorXd x = start;
            x(i) += step;
            simplex.push_back(eval(x));
        }

        while (evaluations_ < options_.max_evaluations) {
            std::sort(simplex.begin(), simplex.end(), [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
            const Vertex& best = simplex.front();
            const Vertex& worst = simplex.back();
            double diameter = 0.0;
            for (std::size_t i = 1; i < simplex.size(); ++i) {
                diameter = std::max(diameter, (simplex[i].x - best.x).lpNorm<Eigen::Infinity>());
            }
            if (worst.f - best.f <= options_.value_spread || diameter <= options_.diameter) {
                break;
            }

            Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
            for (std::size_t i = 0; i + 1 < simplex.size(); ++i) {
                centroid += simplex[i].x;
            }
            centroid /= dim;

            const Vertex r = eval(centroid + reflect * (centroid - worst.x));
            const double second_worst = simplex[simplex.size() - 2].f;
            if (r.f < best.f) {
                const Vertex e = eval(centroid + expand * (r.x - centroid));
                simplex.back() = e.f < r.f ? e : r;
            } else if (r.f < second_worst) {
                simplex.back() = r;
            } else {
                const bool outside = r.f < worst.f;
                const Eigen::VectorXd toward = outside ? r.x : worst.x;
                const Vertex c = eval(centroid + contract * (toward - centroid));
                if (c.f < (outside ? r.f : worst.f)) {
                    simplex.back() = c;
                } else {
                    for (std::size_t i = 1; i < simplex.size(); ++i) {
                        simplex[i] = eval(best.x + shrink * (simplex[i].x - best.x));
                    }
                }
            }
        }
        return *std::min_element(simplex.begin(), simplex.end(),
                                 [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
    }

  private:
    Vertex eval(const Eigen::VectorXd& x) {
        ++evaluations_;
        const double f = objective_(x);
        return {x, std::isfinite(f) ? f : std::numeric_limits<double>::max()};
    }

    const std::function<double(const Eigen::VectorXd&)>& objective_;
    const SimplexOptions& options_;
    int& evaluations_;
};

} // namespace

SimplexResult nelder_mead(const std::function<double(const Eigen::VectorXd&)>& objective, const Eigen::VectorXd& start,
                          const SimplexOptions& options) {
    SimplexResult result;
    Cycle cycle(objective, options, result.evaluations);
    Vertex incumbent = cycle.run(start, options.initial_step);
    double step = options.initial_step;
    for (int c = 1; c < options.max_cycles && result.evaluations < options.max_evaluations; ++c) {
        // Fresh simplex around the incumbent; shrink the step as the cycles converge.
        step = std::max(step * 0.1, 1e-6);
        const Vertex next = cycle.run(incumbent.x, step);
        const bool improved = next.f < incumbent.f;
        if (improved) {
            incumbent = next;
        }
        if (!improved || incumbent.f == 0.0) {
            break;
        }
    }
    result.x = incumbent.x;
    result.value = incumbent.f;
    return result;
}

} // namespace qwl
