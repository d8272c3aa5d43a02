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

#include <cstdint>
#include <random>
#include <string_view>

#include "qwl/matrix.hpp"

namespace qwl {

/// Seeded, platform-independent random stream.
///
/// Raw bits come from std::mt19937_64, whose output sequence the standard
/// pins exactly. Uniform and normal variates are derived here rather than
/// through <random> distributions, whose algorithms are implementation
/// defined.
class RandomSource {
  public:
    static constexpr std::string_view kAlgorithm = "mt19937_64+box-muller";

    explicit RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11U) * 0x1.0p-53; }

    /// Standard normal.
    double normal();

    /// Complex normal with independent N(0, 1/2) parts (E|z|^2 = 1).
    Complex complex_normal();

    /// Independent stream for sub-task `index`: seeded with splitmix64(seed ^ index).
    RandomSource derive(std::uint64_t index) const;

  private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Haar-random unit vector in C^d.
ComplexVector random_unit_vector(Eigen::Index d, RandomSource& rng);

} // namespace qwl
