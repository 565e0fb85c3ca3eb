// Copyright 2026 The qpovm Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Seeded Monte Carlo sampling of joint outcome tables.
 *
 * Generator: xoshiro256** (Blackman & Vigna). The 256-bit state is filled
 * from the 64-bit seed with four successive splitmix64 outputs
 * (increment 0x9e3779b97f4a7c15, multipliers 0xbf58476d1ce4e5b9 and
 * 0x94d049bb133111eb). Stream k of a seed is obtained by applying the
 * standard 2^128-step jump k times, so streams never overlap in practice.
 * Uniform doubles use the top 53 bits: (next() >> 11) · 2⁻⁵³.
 */

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "qpovm/joint_table.hpp"

namespace qpovm {

class Xoshiro256ss {
  public:
    explicit Xoshiro256ss(std::uint64_t seed);
    /// Independent stream `index` of `seed`.
    static Xoshiro256ss stream(std::uint64_t seed, std::uint64_t index);

    std::uint64_t next();
    /// Uniform in [0, 1).
    double uniform();
    /// Advances the state by 2^128 steps.
    void jump();

  private:
    std::array<std::uint64_t, 4> s_{};
};

struct SampleRun {
    std::uint64_t seed;
    std::uint64_t n;
    std::vector<double> values_a;
    std::vector<double> values_b;
    /// counts[i][j]; Σ counts = n.
    std::vector<std::vector<std::uint64_t>> counts;
};

/// n i.i.d. draws by inverse CDF over the row-major flattened table,
/// using stream `stream` of `seed`.
[[nodiscard]] SampleRun sample_table(const JointProbTable &t, std::uint64_t n,
                                     std::uint64_t seed, std::uint64_t stream = 0);

/// Σ counts·x_k·x_l / n
[[nodiscard]] double empirical_correlation(const SampleRun &run);

/// Plug-in H(A|B) from empirical frequencies, bits.
[[nodiscard]] double empirical_conditional_entropy(const SampleRun &run);

} // namespace qpovm
