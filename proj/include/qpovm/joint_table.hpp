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

#pragma once

#include <cstddef>
#include <vector>

#include "qpovm/linalg.hpp"

namespace qpovm {

/**
 * Joint distribution over the outcomes of two dichotomic (or general
 * finite) measurements. Rows index party A's outcomes, columns party B's;
 * the outcome values are carried alongside for correlation functions.
 */
class JointProbTable {
  public:
    static constexpr double kClamp = 1e-12;
    static constexpr double kTotalTol = 1e-10;

    /// Entries in [-1e-12, 0) are clamped to 0; total must be 1 within 1e-10.
    JointProbTable(std::vector<double> values_a, std::vector<double> values_b,
                   std::vector<std::vector<double>> p);

    [[nodiscard]] std::size_t rows() const noexcept { return values_a_.size(); }
    [[nodiscard]] std::size_t cols() const noexcept { return values_b_.size(); }
    [[nodiscard]] double operator()(std::size_t i, std::size_t j) const {
        return p_[i][j];
    }
    [[nodiscard]] const std::vector<double> &values_a() const noexcept {
        return values_a_;
    }
    [[nodiscard]] const std::vector<double> &values_b() const noexcept {
        return values_b_;
    }
    [[nodiscard]] const std::vector<std::vector<double>> &entries() const noexcept {
        return p_;
    }

    [[nodiscard]] std::vector<double> marginal_a() const;
    [[nodiscard]] std::vector<double> marginal_b() const;
    [[nodiscard]] JointProbTable transposed() const;

  private:
    std::vector<double> values_a_;
    std::vector<double> values_b_;
    std::vector<std::vector<double>> p_;
};

} // namespace qpovm
