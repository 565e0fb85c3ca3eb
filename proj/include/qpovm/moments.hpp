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
 * Sequential unsharp-then-sharp measurements along three axes, the 4×4
 * moment matrix of the resulting pairwise correlations, and the three-term
 * Leggett–Garg combination.
 */

#pragma once

#include <array>
#include <vector>

#include "qpovm/density_op.hpp"
#include "qpovm/joint_table.hpp"
#include "qpovm/povm.hpp"

namespace qpovm {

/// ⟨X₁X₂⟩, ⟨X₂X₃⟩, ⟨X₁X₃⟩, each in [−1, 1].
struct CorrelationTriple {
    double c12;
    double c23;
    double c13;

    CorrelationTriple(double c12_, double c23_, double c13_);
};

/// Moment matrix ⟨ξξᵀ⟩ for ξᵀ = (1, x₁x₂, x₂x₃, x₁x₃).
class MomentMatrix {
  public:
    explicit MomentMatrix(const CorrelationTriple &c);

    [[nodiscard]] double operator()(std::size_t i, std::size_t j) const {
        return m_[i][j];
    }
    [[nodiscard]] const std::array<std::array<double, 4>, 4> &rows() const noexcept {
        return m_;
    }
    [[nodiscard]] const CorrelationTriple &correlations() const noexcept {
        return c_;
    }

  private:
    CorrelationTriple c_;
    std::array<std::array<double, 4>, 4> m_{};
};

/// n̂_k = (cos 2π(k−1)/3, sin 2π(k−1)/3, 0)
[[nodiscard]] std::array<Axis, 3> trine_axes();

/**
 * p(x_k, x_l) for a measurement along `axis_first` with unsharpness
 * eta_first followed by one along `axis_second` with eta_second, the
 * state updated in between by the Lüders rule.
 */
[[nodiscard]] JointProbTable sequential_pair_table(const DensityOp &rho,
                                                   const Axis &axis_first,
                                                   const Axis &axis_second,
                                                   double eta_first,
                                                   double eta_second);

/// Unsharp (eta) first measurement, sharp second.
[[nodiscard]] JointProbTable sequential_pair_table(const DensityOp &rho,
                                                   const Axis &axis_first,
                                                   const Axis &axis_second,
                                                   double eta);

/// Σ p(x_k, x_l) x_k x_l
[[nodiscard]] double pair_correlation(const JointProbTable &t);

/// Correlations of the ordered pairs (1→2), (2→3), (1→3).
[[nodiscard]] CorrelationTriple sequential_correlations(
    const DensityOp &rho, const std::array<Axis, 3> &axes, double eta);

[[nodiscard]] MomentMatrix build_moment_matrix(const CorrelationTriple &c);

/// Numerical spectrum, ascending.
[[nodiscard]] std::array<double, 4> moment_eigenvalues(const MomentMatrix &m);

/// c12 + c23 − c13; the inequality holds iff this is ≤ 1.
[[nodiscard]] double lgi_value(const CorrelationTriple &c);

/// Largest η with min eigenvalue ≥ −1e-12, by bisection to 1e-6.
[[nodiscard]] double positivity_threshold(const std::array<Axis, 3> &axes,
                                          const DensityOp &rho);

} // namespace qpovm
