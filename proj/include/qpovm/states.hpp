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
 * Two-qubit states, von Neumann entropies and the classical-quantum states
 * left behind when one party measures and records the outcome.
 */

#pragma once

#include <optional>
#include <vector>

#include "qpovm/density_op.hpp"
#include "qpovm/povm.hpp"

namespace qpovm {

/// (|01⟩ − |10⟩)/√2
[[nodiscard]] DensityOp singlet();

/// ρ_A ⊗ ρ_B
[[nodiscard]] DensityOp product_state(const DensityOp &a, const DensityOp &b);

/// Shannon entropy in bits; zero entries contribute 0.
[[nodiscard]] double shannon_entropy(const std::vector<double> &probs);

/// −Tr[ρ log₂ ρ]; eigenvalues in [-1e-10, 0) are clamped to 0.
[[nodiscard]] double von_neumann_entropy(const DensityOp &rho);
[[nodiscard]] double von_neumann_entropy(const HermitianOp &rho);

/// S(AB) − S(B) for a two-qubit state.
[[nodiscard]] double conditional_vn_entropy(const DensityOp &rho_ab);

struct CqBranch {
    double prob;
    /// Normalized state of B for this outcome; empty when prob ≤ 1e-12.
    std::optional<DensityOp> conditional_state;
};

/// Σ_x |x⟩⟨x| ⊗ ρ_B^(x) stored as explicit branches.
class CqState {
  public:
    explicit CqState(std::vector<CqBranch> branches);

    [[nodiscard]] const std::vector<CqBranch> &branches() const noexcept {
        return branches_;
    }
    [[nodiscard]] std::vector<double> probabilities() const;
    /// H(p) + Σ_x p_x S(ρ_B^(x))
    [[nodiscard]] double entropy() const;

  private:
    std::vector<CqBranch> branches_;
};

/// Branch x holds Tr_A[ρ_AB (E(x) ⊗ 𝟙)], normalized, with its trace as prob.
[[nodiscard]] CqState cq_post_measurement(const DensityOp &rho_ab,
                                          const Povm &povm_a);

/// S(ρ_AB^(𝔼)) − S(ρ_B)
[[nodiscard]] double measured_conditional_entropy(const DensityOp &rho_ab,
                                                  const Povm &povm_a);

} // namespace qpovm
