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
 * Entropic uncertainty bounds with and without a quantum memory, and the
 * two-party prediction game in which Alice measures sharply and Bob tries
 * to guess her outcome from his own (possibly unsharp) measurement.
 */

#pragma once

#include "qpovm/density_op.hpp"
#include "qpovm/joint_table.hpp"
#include "qpovm/povm.hpp"

namespace qpovm {

/// max_{x,z} ||√E_X(x) √E_Z(z)||₁
[[nodiscard]] double overlap_c(const Povm &px, const Povm &pz);

/// −2 log₂ overlap_c(px, pz)
[[nodiscard]] double mu_bound(const Povm &px, const Povm &pz);

/// mu_bound(px, pz) + S(A|B); may be negative.
[[nodiscard]] double memory_bound(const DensityOp &rho_ab, const Povm &px,
                                  const Povm &pz);

/// p(x, x′) = Tr[ρ_AB E_A(x) ⊗ E_B(x′)]
[[nodiscard]] JointProbTable joint_table(const DensityOp &rho_ab,
                                         const Povm &povm_a, const Povm &povm_b);

/// H(A|B) (or H(B|A)) in bits. Columns with zero marginal are skipped.
[[nodiscard]] double conditional_shannon(const JointProbTable &t,
                                         Subsystem condition_on = Subsystem::B);

/// −p log₂ p − (1−p) log₂(1−p); throws POutOfRange outside [0, 1].
[[nodiscard]] double binary_entropy(double p);

/// Result of the game for arbitrary measurements on both sides.
struct GameOutcome {
    double h_x;              ///< H(X|X′)
    double h_z;              ///< H(Z|Z′)
    double lhs;              ///< h_x + h_z
    double bound_no_memory;  ///< −2 log₂ C of Alice's pair
    double bound_with_memory;
    bool steering_violated;  ///< lhs < bound_no_memory − 1e-12
};

[[nodiscard]] GameOutcome play_game(const DensityOp &rho_ab, const Povm &alice_x,
                                    const Povm &alice_z, const Povm &bob_x,
                                    const Povm &bob_z);

struct GameReport {
    double eta;
    double lhs;
    double closed_form;  ///< 2 H[(1+η)/2]
    double bound_no_memory;
    double bound_with_memory;
    bool steering_violated;
};

/**
 * Singlet shared between Alice (sharp σ_x / σ_z) and Bob (noisy σ_x / σ_z
 * with unsharpness eta). Throws InternalDefect if the table-computed lhs
 * departs from the closed form by more than 1e-9.
 */
[[nodiscard]] GameReport run_game(double eta);

/// Root of 2 H[(1+η)/2] = 1 on [0, 1], bisection to 1e-9.
[[nodiscard]] double beating_threshold();

} // namespace qpovm
