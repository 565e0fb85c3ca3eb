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
 * Joint measurability of dichotomic qubit POVMs.
 *
 * A collection of n ∈ {2, 3} two-outcome qubit POVMs is jointly measurable
 * iff there is a grand POVM {G(λ)}, λ = (x₁, …, x_n), whose marginals
 * reproduce every E_i(x_i). Writing each G(λ) in Bloch form a𝟙 + b⃗·σ⃗
 * turns the marginal conditions into a linear system and positivity into
 * the cone condition |b⃗| ≤ min(a, 1 − a). Feasibility of the intersection
 * is decided with Dykstra's alternating projections.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "qpovm/linalg.hpp"
#include "qpovm/povm.hpp"

namespace qpovm {

/// Qubit effect a𝟙 + b⃗·σ⃗.
struct BlochEffect {
    double a = 0.0;
    Vec3 b{};

    [[nodiscard]] static BlochEffect from_op(const HermitianOp &op);
    [[nodiscard]] HermitianOp op() const { return bloch_operator(a, b); }
    /// max(|b⃗| − a, |b⃗| − (1 − a), 0)
    [[nodiscard]] double violation() const;
    [[nodiscard]] bool is_valid(double tol = 1e-10) const {
        return violation() <= tol;
    }
};

/// Euclidean projection of (a, b⃗) onto {|b⃗| ≤ a, |b⃗| ≤ 1 − a}.
[[nodiscard]] BlochEffect project_effect_cone(const BlochEffect &e);

/**
 * Grand-POVM search space for n target POVMs. Outcome index λ has bit i
 * set when observable i reports its second outcome (value −1).
 */
class GrandPovmProblem {
  public:
    /// Each marginal must be a valid two-outcome qubit POVM; n ∈ {2, 3}.
    explicit GrandPovmProblem(std::vector<Povm> marginals);

    /// Noisy spin POVMs along the given axes, all with unsharpness eta.
    [[nodiscard]] static GrandPovmProblem noisy(const std::vector<Axis> &axes,
                                                double eta);

    [[nodiscard]] std::size_t arity() const noexcept { return marginals_.size(); }
    [[nodiscard]] std::size_t outcome_count() const noexcept {
        return std::size_t{1} << arity();
    }
    [[nodiscard]] std::size_t variable_count() const noexcept {
        return 4 * outcome_count();
    }
    [[nodiscard]] const std::vector<Povm> &marginals() const noexcept {
        return marginals_;
    }
    /// Bloch form of E_i(outcome).
    [[nodiscard]] const BlochEffect &target(std::size_t i,
                                            std::size_t outcome) const {
        return targets_.at(2 * i + outcome);
    }

  private:
    std::vector<Povm> marginals_;
    std::vector<BlochEffect> targets_;
};

/**
 * Affine system A v = t over the Bloch coordinates v[4λ + c]
 * (c = 0 → a, c = 1..3 → b⃗). The raw rows are kept for residual checks;
 * an orthonormal basis of the row space (Gram–Schmidt QR of Aᵀ with
 * redundant rows dropped) drives the projection.
 */
class AffineSystem {
  public:
    AffineSystem(std::size_t variables, std::vector<std::vector<double>> rows,
                 std::vector<double> rhs);

    [[nodiscard]] std::size_t variables() const noexcept { return variables_; }
    [[nodiscard]] std::size_t raw_rows() const noexcept { return rows_.size(); }
    /// Number of independent rows after deduplication.
    [[nodiscard]] std::size_t rank() const noexcept { return basis_.size(); }

    /// Orthogonal projection onto {v : A v = t}, in place.
    void project(std::span<double> v) const;
    /// max-abs of A v − t over the raw rows.
    [[nodiscard]] double residual(std::span<const double> v) const;

  private:
    std::size_t variables_;
    std::vector<std::vector<double>> rows_;
    std::vector<double> rhs_;
    std::vector<std::vector<double>> basis_;
    std::vector<double> basis_rhs_;
};

/// Σ_{λ: λ_i = x} G(λ) = E_i(x) for every i, x; plus Σ_λ G(λ) = 𝟙.
[[nodiscard]] AffineSystem marginal_constraints(const GrandPovmProblem &problem);

enum class Verdict { Feasible, Infeasible, Indeterminate };

[[nodiscard]] const char *to_string(Verdict v) noexcept;

struct SolverConfig {
    int max_iter = 20000;
    double tol_feas = 1e-8;
    double tol_infeas = 1e-5;
};

struct FeasibilityReport {
    Verdict verdict = Verdict::Indeterminate;
    /// max-abs distance between the affine and cone iterates at exit.
    double residual = 0.0;
    int iterations = 0;
    /// G(λ) in λ order; present iff verdict is Feasible.
    std::optional<std::vector<BlochEffect>> witness;
};

/**
 * Dykstra iteration between the marginal-constraint subspace and the
 * product of effect cones, started from G(λ) = 𝟙/2ⁿ.
 *
 * Feasible: residual < tol_feas and the cone iterate passes
 * check_grand_povm (marginals ≤ 1e-7, effects ≤ 1e-8).
 * Infeasible: residual moved less than 1e-12 over the last 100 iterations
 * while still above tol_infeas. Otherwise Indeterminate after max_iter.
 */
[[nodiscard]] FeasibilityReport solve_feasibility(const GrandPovmProblem &problem,
                                                  const SolverConfig &cfg = {});

struct WitnessCheck {
    double marginal_error;   ///< max-abs over matrix entries of Σ G − E_i
    double effect_violation; ///< largest departure from 0 ≤ G ≤ 𝟙
    double completeness_error;
};

/// Checks a candidate grand POVM on operators, independent of the solver.
[[nodiscard]] WitnessCheck check_grand_povm(const GrandPovmProblem &problem,
                                            const std::vector<HermitianOp> &grand);

/// Grand POVM with labels λ and value 0 for every outcome (λ order kept).
[[nodiscard]] Povm grand_povm(const std::vector<HermitianOp> &effects);
[[nodiscard]] Povm grand_povm(const std::vector<BlochEffect> &effects);

/// Marginal of a grand POVM for observable i (outcome values +1, −1).
[[nodiscard]] Povm marginal(const Povm &grand, std::size_t arity, std::size_t i);

/**
 * Joint measurability of two unbiased dichotomic qubit POVMs with
 * observable Bloch vectors b⃗₁, b⃗₂ (E(±) = (𝟙 ± b⃗·σ⃗)/2):
 * |b⃗₁ + b⃗₂| + |b⃗₁ − b⃗₂| ≤ 2.
 */
[[nodiscard]] bool pair_criterion_unbiased(const Vec3 &b1, const Vec3 &b2);

/// G(x, z) = ¼(𝟙 + ηxσ_x + ηzσ_z); λ bit 0 ↔ x, bit 1 ↔ z.
[[nodiscard]] Povm canonical_pair_grand_povm(double eta);

enum class ThresholdMode { Pairwise, Full };

struct ThresholdProbe {
    double eta;
    bool feasible;
    /// Worst residual / total iterations over the solves behind this probe.
    double residual;
    int iterations;
};

struct ThresholdResult {
    double eta;
    std::vector<ThresholdProbe> probes;
};

/**
 * Largest η at which the noisy spin POVMs along `axes` are jointly
 * measurable, by bisection on [0, 1] until the bracket is ≤ gap.
 * Indeterminate solves count as infeasible. Pairwise mode requires every
 * pair to be feasible; full mode solves the n-observable problem.
 */
[[nodiscard]] ThresholdResult threshold(const std::vector<Axis> &axes,
                                        ThresholdMode mode,
                                        const SolverConfig &cfg = {},
                                        double gap = 1e-3);

} // namespace qpovm
