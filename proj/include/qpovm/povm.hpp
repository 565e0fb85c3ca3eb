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
 * Effects, POVMs, spin-measurement constructors and outcome statistics.
 */

#pragma once

#include <utility>
#include <vector>

#include "qpovm/density_op.hpp"
#include "qpovm/linalg.hpp"

namespace qpovm {

/// Unit direction in R³.
class Axis {
  public:
    static constexpr double kUnitTol = 1e-12;

    /// Requires |v| = 1 within 1e-12.
    explicit Axis(const Vec3 &v);
    /// Rescales any nonzero vector to unit length.
    static Axis normalized(const Vec3 &v);

    static Axis x() { return Axis({1.0, 0.0, 0.0}); }
    static Axis y() { return Axis({0.0, 1.0, 0.0}); }
    static Axis z() { return Axis({0.0, 0.0, 1.0}); }

    [[nodiscard]] const Vec3 &vec() const noexcept { return n_; }
    [[nodiscard]] double operator[](std::size_t i) const { return n_[i]; }

  private:
    Vec3 n_;
};

/// σ⃗·n̂
[[nodiscard]] HermitianOp spin_operator(const Axis &axis);

/// Operator with spectrum in [-1e-10, 1 + 1e-10].
class Effect {
  public:
    static constexpr double kTol = 1e-10;

    explicit Effect(const HermitianOp &op);

    [[nodiscard]] const HermitianOp &op() const noexcept { return op_; }

  private:
    HermitianOp op_;
};

struct Outcome {
    int label;
    double value;
    HermitianOp effect;
};

/**
 * Ordered list of labeled effects. Outcomes are kept sorted by descending
 * value (+1 before -1). Construction checks labels and dimensions only;
 * positivity and completeness are reported by validate().
 */
class Povm {
  public:
    explicit Povm(std::vector<Outcome> outcomes);

    [[nodiscard]] const std::vector<Outcome> &outcomes() const noexcept {
        return outcomes_;
    }
    [[nodiscard]] std::size_t size() const noexcept { return outcomes_.size(); }
    [[nodiscard]] std::size_t dim() const noexcept {
        return outcomes_.front().effect.dim();
    }
    [[nodiscard]] const HermitianOp &effect(std::size_t i) const {
        return outcomes_.at(i).effect;
    }
    [[nodiscard]] std::vector<double> values() const;

  private:
    std::vector<Outcome> outcomes_;
};

/// Π(±1) = (𝟙 ± σ⃗·n̂)/2
[[nodiscard]] Povm sharp_spin(const Axis &axis);

/// E(±1) = (𝟙 ± η σ⃗·n̂)/2, η ∈ [0, 1].
[[nodiscard]] Povm noisy_spin(const Axis &axis, double eta);

struct ValidationReport {
    static constexpr double kEffectTol = 1e-10;
    static constexpr double kCompletenessTol = 1e-9;

    bool ok;
    /// Largest violation of 0 ≤ E ≤ 𝟙 over all effects (0 when none).
    double max_negativity;
    /// max-abs of Σ E(x) − 𝟙.
    double completeness_residual;
};

[[nodiscard]] ValidationReport validate(const Povm &p);

/// Tr[ρ E(x)] in outcome order. Values in [-1e-12, 0) are clamped to 0.
[[nodiscard]] std::vector<double> outcome_distribution(const DensityOp &rho,
                                                       const Povm &p);

/// Σ_x value(x) Tr[ρ E(x)]
[[nodiscard]] double expectation(const DensityOp &rho, const Povm &p);

struct LudersBranch {
    DensityOp post_state;
    double prob;
};

/// √E ρ √E / Tr[ρE]; throws ZeroProbabilityBranch when Tr[ρE] ≤ 1e-12.
[[nodiscard]] LudersBranch luders_update(const DensityOp &rho, const Effect &e);

/// Non-selective update Σ_x √E(x) ρ √E(x).
[[nodiscard]] HermitianOp luders_channel(const DensityOp &rho, const Povm &p);

/// Tr[ρ E] with the probability clamping convention.
[[nodiscard]] double probability(const HermitianOp &rho, const HermitianOp &e);

} // namespace qpovm
