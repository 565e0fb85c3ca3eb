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

#include "qpovm/uncertainty.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qpovm/error.hpp"
#include "qpovm/states.hpp"

namespace qpovm {

double overlap_c(const Povm &px, const Povm &pz) {
    if (px.dim() != pz.dim()) {
        throw Error(ErrorKind::DimMismatch, "POVM dimensions differ");
    }
    double best = 0.0;
    for (const Outcome &ox : px.outcomes()) {
        const CMatrix rx = sqrt_psd(ox.effect).matrix();
        for (const Outcome &oz : pz.outcomes()) {
            const CMatrix rz = sqrt_psd(oz.effect).matrix();
            best = std::max(best, trace_norm(rx * rz));
        }
    }
    return best;
}

double mu_bound(const Povm &px, const Povm &pz) {
    return -2.0 * std::log2(overlap_c(px, pz));
}

double memory_bound(const DensityOp &rho_ab, const Povm &px, const Povm &pz) {
    return mu_bound(px, pz) + conditional_vn_entropy(rho_ab);
}

JointProbTable joint_table(const DensityOp &rho_ab, const Povm &povm_a,
                           const Povm &povm_b) {
    if (rho_ab.dim() != 4 || povm_a.dim() != 2 || povm_b.dim() != 2) {
        throw Error(ErrorKind::DimMismatch,
                    "joint table needs a two-qubit state and qubit POVMs");
    }
    std::vector<std::vector<double>> p(povm_a.size(),
                                       std::vector<double>(povm_b.size()));
    for (std::size_t i = 0; i < povm_a.size(); ++i) {
        for (std::size_t j = 0; j < povm_b.size(); ++j) {
            p[i][j] = probability(rho_ab.op(),
                                  kron(povm_a.effect(i), povm_b.effect(j)));
        }
    }
    return JointProbTable(povm_a.values(), povm_b.values(), std::move(p));
}

double conditional_shannon(const JointProbTable &t, Subsystem condition_on) {
    if (condition_on == Subsystem::A) {
        return conditional_shannon(t.transposed(), Subsystem::B);
    }
    const std::vector<double> pb = t.marginal_b();
    double h = 0.0;
    for (std::size_t j = 0; j < t.cols(); ++j) {
        if (pb[j] <= 0.0) {
            continue;
        }
        for (std::size_t i = 0; i < t.rows(); ++i) {
            const double pij = t(i, j);
            if (pij > 0.0) {
                h -= pij * std::log2(pij / pb[j]);
            }
        }
    }
    return h;
}

double binary_entropy(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw Error(ErrorKind::POutOfRange,
                    "probability " + std::to_string(p) + " outside [0, 1]");
    }
    return shannon_entropy({p, 1.0 - p});
}

GameOutcome play_game(const DensityOp &rho_ab, const Povm &alice_x,
                      const Povm &alice_z, const Povm &bob_x, const Povm &bob_z) {
    GameOutcome g{};
    g.h_x = conditional_shannon(joint_table(rho_ab, alice_x, bob_x));
    g.h_z = conditional_shannon(joint_table(rho_ab, alice_z, bob_z));
    g.lhs = g.h_x + g.h_z;
    g.bound_no_memory = mu_bound(alice_x, alice_z);
    g.bound_with_memory = memory_bound(rho_ab, alice_x, alice_z);
    g.steering_violated = g.lhs < g.bound_no_memory - 1e-12;
    return g;
}

GameReport run_game(double eta) {
    if (!(eta >= 0.0 && eta <= 1.0)) {
        throw Error(ErrorKind::EtaOutOfRange,
                    "eta " + std::to_string(eta) + " outside [0, 1]");
    }
    const GameOutcome g =
        play_game(singlet(), sharp_spin(Axis::x()), sharp_spin(Axis::z()),
                  noisy_spin(Axis::x(), eta), noisy_spin(Axis::z(), eta));
    const double closed_form = 2.0 * binary_entropy(0.5 * (1.0 + eta));
    if (std::abs(g.lhs - closed_form) > 1e-9) {
        throw Error(ErrorKind::InternalDefect,
                    "game entropy sum departs from 2H[(1+eta)/2]");
    }
    return {eta,
            g.lhs,
            closed_form,
            g.bound_no_memory,
            g.bound_with_memory,
            g.steering_violated};
}

double beating_threshold() {
    auto excess = [](double eta) {
        return 2.0 * binary_entropy(0.5 * (1.0 + eta)) - 1.0;
    };
    double lo = 0.0; // excess > 0
    double hi = 1.0; // excess < 0
    while (hi - lo > 1e-9) {
        const double mid = 0.5 * (lo + hi);
        (excess(mid) > 0.0 ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace qpovm
