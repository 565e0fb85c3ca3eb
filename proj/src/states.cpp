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

#include "qpovm/states.hpp"

#include <algorithm>
#include <cmath>

#include "qpovm/error.hpp"

namespace qpovm {

namespace {

constexpr double kBranchFloor = 1e-12;

void check_two_qubit(const DensityOp &rho) {
    if (rho.dim() != 4) {
        throw Error(ErrorKind::BadDim, "expected a two-qubit state");
    }
}

} // namespace

DensityOp singlet() {
    const double s = 1.0 / std::sqrt(2.0);
    return DensityOp::pure({0.0, s, -s, 0.0});
}

DensityOp product_state(const DensityOp &a, const DensityOp &b) {
    return DensityOp(kron(a.op(), b.op()));
}

double shannon_entropy(const std::vector<double> &probs) {
    double h = 0.0;
    for (double p : probs) {
        if (p > 0.0) {
            h -= p * std::log2(p);
        }
    }
    return h;
}

double von_neumann_entropy(const HermitianOp &rho) {
    std::vector<double> spectrum = eig_hermitian(rho).values;
    for (double &v : spectrum) {
        v = std::max(v, 0.0);
    }
    return shannon_entropy(spectrum);
}

double von_neumann_entropy(const DensityOp &rho) {
    return von_neumann_entropy(rho.op());
}

double conditional_vn_entropy(const DensityOp &rho_ab) {
    check_two_qubit(rho_ab);
    return von_neumann_entropy(rho_ab) -
           von_neumann_entropy(partial_trace(rho_ab.op(), Subsystem::B));
}

CqState::CqState(std::vector<CqBranch> branches) : branches_(std::move(branches)) {
    double total = 0.0;
    for (const CqBranch &b : branches_) {
        if (b.prob < 0.0) {
            throw Error(ErrorKind::NegativeProbability, "negative branch weight");
        }
        total += b.prob;
    }
    if (std::abs(total - 1.0) > 1e-10) {
        throw Error(ErrorKind::InvalidState, "branch weights do not sum to 1");
    }
}

std::vector<double> CqState::probabilities() const {
    std::vector<double> p;
    p.reserve(branches_.size());
    for (const CqBranch &b : branches_) {
        p.push_back(b.prob);
    }
    return p;
}

double CqState::entropy() const {
    double s = shannon_entropy(probabilities());
    for (const CqBranch &b : branches_) {
        if (b.conditional_state) {
            s += b.prob * von_neumann_entropy(*b.conditional_state);
        }
    }
    return s;
}

CqState cq_post_measurement(const DensityOp &rho_ab, const Povm &povm_a) {
    check_two_qubit(rho_ab);
    if (povm_a.dim() != 2) {
        throw Error(ErrorKind::DimMismatch, "POVM must act on qubit A");
    }
    const CMatrix id_b = CMatrix::identity(2);
    std::vector<CqBranch> branches;
    branches.reserve(povm_a.size());
    for (const Outcome &o : povm_a.outcomes()) {
        // Tr_A[ρ (E ⊗ 𝟙)] = Tr_A[(√E ⊗ 𝟙) ρ (√E ⊗ 𝟙)], the latter is Hermitian.
        const CMatrix root = kron(sqrt_psd(o.effect).matrix(), id_b);
        const HermitianOp unnormalized(partial_trace(
            root * rho_ab.op().matrix() * root, Subsystem::B));
        const double prob = std::max(unnormalized.trace(), 0.0);
        CqBranch branch{prob, std::nullopt};
        if (prob > kBranchFloor) {
            branch.conditional_state = DensityOp((1.0 / prob) * unnormalized);
        }
        branches.push_back(std::move(branch));
    }
    return CqState(std::move(branches));
}

double measured_conditional_entropy(const DensityOp &rho_ab, const Povm &povm_a) {
    const CqState cq = cq_post_measurement(rho_ab, povm_a);
    return cq.entropy() -
           von_neumann_entropy(partial_trace(rho_ab.op(), Subsystem::B));
}

} // namespace qpovm
