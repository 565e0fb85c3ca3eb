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

#include "qpovm/povm.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "qpovm/error.hpp"

namespace qpovm {

namespace {

constexpr double kProbClamp = 1e-12;

void check_eta(double eta) {
    if (!(eta >= 0.0 && eta <= 1.0)) {
        throw Error(ErrorKind::EtaOutOfRange,
                    "eta " + std::to_string(eta) + " outside [0, 1]");
    }
}

HermitianOp half_identity_plus(double coeff, const HermitianOp &s) {
    return 0.5 * (HermitianOp::identity(2) + coeff * s);
}

} // namespace

Axis::Axis(const Vec3 &v) : n_(v) {
    if (std::abs(norm(v) - 1.0) > kUnitTol) {
        throw Error(ErrorKind::InvalidAxis, "axis is not unit length");
    }
}

Axis Axis::normalized(const Vec3 &v) {
    const double n = norm(v);
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw Error(ErrorKind::InvalidAxis, "cannot normalize a zero vector");
    }
    return Axis({v[0] / n, v[1] / n, v[2] / n});
}

HermitianOp spin_operator(const Axis &axis) {
    return bloch_operator(0.0, axis.vec());
}

Effect::Effect(const HermitianOp &op) : op_(op) {
    const EigenDecomposition e = eig_hermitian(op);
    if (e.values.front() < -kTol || e.values.back() > 1.0 + kTol) {
        throw Error(ErrorKind::InvalidEffect, "spectrum outside [0, 1]");
    }
}

Povm::Povm(std::vector<Outcome> outcomes) : outcomes_(std::move(outcomes)) {
    if (outcomes_.empty()) {
        throw Error(ErrorKind::InvalidPovm, "POVM needs at least one outcome");
    }
    std::set<int> labels;
    for (const Outcome &o : outcomes_) {
        if (!labels.insert(o.label).second) {
            throw Error(ErrorKind::InvalidPovm,
                        "duplicate label " + std::to_string(o.label));
        }
        if (o.effect.dim() != outcomes_.front().effect.dim()) {
            throw Error(ErrorKind::DimMismatch, "effects differ in dimension");
        }
    }
    std::stable_sort(outcomes_.begin(), outcomes_.end(),
                     [](const Outcome &a, const Outcome &b) {
                         return a.value > b.value;
                     });
}

std::vector<double> Povm::values() const {
    std::vector<double> v;
    v.reserve(outcomes_.size());
    for (const Outcome &o : outcomes_) {
        v.push_back(o.value);
    }
    return v;
}

Povm sharp_spin(const Axis &axis) { return noisy_spin(axis, 1.0); }

Povm noisy_spin(const Axis &axis, double eta) {
    check_eta(eta);
    const HermitianOp s = spin_operator(axis);
    return Povm({{+1, +1.0, half_identity_plus(+eta, s)},
                 {-1, -1.0, half_identity_plus(-eta, s)}});
}

ValidationReport validate(const Povm &p) {
    double worst = 0.0;
    CMatrix total(p.dim());
    for (const Outcome &o : p.outcomes()) {
        const EigenDecomposition e = eig_hermitian(o.effect);
        worst = std::max(worst, -e.values.front());
        worst = std::max(worst, e.values.back() - 1.0);
        total += o.effect.matrix();
    }
    const double residual = max_abs_diff(total, CMatrix::identity(p.dim()));
    const bool ok = worst <= ValidationReport::kEffectTol &&
                    residual <= ValidationReport::kCompletenessTol;
    return {ok, std::max(worst, 0.0), residual};
}

double probability(const HermitianOp &rho, const HermitianOp &e) {
    if (rho.dim() != e.dim()) {
        throw Error(ErrorKind::DimMismatch, "state and effect dimensions differ");
    }
    const double p = (rho.matrix() * e.matrix()).trace().real();
    if (p < -kProbClamp) {
        throw Error(ErrorKind::NegativeProbability,
                    "Tr[rho E] = " + std::to_string(p));
    }
    return std::max(p, 0.0);
}

std::vector<double> outcome_distribution(const DensityOp &rho, const Povm &p) {
    if (rho.dim() != p.dim()) {
        throw Error(ErrorKind::DimMismatch, "state and POVM dimensions differ");
    }
    std::vector<double> probs;
    probs.reserve(p.size());
    for (const Outcome &o : p.outcomes()) {
        probs.push_back(probability(rho.op(), o.effect));
    }
    return probs;
}

double expectation(const DensityOp &rho, const Povm &p) {
    const std::vector<double> probs = outcome_distribution(rho, p);
    double s = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        s += p.outcomes()[i].value * probs[i];
    }
    return s;
}

LudersBranch luders_update(const DensityOp &rho, const Effect &e) {
    const double prob = probability(rho.op(), e.op());
    if (prob <= kProbClamp) {
        throw Error(ErrorKind::ZeroProbabilityBranch,
                    "branch probability " + std::to_string(prob));
    }
    const CMatrix root = sqrt_psd(e.op()).matrix();
    const CMatrix post = root * rho.op().matrix() * root * Complex(1.0 / prob);
    return {DensityOp(HermitianOp(post)), prob};
}

HermitianOp luders_channel(const DensityOp &rho, const Povm &p) {
    if (rho.dim() != p.dim()) {
        throw Error(ErrorKind::DimMismatch, "state and POVM dimensions differ");
    }
    CMatrix out(rho.dim());
    for (const Outcome &o : p.outcomes()) {
        const CMatrix root = sqrt_psd(o.effect).matrix();
        out += root * rho.op().matrix() * root;
    }
    return HermitianOp(out);
}

} // namespace qpovm
