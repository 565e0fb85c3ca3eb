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

#include "qpovm/moments.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qpovm/error.hpp"

namespace qpovm {

namespace {

void check_unit_interval(double c, const char *name) {
    if (!(c >= -1.0 && c <= 1.0)) {
        throw Error(ErrorKind::InvalidTable,
                    std::string(name) + " = " + std::to_string(c) +
                        " outside [-1, 1]");
    }
}

double min_moment_eigenvalue(const std::array<Axis, 3> &axes,
                             const DensityOp &rho, double eta) {
    return moment_eigenvalues(
               build_moment_matrix(sequential_correlations(rho, axes, eta)))
        .front();
}

} // namespace

CorrelationTriple::CorrelationTriple(double c12_, double c23_, double c13_)
    : c12(c12_), c23(c23_), c13(c13_) {
    check_unit_interval(c12, "c12");
    check_unit_interval(c23, "c23");
    check_unit_interval(c13, "c13");
}

MomentMatrix::MomentMatrix(const CorrelationTriple &c) : c_(c) {
    const double a = c.c12;
    const double b = c.c23;
    const double d = c.c13;
    m_ = {{{1.0, a, b, d}, {a, 1.0, d, b}, {b, d, 1.0, a}, {d, b, a, 1.0}}};
}

std::array<Axis, 3> trine_axes() {
    auto at = [](int k) {
        const double phi = 2.0 * std::numbers::pi * k / 3.0;
        return Axis::normalized({std::cos(phi), std::sin(phi), 0.0});
    };
    return {at(0), at(1), at(2)};
}

JointProbTable sequential_pair_table(const DensityOp &rho, const Axis &axis_first,
                                     const Axis &axis_second, double eta_first,
                                     double eta_second) {
    if (rho.dim() != 2) {
        throw Error(ErrorKind::DimMismatch, "sequential protocol acts on a qubit");
    }
    const Povm first = noisy_spin(axis_first, eta_first);
    const Povm second = noisy_spin(axis_second, eta_second);
    std::vector<std::vector<double>> p(2, std::vector<double>(2, 0.0));
    for (std::size_t i = 0; i < 2; ++i) {
        const Effect e(first.effect(i));
        if (probability(rho.op(), e.op()) <= 1e-12) {
            continue; // branch never occurs; row stays zero
        }
        const LudersBranch branch = luders_update(rho, e);
        const std::vector<double> cond = outcome_distribution(branch.post_state, second);
        for (std::size_t j = 0; j < 2; ++j) {
            p[i][j] = branch.prob * cond[j];
        }
    }
    return JointProbTable(first.values(), second.values(), std::move(p));
}

JointProbTable sequential_pair_table(const DensityOp &rho, const Axis &axis_first,
                                     const Axis &axis_second, double eta) {
    return sequential_pair_table(rho, axis_first, axis_second, eta, 1.0);
}

double pair_correlation(const JointProbTable &t) {
    double s = 0.0;
    for (std::size_t i = 0; i < t.rows(); ++i) {
        for (std::size_t j = 0; j < t.cols(); ++j) {
            s += t(i, j) * t.values_a()[i] * t.values_b()[j];
        }
    }
    return s;
}

CorrelationTriple sequential_correlations(const DensityOp &rho,
                                          const std::array<Axis, 3> &axes,
                                          double eta) {
    auto corr = [&](std::size_t k, std::size_t l) {
        return pair_correlation(sequential_pair_table(rho, axes[k], axes[l], eta));
    };
    return {corr(0, 1), corr(1, 2), corr(0, 2)};
}

MomentMatrix build_moment_matrix(const CorrelationTriple &c) {
    return MomentMatrix(c);
}

std::array<double, 4> moment_eigenvalues(const MomentMatrix &m) {
    CMatrix op(4);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            op(i, j) = m(i, j);
        }
    }
    const EigenDecomposition e = eig_hermitian(HermitianOp(op));
    return {e.values[0], e.values[1], e.values[2], e.values[3]};
}

double lgi_value(const CorrelationTriple &c) { return c.c12 + c.c23 - c.c13; }

double positivity_threshold(const std::array<Axis, 3> &axes,
                            const DensityOp &rho) {
    constexpr double kPsdTol = -1e-12;
    if (min_moment_eigenvalue(axes, rho, 1.0) >= kPsdTol) {
        return 1.0;
    }
    double lo = 0.0;
    double hi = 1.0;
    while (hi - lo > 1e-6) {
        const double mid = 0.5 * (lo + hi);
        (min_moment_eigenvalue(axes, rho, mid) >= kPsdTol ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

} // namespace qpovm
