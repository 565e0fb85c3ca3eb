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

#include <algorithm>
#include <cmath>

#include <doctest.h>

#include "qpovm/compat.hpp"
#include "qpovm/error.hpp"
#include "qpovm/moments.hpp"
#include "test_util.hpp"

using namespace qpovm;

namespace {

std::array<double, 4> closed_form_eigenvalues(const CorrelationTriple &c) {
    std::array<double, 4> v{1 + c.c12 - c.c23 - c.c13, 1 - c.c12 + c.c23 - c.c13,
                            1 - c.c12 - c.c23 + c.c13, 1 + c.c12 + c.c23 + c.c13};
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

TEST_SUITE("moments") {

TEST_CASE("trine_axes") {
    const auto t = trine_axes();
    Vec3 sum{};
    for (std::size_t k = 0; k < 3; ++k) {
        CHECK(norm(t[k].vec()) == doctest::Approx(1.0));
        for (std::size_t c = 0; c < 3; ++c) {
            sum[c] += t[k][c];
        }
        CHECK(t[k][2] == 0.0);
    }
    CHECK(std::abs(dot(t[0].vec(), t[1].vec()) + 0.5) < 1e-12);
    CHECK(std::abs(dot(t[1].vec(), t[2].vec()) + 0.5) < 1e-12);
    CHECK(std::abs(dot(t[0].vec(), t[2].vec()) + 0.5) < 1e-12);
    CHECK(norm(sum) < 1e-15);
}

TEST_CASE("sequential_pair_table on the maximally mixed state") {
    const auto t = trine_axes();
    const DensityOp mixed = DensityOp::maximally_mixed(2);
    const std::array<std::pair<std::size_t, std::size_t>, 3> pairs{{{0, 1}, {1, 2}, {0, 2}}};
    for (double eta : {0.0, 0.25, 0.5, 2.0 / 3.0, 1.0}) {
        for (auto [k, l] : pairs) {
            const JointProbTable table = sequential_pair_table(mixed, t[k], t[l], eta);
            double total = 0.0;
            for (std::size_t i = 0; i < 2; ++i) {
                for (std::size_t j = 0; j < 2; ++j) {
                    const double xx = table.values_a()[i] * table.values_b()[j];
                    CHECK(table(i, j) >= 0.0);
                    CHECK(std::abs(table(i, j) - 0.25 * (1.0 - 0.5 * eta * xx)) <= 1e-12);
                    total += table(i, j);
                }
                // conditional on the first outcome: ½(1 − (η/2) x_k x_l)
                const double pk = table(i, 0) + table(i, 1);
                CHECK(pk == doctest::Approx(0.5));
                CHECK(table(i, 0) / pk ==
                      doctest::Approx(0.5 * (1.0 - 0.5 * eta * table.values_a()[i])));
            }
            CHECK(std::abs(total - 1.0) <= 1e-12);
            CHECK(std::abs(pair_correlation(table) + 0.5 * eta) <= 1e-12);
        }
    }
}

TEST_CASE("sequential_pair_table for arbitrary axes and states") {
    testing::Gen gen(40);
    for (int trial = 0; trial < 100; ++trial) {
        const Vec3 n = gen.unit_vector();
        const Vec3 m = gen.unit_vector();
        const double eta = gen.uniform();
        // maximally mixed: p(x, y) = ¼(1 + η x y n·m)
        const JointProbTable t =
            sequential_pair_table(DensityOp::maximally_mixed(2), Axis(n), Axis(m), eta);
        for (std::size_t i = 0; i < 2; ++i) {
            for (std::size_t j = 0; j < 2; ++j) {
                const double xy = t.values_a()[i] * t.values_b()[j];
                CHECK(std::abs(t(i, j) - 0.25 * (1.0 + eta * xy * dot(n, m))) <= 1e-12);
            }
        }
        // First-measurement marginal is the unsharp distribution.
        const HermitianOp p = gen.psd(2);
        const DensityOp rho((1.0 / p.trace()) * p);
        const JointProbTable u = sequential_pair_table(rho, Axis(n), Axis(m), eta);
        const auto first = outcome_distribution(rho, noisy_spin(Axis(n), eta));
        const auto ma = u.marginal_a();
        CHECK(std::abs(ma[0] - first[0]) <= 1e-12);
        CHECK(std::abs(ma[1] - first[1]) <= 1e-12);
    }
}

TEST_CASE("sequential_pair_table edge cases") {
    const auto t = trine_axes();
    // A sharp first measurement on its own eigenstate leaves one empty row.
    const DensityOp up = DensityOp::pure({1.0, 0.0});
    const JointProbTable table = sequential_pair_table(up, Axis::z(), Axis::x(), 1.0);
    CHECK(table(1, 0) == 0.0);
    CHECK(table(1, 1) == 0.0);
    CHECK(table(0, 0) == doctest::Approx(0.5));
    CHECK_THROWS_AS((void)sequential_pair_table(DensityOp::maximally_mixed(2), t[0], t[1], 1.5),
                    Error);
    CHECK_THROWS_AS((void)sequential_pair_table(DensityOp::maximally_mixed(4), t[0], t[1], 0.5),
                    Error);
}

TEST_CASE("pair_correlation") {
    const JointProbTable uniform({1, -1}, {1, -1}, {{0.25, 0.25}, {0.25, 0.25}});
    CHECK(pair_correlation(uniform) == 0.0);
    const JointProbTable same({1, -1}, {1, -1}, {{0.5, 0.0}, {0.0, 0.5}});
    CHECK(pair_correlation(same) == 1.0);
}

TEST_CASE("CorrelationTriple range") {
    CHECK_THROWS_AS(CorrelationTriple(1.2, 0.0, 0.0), Error);
    CHECK_THROWS_AS(CorrelationTriple(0.0, 0.0, -1.0001), Error);
    CHECK_NOTHROW(CorrelationTriple(1.0, -1.0, 0.0));
}

TEST_CASE("build_moment_matrix") {
    SUBCASE("uniform negative triple") {
        const double eta = 0.4;
        const MomentMatrix m = build_moment_matrix({-eta / 2, -eta / 2, -eta / 2});
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) {
                CHECK(m(i, j) == (i == j ? 1.0 : -eta / 2));
            }
        }
    }
    SUBCASE("zero and one") {
        const MomentMatrix z = build_moment_matrix({0, 0, 0});
        const MomentMatrix o = build_moment_matrix({1, 1, 1});
        for (std::size_t i = 0; i < 4; ++i) {
            for (std::size_t j = 0; j < 4; ++j) {
                CHECK(z(i, j) == (i == j ? 1.0 : 0.0));
                CHECK(o(i, j) == 1.0);
            }
        }
    }
    SUBCASE("layout over (1, x1x2, x2x3, x1x3)") {
        const MomentMatrix m = build_moment_matrix({0.1, 0.2, 0.3});
        // ⟨1·x1x2⟩, ⟨1·x2x3⟩, ⟨1·x1x3⟩ on the first row
        CHECK(m(0, 1) == 0.1);
        CHECK(m(0, 2) == 0.2);
        CHECK(m(0, 3) == 0.3);
        // x1x2·x2x3 = x1x3, x1x2·x1x3 = x2x3, x2x3·x1x3 = x1x2
        CHECK(m(1, 2) == 0.3);
        CHECK(m(1, 3) == 0.2);
        CHECK(m(2, 3) == 0.1);
        for (std::size_t i = 0; i < 4; ++i) {
            CHECK(m(i, i) == 1.0);
            for (std::size_t j = 0; j < 4; ++j) {
                CHECK(m(i, j) == m(j, i));
            }
        }
    }
}

TEST_CASE("moment_eigenvalues") {
    SUBCASE("trine closed forms") {
        for (int k = 0; k <= 20; ++k) {
            const double eta = 0.05 * k;
            const auto ev = moment_eigenvalues(build_moment_matrix({-eta / 2, -eta / 2, -eta / 2}));
            CHECK(std::abs(ev[0] - (2.0 - 3.0 * eta) / 2.0) <= 1e-12);
            for (std::size_t i = 1; i < 4; ++i) {
                CHECK(std::abs(ev[i] - (2.0 + eta) / 2.0) <= 1e-12);
            }
        }
        const auto boundary =
            moment_eigenvalues(build_moment_matrix({-1.0 / 3, -1.0 / 3, -1.0 / 3}));
        CHECK(std::abs(boundary[0]) <= 1e-12);
    }
    SUBCASE("identity") {
        for (double v : moment_eigenvalues(build_moment_matrix({0, 0, 0}))) {
            CHECK(v == doctest::Approx(1.0));
        }
    }
    SUBCASE("random triples match sign patterns") {
        testing::Gen gen(41);
        for (int trial = 0; trial < 500; ++trial) {
            const CorrelationTriple c(gen.uniform(-1, 1), gen.uniform(-1, 1), gen.uniform(-1, 1));
            const auto numeric = moment_eigenvalues(build_moment_matrix(c));
            const auto expected = closed_form_eigenvalues(c);
            for (std::size_t i = 0; i < 4; ++i) {
                CHECK(std::abs(numeric[i] - expected[i]) <= 1e-12);
            }
        }
    }
}

TEST_CASE("simulated trine correlations feed the moment matrix") {
    const DensityOp mixed = DensityOp::maximally_mixed(2);
    for (double eta : {0.0, 0.3, 0.5, 2.0 / 3.0, 0.8, 1.0}) {
        const CorrelationTriple c = sequential_correlations(mixed, trine_axes(), eta);
        CHECK(std::abs(c.c12 + eta / 2) <= 1e-12);
        CHECK(std::abs(c.c23 + eta / 2) <= 1e-12);
        CHECK(std::abs(c.c13 + eta / 2) <= 1e-12);
        const auto ev = moment_eigenvalues(build_moment_matrix(c));
        CHECK(std::abs(ev[0] - (2.0 - 3.0 * eta) / 2.0) <= 1e-12);
        CHECK(std::abs(ev[3] - (2.0 + eta) / 2.0) <= 1e-12);
    }
}

TEST_CASE("lgi_value") {
    CHECK(lgi_value({0.5, 0.5, -0.5}) == 1.5);
    CHECK(lgi_value({0, 0, 0}) == 0.0);
    for (int k = 0; k <= 10; ++k) {
        const double eta = 0.1 * k;
        const double v = lgi_value({-eta / 2, -eta / 2, -eta / 2});
        CHECK(v == doctest::Approx(-eta / 2));
        CHECK(v <= 1.0);
    }
    // Any triple with a PSD moment matrix obeys the inequality.
    testing::Gen gen(42);
    for (int trial = 0; trial < 500; ++trial) {
        const CorrelationTriple c(gen.uniform(-1, 1), gen.uniform(-1, 1), gen.uniform(-1, 1));
        if (closed_form_eigenvalues(c)[0] >= 0.0) {
            CHECK(lgi_value(c) <= 1.0 + 1e-12);
        }
    }
}

TEST_CASE("positivity_threshold") {
    const double eta = positivity_threshold(trine_axes(), DensityOp::maximally_mixed(2));
    CHECK(std::abs(eta - 2.0 / 3.0) <= 1e-4);
    CHECK(std::abs((2.0 - 3.0 * eta) / 2.0) <= 1e-4);
    const auto axes = trine_axes();
    const double compat =
        threshold({axes.begin(), axes.end()}, ThresholdMode::Full).eta;
    CHECK(std::abs(eta - compat) <= 5e-3);
}

} // TEST_SUITE
