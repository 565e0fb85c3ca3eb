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

#include <cmath>

#include <doctest.h>

#include "qpovm/error.hpp"
#include "qpovm/povm.hpp"
#include "test_util.hpp"

using namespace qpovm;

namespace {

DensityOp ket0() { return DensityOp::pure({1.0, 0.0}); }

DensityOp random_state(testing::Gen &gen) {
    const HermitianOp p = gen.psd(2);
    return DensityOp((1.0 / p.trace()) * p);
}

template <class F> ErrorKind kind_of(F &&f) {
    try {
        f();
    } catch (const Error &e) {
        return e.kind();
    }
    FAIL("expected qpovm::Error");
    return ErrorKind::InternalDefect;
}

} // namespace

TEST_SUITE("povm") {

TEST_CASE("Axis requires unit length") {
    CHECK_NOTHROW(Axis({0.6, 0.8, 0.0}));
    CHECK(kind_of([] { (void)Axis({1.0, 1.0, 0.0}); }) == ErrorKind::InvalidAxis);
    CHECK(kind_of([] { (void)Axis::normalized({0.0, 0.0, 0.0}); }) ==
          ErrorKind::InvalidAxis);
    const Axis a = Axis::normalized({3.0, 0.0, 4.0});
    CHECK(a[0] == doctest::Approx(0.6));
    CHECK(a[2] == doctest::Approx(0.8));
}

TEST_CASE("sharp_spin") {
    SUBCASE("z eigenprojectors") {
        const Povm p = sharp_spin(Axis::z());
        CHECK(max_abs_diff(p.effect(0).matrix(), HermitianOp::diag({1, 0}).matrix()) == 0.0);
        CHECK(max_abs_diff(p.effect(1).matrix(), HermitianOp::diag({0, 1}).matrix()) == 0.0);
        CHECK(p.values() == std::vector<double>{1.0, -1.0});
    }
    SUBCASE("x has off-diagonal one half") {
        const Povm p = sharp_spin(Axis::x());
        CHECK(p.effect(0)(0, 1).real() == doctest::Approx(0.5));
        CHECK(p.effect(1)(0, 1).real() == doctest::Approx(-0.5));
        CHECK(p.effect(0)(0, 0).real() == doctest::Approx(0.5));
    }
    SUBCASE("orthogonal rank-1 projectors on random axes") {
        testing::Gen gen(1);
        for (int trial = 0; trial < 50; ++trial) {
            const Povm p = sharp_spin(Axis(gen.unit_vector()));
            CHECK((p.effect(0).matrix() * p.effect(1).matrix()).max_abs() < 1e-15);
            CHECK(max_abs_diff(p.effect(0).matrix() * p.effect(0).matrix(),
                               p.effect(0).matrix()) < 1e-15);
            CHECK(p.effect(0).trace() == doctest::Approx(1.0));
        }
    }
}

TEST_CASE("noisy_spin") {
    SUBCASE("eta = 1 is sharp") {
        const Povm a = noisy_spin(Axis::z(), 1.0);
        const Povm b = sharp_spin(Axis::z());
        for (std::size_t i = 0; i < 2; ++i) {
            CHECK(max_abs_diff(a.effect(i).matrix(), b.effect(i).matrix()) == 0.0);
        }
    }
    SUBCASE("eta = 0 is trivial") {
        const Povm p = noisy_spin(Axis::x(), 0.0);
        for (std::size_t i = 0; i < 2; ++i) {
            CHECK(max_abs_diff(p.effect(i).matrix(),
                               (0.5 * HermitianOp::identity(2)).matrix()) == 0.0);
        }
    }
    SUBCASE("spectrum at eta = 0.5") {
        const Povm p = noisy_spin(Axis::x(), 0.5);
        for (std::size_t i = 0; i < 2; ++i) {
            const auto e = eig_hermitian(p.effect(i));
            CHECK(e.values[0] == doctest::Approx(0.25));
            CHECK(e.values[1] == doctest::Approx(0.75));
        }
    }
    SUBCASE("eta outside [0, 1]") {
        CHECK(kind_of([] { (void)noisy_spin(Axis::x(), 1.01); }) == ErrorKind::EtaOutOfRange);
        CHECK(kind_of([] { (void)noisy_spin(Axis::x(), -0.1); }) == ErrorKind::EtaOutOfRange);
        CHECK(kind_of([] { (void)noisy_spin(Axis::x(), std::nan("")); }) ==
              ErrorKind::EtaOutOfRange);
    }
    SUBCASE("affine in eta") {
        testing::Gen gen(2);
        const HermitianOp half = 0.5 * HermitianOp::identity(2);
        for (int trial = 0; trial < 100; ++trial) {
            const Axis axis(gen.unit_vector());
            const double eta = gen.uniform();
            const Povm noisy = noisy_spin(axis, eta);
            const Povm sharp = sharp_spin(axis);
            for (std::size_t i = 0; i < 2; ++i) {
                const HermitianOp mixed = eta * sharp.effect(i) + (1.0 - eta) * half;
                CHECK(max_abs_diff(noisy.effect(i).matrix(), mixed.matrix()) <= 1e-15);
            }
        }
    }
}

TEST_CASE("Povm construction") {
    const HermitianOp half = 0.5 * HermitianOp::identity(2);
    SUBCASE("orders outcomes by descending value") {
        const Povm p({{7, -1.0, half}, {3, 1.0, half}});
        CHECK(p.outcomes()[0].label == 3);
        CHECK(p.outcomes()[1].label == 7);
    }
    SUBCASE("rejects duplicate labels") {
        CHECK(kind_of([&] { (void)Povm({{1, 1.0, half}, {1, -1.0, half}}); }) ==
              ErrorKind::InvalidPovm);
    }
    SUBCASE("rejects mixed dimensions") {
        CHECK(kind_of([&] {
                  (void)Povm({{1, 1.0, half}, {2, -1.0, HermitianOp::identity(4)}});
              }) == ErrorKind::DimMismatch);
    }
    SUBCASE("Effect rejects spectra outside [0, 1]") {
        CHECK(kind_of([] { (void)Effect(HermitianOp::diag({1.2, 0.0})); }) ==
              ErrorKind::InvalidEffect);
        CHECK_NOTHROW(Effect(HermitianOp::diag({1.0 + 5e-11, -5e-11})));
    }
}

TEST_CASE("validate") {
    CHECK(validate(sharp_spin(Axis::z())).ok);
    CHECK(validate(noisy_spin(Axis::x(), 0.7)).ok);

    const Povm bad({{1, 1.0, HermitianOp::diag({1.2, 0.0})},
                    {-1, -1.0, HermitianOp::diag({-0.2, 1.0})}});
    const ValidationReport r = validate(bad);
    CHECK_FALSE(r.ok);
    CHECK(r.max_negativity == doctest::Approx(0.2));
    CHECK(r.completeness_residual == doctest::Approx(0.0));

    const Povm incomplete({{1, 1.0, HermitianOp::diag({0.5, 0.5})},
                           {-1, -1.0, HermitianOp::diag({0.5, 0.4})}});
    const ValidationReport r2 = validate(incomplete);
    CHECK_FALSE(r2.ok);
    CHECK(r2.completeness_residual == doctest::Approx(0.1));
}

TEST_CASE("outcome_distribution") {
    const DensityOp mixed = DensityOp::maximally_mixed(2);
    for (double eta : {0.0, 0.3, 1.0}) {
        const auto p = outcome_distribution(mixed, noisy_spin(Axis::z(), eta));
        CHECK(p[0] == doctest::Approx(0.5));
        CHECK(p[1] == doctest::Approx(0.5));
    }
    const auto sharp = outcome_distribution(ket0(), sharp_spin(Axis::z()));
    CHECK(sharp[0] == 1.0);
    CHECK(sharp[1] == 0.0);

    // ⟨0|½(𝟙 ± 0.6σ_z)|0⟩ = ½(1 ± 0.6)
    const auto noisy = outcome_distribution(ket0(), noisy_spin(Axis::z(), 0.6));
    CHECK(noisy[0] == doctest::Approx(0.8));
    CHECK(noisy[1] == doctest::Approx(0.2));

    CHECK(kind_of([&] {
              (void)outcome_distribution(DensityOp::maximally_mixed(4),
                                         sharp_spin(Axis::z()));
          }) == ErrorKind::DimMismatch);
}

TEST_CASE("outcome_distribution of noisy spin is shrunk sharp distribution") {
    testing::Gen gen(3);
    for (int trial = 0; trial < 200; ++trial) {
        const DensityOp rho = random_state(gen);
        const Axis axis(gen.unit_vector());
        const double eta = gen.uniform();
        const auto sharp = outcome_distribution(rho, sharp_spin(axis));
        const auto noisy = outcome_distribution(rho, noisy_spin(axis, eta));
        double total = 0.0;
        for (std::size_t i = 0; i < 2; ++i) {
            CHECK(std::abs(noisy[i] - (eta * sharp[i] + 0.5 * (1.0 - eta))) <= 1e-12);
            CHECK(noisy[i] >= 0.0);
            total += noisy[i];
        }
        CHECK(std::abs(total - 1.0) <= 1e-10);
    }
}

TEST_CASE("probability clamps float noise only") {
    const HermitianOp rho = ket0().op();
    CHECK(probability(rho, HermitianOp::diag({-5e-13, 0.0})) == 0.0);
    CHECK(kind_of([&] { (void)probability(rho, HermitianOp::diag({-1e-6, 0.0})); }) ==
          ErrorKind::NegativeProbability);
}

TEST_CASE("expectation") {
    testing::Gen gen(4);
    for (int trial = 0; trial < 20; ++trial) {
        const double eta = gen.uniform();
        CHECK(std::abs(expectation(DensityOp::maximally_mixed(2),
                                   noisy_spin(Axis(gen.unit_vector()), eta))) < 1e-15);
        CHECK(expectation(ket0(), noisy_spin(Axis::z(), eta)) == doctest::Approx(eta));
    }
    CHECK(std::abs(expectation(ket0(), sharp_spin(Axis::x()))) < 1e-15);
}

TEST_CASE("luders_update") {
    SUBCASE("maximally mixed input yields normalized effect") {
        const Povm p = noisy_spin(Axis::x(), 0.6);
        const LudersBranch b = luders_update(DensityOp::maximally_mixed(2), Effect(p.effect(0)));
        CHECK(b.prob == doctest::Approx(0.5));
        // √E (𝟙/2) √E / p = E / (2p)
        const HermitianOp expected = (1.0 / (2.0 * b.prob)) * p.effect(0);
        CHECK(max_abs_diff(b.post_state.op().matrix(), expected.matrix()) < 1e-12);
    }
    SUBCASE("eigenstate is a fixed point") {
        const LudersBranch b = luders_update(ket0(), Effect(sharp_spin(Axis::z()).effect(0)));
        CHECK(b.prob == doctest::Approx(1.0));
        CHECK(max_abs_diff(b.post_state.op().matrix(), ket0().op().matrix()) < 1e-12);
    }
    SUBCASE("orthogonal branch") {
        CHECK(kind_of([] {
                  (void)luders_update(ket0(), Effect(sharp_spin(Axis::z()).effect(1)));
              }) == ErrorKind::ZeroProbabilityBranch);
    }
    SUBCASE("post states are valid and branches recombine") {
        testing::Gen gen(5);
        for (int trial = 0; trial < 100; ++trial) {
            const DensityOp rho = random_state(gen);
            const Povm p = noisy_spin(Axis(gen.unit_vector()), gen.uniform());
            CMatrix sum(2);
            for (std::size_t i = 0; i < p.size(); ++i) {
                const LudersBranch b = luders_update(rho, Effect(p.effect(i)));
                CHECK(b.post_state.op().trace() == doctest::Approx(1.0));
                CHECK(min_eigenvalue(b.post_state.op()) >= -1e-10);
                sum += b.post_state.op().matrix() * Complex(b.prob);
            }
            CHECK(max_abs_diff(sum, luders_channel(rho, p).matrix()) < 1e-12);
            CHECK(std::abs(luders_channel(rho, p).trace() - 1.0) < 1e-12);
        }
    }
}

} // TEST_SUITE
