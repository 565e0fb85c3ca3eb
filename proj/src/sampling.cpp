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

#include "qpovm/sampling.hpp"

#include <cmath>

#include "qpovm/error.hpp"

namespace qpovm {

namespace {

constexpr std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

std::uint64_t splitmix64(std::uint64_t &x) {
    std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

Xoshiro256ss::Xoshiro256ss(std::uint64_t seed) {
    for (std::uint64_t &w : s_) {
        w = splitmix64(seed);
    }
}

Xoshiro256ss Xoshiro256ss::stream(std::uint64_t seed, std::uint64_t index) {
    Xoshiro256ss g(seed);
    for (std::uint64_t k = 0; k < index; ++k) {
        g.jump();
    }
    return g;
}

std::uint64_t Xoshiro256ss::next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
}

double Xoshiro256ss::uniform() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

void Xoshiro256ss::jump() {
    static constexpr std::array<std::uint64_t, 4> kJump{
        0x180ec6d33cfd0abaULL, 0xd5a61266f0c9392cULL, 0xa9582618e03fc9aaULL,
        0x39abdc4529b1661cULL};
    std::array<std::uint64_t, 4> acc{};
    for (std::uint64_t word : kJump) {
        for (int b = 0; b < 64; ++b) {
            if ((word & (std::uint64_t{1} << b)) != 0U) {
                for (std::size_t i = 0; i < 4; ++i) {
                    acc[i] ^= s_[i];
                }
            }
            next();
        }
    }
    s_ = acc;
}

SampleRun sample_table(const JointProbTable &t, std::uint64_t n,
                       std::uint64_t seed, std::uint64_t stream) {
    if (n < 1) {
        throw Error(ErrorKind::BadN, "sample count must be at least 1");
    }
    const std::size_t cells = t.rows() * t.cols();
    std::vector<double> cdf(cells);
    std::size_t last_nonzero = 0;
    double acc = 0.0;
    for (std::size_t k = 0; k < cells; ++k) {
        const double p = t(k / t.cols(), k % t.cols());
        acc += p;
        cdf[k] = acc;
        if (p > 0.0) {
            last_nonzero = k;
        }
    }

    SampleRun run{seed, n, t.values_a(), t.values_b(),
                  std::vector<std::vector<std::uint64_t>>(
                      t.rows(), std::vector<std::uint64_t>(t.cols(), 0))};
    Xoshiro256ss rng = Xoshiro256ss::stream(seed, stream);
    for (std::uint64_t draw = 0; draw < n; ++draw) {
        const double u = rng.uniform();
        std::size_t k = 0;
        while (k < cells && !(u < cdf[k])) {
            ++k;
        }
        if (k == cells) {
            k = last_nonzero;
        }
        ++run.counts[k / t.cols()][k % t.cols()];
    }
    return run;
}

double empirical_correlation(const SampleRun &run) {
    double s = 0.0;
    for (std::size_t i = 0; i < run.counts.size(); ++i) {
        for (std::size_t j = 0; j < run.counts[i].size(); ++j) {
            s += static_cast<double>(run.counts[i][j]) * run.values_a[i] *
                 run.values_b[j];
        }
    }
    return s / static_cast<double>(run.n);
}

double empirical_conditional_entropy(const SampleRun &run) {
    const auto n = static_cast<double>(run.n);
    const std::size_t cols = run.values_b.size();
    std::vector<double> col_total(cols, 0.0);
    for (const auto &row : run.counts) {
        for (std::size_t j = 0; j < cols; ++j) {
            col_total[j] += static_cast<double>(row[j]);
        }
    }
    double h = 0.0;
    for (const auto &row : run.counts) {
        for (std::size_t j = 0; j < cols; ++j) {
            const auto c = static_cast<double>(row[j]);
            if (c > 0.0) {
                h -= (c / n) * std::log2(c / col_total[j]);
            }
        }
    }
    return h;
}

} // namespace qpovm
