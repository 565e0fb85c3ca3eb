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
 * The command implementations behind the qpovm CLI. Each returns a Report;
 * flag parsing and exit-code mapping live in tools/qpovm.cpp.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qpovm/compat.hpp"
#include "qpovm/report.hpp"

namespace qpovm {

/// "x1,y1,z1;x2,y2,z2[;...]" → normalized axes. Throws InvalidAxis.
[[nodiscard]] std::vector<Axis> parse_axes(const std::string &text);

/// Named axis sets: pair-xz, triple-xyz, trine-pair, trine-triple.
struct AxisSet {
    std::vector<Axis> axes;
    ThresholdMode mode;
};
[[nodiscard]] std::optional<AxisSet> named_axis_set(const std::string &name);

struct ThresholdsOptions {
    std::string set_name; ///< named set, or "custom"
    std::vector<Axis> axes;
    ThresholdMode mode = ThresholdMode::Full;
    SolverConfig solver;
    double gap = 1e-3;
};
[[nodiscard]] Report cmd_thresholds(const ThresholdsOptions &opt);

struct SamplingOptions {
    std::uint64_t samples = 0; ///< 0 disables sampling
    std::uint64_t seed = 0;
};

struct EtaSweep {
    double from;
    double to;
    double step;
};
/// "a:b:step"; throws std::invalid_argument on malformed input.
[[nodiscard]] EtaSweep parse_sweep(const std::string &text);

struct GameOptions {
    std::optional<double> eta;
    std::optional<EtaSweep> sweep;
    SamplingOptions sampling;
};
[[nodiscard]] Report cmd_game(const GameOptions &opt);

struct MomentsOptions {
    double eta = 0.0;
    SamplingOptions sampling;
};
[[nodiscard]] Report cmd_moments(const MomentsOptions &opt);

struct CompatOptions {
    std::vector<Axis> axes;
    double eta = 0.0;
    SolverConfig solver;
};
[[nodiscard]] Report cmd_compat(const CompatOptions &opt);

struct ReproOptions {
    SolverConfig solver;
    std::uint64_t samples = 1000000;
    std::uint64_t seed = 20150901;
};
/// Recomputes every reproduction number; results.all_passed summarizes.
[[nodiscard]] Report cmd_repro_all(const ReproOptions &opt);

} // namespace qpovm
