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

// qpovm command-line front end.
//
// Exit codes: 0 ok, 2 usage / invalid input, 3 indeterminate solver
// verdict, 4 tolerance failure in repro-all.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qpovm/commands.hpp"
#include "qpovm/error.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitIndeterminate = 3;
constexpr int kExitToleranceFailure = 4;

void add_solver_flags(CLI::App *cmd, qpovm::SolverConfig &cfg) {
    cmd->add_option("--max-iter", cfg.max_iter, "Dykstra iteration cap")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--tol-feas", cfg.tol_feas, "residual below which a problem is feasible")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--tol-infeas", cfg.tol_infeas,
                    "stalled residual above which a problem is infeasible")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

void add_sampling_flags(CLI::App *cmd, qpovm::SamplingOptions &s) {
    cmd->add_option("--samples", s.samples, "Monte Carlo sample count (0 = off)")
        ->capture_default_str();
    cmd->add_option("--seed", s.seed, "PRNG seed")->capture_default_str();
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Joint measurability, entropic uncertainty and moment-matrix "
                 "calculations for qubit POVMs"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(qpovm::kVersion));

    std::string format = "json";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();

    qpovm::ThresholdsOptions th;
    std::string th_set;
    std::string th_axes;
    std::string th_mode = "full";
    auto *thresholds = app.add_subcommand("thresholds", "bisect the joint-measurability threshold");
    thresholds->add_option("--set", th_set,
                           "pair-xz | triple-xyz | trine-pair | trine-triple");
    thresholds->add_option("--axes", th_axes, "custom axes \"x,y,z;x,y,z[;x,y,z]\"");
    thresholds->add_option("--mode", th_mode, "full | pairwise (custom axes)")
        ->check(CLI::IsMember({"full", "pairwise"}))
        ->capture_default_str();
    thresholds->add_option("--gap", th.gap, "bisection bracket width")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_solver_flags(thresholds, th.solver);

    qpovm::GameOptions game;
    double game_eta = 0.0;
    std::string game_sweep;
    auto *game_cmd = app.add_subcommand("game", "entropic uncertainty game on a singlet");
    auto *game_eta_opt = game_cmd->add_option("--eta", game_eta, "Bob's unsharpness");
    auto *game_sweep_opt = game_cmd->add_option("--sweep", game_sweep, "eta grid a:b:step");
    add_sampling_flags(game_cmd, game.sampling);

    qpovm::MomentsOptions moments;
    auto *moments_cmd = app.add_subcommand("moments", "trine moment matrix and Leggett-Garg value");
    moments_cmd->add_option("--eta", moments.eta, "unsharpness of the first measurement")
        ->required();
    add_sampling_flags(moments_cmd, moments.sampling);

    qpovm::CompatOptions compat;
    std::string compat_axes;
    auto *compat_cmd = app.add_subcommand("compat", "decide joint measurability at one eta");
    compat_cmd->add_option("--axes", compat_axes, "\"x,y,z;x,y,z[;x,y,z]\"")->required();
    compat_cmd->add_option("--eta", compat.eta, "unsharpness")->required();
    add_solver_flags(compat_cmd, compat.solver);

    qpovm::ReproOptions repro;
    auto *repro_cmd = app.add_subcommand("repro-all", "recompute every reproduction number");
    repro_cmd->add_option("--samples", repro.samples, "Monte Carlo sample count")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    repro_cmd->add_option("--seed", repro.seed, "PRNG seed")->capture_default_str();
    add_solver_flags(repro_cmd, repro.solver);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    qpovm::Report report;
    int exit_code = 0;
    try {
        if (thresholds->parsed()) {
            if (!th_set.empty() == !th_axes.empty()) {
                std::cerr << "thresholds: give exactly one of --set or --axes\n";
                return kExitUsage;
            }
            if (!th_set.empty()) {
                const auto s = qpovm::named_axis_set(th_set);
                if (!s) {
                    std::cerr << "thresholds: unknown set '" << th_set << "'\n";
                    return kExitUsage;
                }
                th.set_name = th_set;
                th.axes = s->axes;
                th.mode = s->mode;
            } else {
                th.set_name = "custom";
                th.axes = qpovm::parse_axes(th_axes);
                th.mode = th_mode == "full" ? qpovm::ThresholdMode::Full
                                            : qpovm::ThresholdMode::Pairwise;
            }
            report = qpovm::cmd_thresholds(th);
        } else if (game_cmd->parsed()) {
            if (game_eta_opt->count() > 0) {
                game.eta = game_eta;
            }
            if (game_sweep_opt->count() > 0) {
                game.sweep = qpovm::parse_sweep(game_sweep);
            }
            report = qpovm::cmd_game(game);
        } else if (moments_cmd->parsed()) {
            report = qpovm::cmd_moments(moments);
        } else if (compat_cmd->parsed()) {
            compat.axes = qpovm::parse_axes(compat_axes);
            report = qpovm::cmd_compat(compat);
            if (report.results["verdict"] == "Indeterminate") {
                exit_code = kExitIndeterminate;
            }
        } else if (repro_cmd->parsed()) {
            report = qpovm::cmd_repro_all(repro);
            if (!report.results["all_passed"].get<bool>()) {
                exit_code = kExitToleranceFailure;
            }
        }
    } catch (const qpovm::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    std::cout << (format == "csv" ? report.to_csv() : report.to_json_string());
    return exit_code;
}
