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

#include "qpovm/commands.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "qpovm/error.hpp"
#include "qpovm/moments.hpp"
#include "qpovm/sampling.hpp"
#include "qpovm/states.hpp"
#include "qpovm/uncertainty.hpp"

namespace qpovm {

namespace {

Json axes_json(const std::vector<Axis> &axes) {
    Json a = Json::array();
    for (const Axis &ax : axes) {
        a.push_back({ax[0], ax[1], ax[2]});
    }
    return a;
}

Json solver_json(const SolverConfig &cfg) {
    return {{"max_iter", cfg.max_iter},
            {"tol_feas", cfg.tol_feas},
            {"tol_infeas", cfg.tol_infeas}};
}

const char *mode_name(ThresholdMode m) {
    return m == ThresholdMode::Full ? "full" : "pairwise";
}

void check_eta(double eta) {
    if (!(eta >= 0.0 && eta <= 1.0)) {
        throw Error(ErrorKind::EtaOutOfRange, "eta must lie in [0, 1]");
    }
}

/// Standard deviation of the mean of a ±1 variable with mean c.
double correlation_sigma(double c, std::uint64_t n) {
    return std::sqrt(std::max(1.0 - c * c, 0.0) / static_cast<double>(n));
}

Json game_json(const GameReport &g) {
    return {{"eta", g.eta},
            {"lhs", g.lhs},
            {"closed_form", g.closed_form},
            {"bound_no_memory", g.bound_no_memory},
            {"bound_with_memory", g.bound_with_memory},
            {"steering_violated", g.steering_violated}};
}

JointProbTable game_table(double eta, const Axis &axis) {
    return joint_table(singlet(), sharp_spin(axis), noisy_spin(axis, eta));
}

Json criterion(int id, const std::string &name, bool passed, Json detail) {
    Json c = {{"id", id}, {"name", name}, {"passed", passed}};
    c["detail"] = std::move(detail);
    return c;
}

} // namespace

std::vector<Axis> parse_axes(const std::string &text) {
    std::vector<Axis> axes;
    std::stringstream groups(text);
    std::string group;
    while (std::getline(groups, group, ';')) {
        if (group.find_first_not_of(" \t") == std::string::npos) {
            continue;
        }
        std::stringstream parts(group);
        std::string part;
        std::vector<double> v;
        while (std::getline(parts, part, ',')) {
            std::size_t used = 0;
            double x = 0.0;
            try {
                x = std::stod(part, &used);
            } catch (const std::exception &) {
                throw Error(ErrorKind::InvalidAxis, "bad number '" + part + "'");
            }
            if (part.find_first_not_of(" \t", used) != std::string::npos) {
                throw Error(ErrorKind::InvalidAxis, "bad number '" + part + "'");
            }
            v.push_back(x);
        }
        if (v.size() != 3) {
            throw Error(ErrorKind::InvalidAxis,
                        "axis '" + group + "' needs three components");
        }
        axes.push_back(Axis::normalized({v[0], v[1], v[2]}));
    }
    return axes;
}

std::optional<AxisSet> named_axis_set(const std::string &name) {
    const auto trine = trine_axes();
    const std::vector<Axis> tv(trine.begin(), trine.end());
    if (name == "pair-xz") {
        return AxisSet{{Axis::x(), Axis::z()}, ThresholdMode::Full};
    }
    if (name == "triple-xyz") {
        return AxisSet{{Axis::x(), Axis::y(), Axis::z()}, ThresholdMode::Full};
    }
    if (name == "trine-pair") {
        return AxisSet{tv, ThresholdMode::Pairwise};
    }
    if (name == "trine-triple") {
        return AxisSet{tv, ThresholdMode::Full};
    }
    return std::nullopt;
}

Report cmd_thresholds(const ThresholdsOptions &opt) {
    Report r;
    r.command = "thresholds";
    r.inputs["set"] = opt.set_name;
    r.inputs["mode"] = mode_name(opt.mode);
    r.inputs["axes"] = axes_json(opt.axes);
    r.inputs["solver"] = solver_json(opt.solver);
    r.inputs["gap"] = opt.gap;

    const ThresholdResult t = threshold(opt.axes, opt.mode, opt.solver, opt.gap);
    r.results["eta_star"] = t.eta;
    r.results["probe_count"] = t.probes.size();
    Json probes = Json::array();
    for (const ThresholdProbe &p : t.probes) {
        probes.push_back({{"eta", p.eta},
                          {"feasible", p.feasible},
                          {"residual", p.residual},
                          {"iterations", p.iterations}});
    }
    r.results["probes"] = std::move(probes);
    return r;
}

EtaSweep parse_sweep(const std::string &text) {
    std::stringstream ss(text);
    std::string part;
    std::vector<double> v;
    while (std::getline(ss, part, ':')) {
        std::size_t used = 0;
        v.push_back(std::stod(part, &used));
        if (used != part.size()) {
            throw std::invalid_argument("bad sweep component '" + part + "'");
        }
    }
    if (v.size() != 3 || !(v[2] > 0.0) || v[1] < v[0]) {
        throw std::invalid_argument("sweep must be a:b:step with a <= b, step > 0");
    }
    return {v[0], v[1], v[2]};
}

Report cmd_game(const GameOptions &opt) {
    if (!opt.eta && !opt.sweep) {
        throw std::invalid_argument("game needs --eta or --sweep");
    }
    Report r;
    r.command = "game";
    if (opt.eta) {
        r.inputs["eta"] = *opt.eta;
    }
    if (opt.sweep) {
        r.inputs["sweep"] = {opt.sweep->from, opt.sweep->to, opt.sweep->step};
    }
    if (opt.sampling.samples > 0) {
        r.inputs["samples"] = opt.sampling.samples;
        r.seed = opt.sampling.seed;
    }

    if (opt.eta) {
        const double eta = *opt.eta;
        check_eta(eta);
        const GameReport g = run_game(eta);
        r.results = game_json(g);
        if (opt.sampling.samples > 0) {
            const SampleRun sx =
                sample_table(game_table(eta, Axis::x()), opt.sampling.samples,
                             opt.sampling.seed, 0);
            const SampleRun sz =
                sample_table(game_table(eta, Axis::z()), opt.sampling.samples,
                             opt.sampling.seed, 1);
            const double hx = empirical_conditional_entropy(sx);
            const double hz = empirical_conditional_entropy(sz);
            r.results["empirical"] = {
                {"h_x", hx},
                {"h_z", hz},
                {"lhs", hx + hz},
                {"correlation_x", empirical_correlation(sx)},
                {"correlation_z", empirical_correlation(sz)},
                {"correlation_sigma", correlation_sigma(-eta, opt.sampling.samples)}};
        }
    }
    r.results["beating_threshold"] = beating_threshold();
    if (opt.sweep) {
        Json rows = Json::array();
        const EtaSweep &s = *opt.sweep;
        const auto steps = static_cast<long>(std::floor((s.to - s.from) / s.step + 1e-9));
        for (long k = 0; k <= steps; ++k) {
            const double eta = s.from + static_cast<double>(k) * s.step;
            check_eta(eta);
            rows.push_back(game_json(run_game(eta)));
        }
        r.results["sweep"] = std::move(rows);
    }
    return r;
}

Report cmd_moments(const MomentsOptions &opt) {
    check_eta(opt.eta);
    Report r;
    r.command = "moments";
    r.inputs["eta"] = opt.eta;
    if (opt.sampling.samples > 0) {
        r.inputs["samples"] = opt.sampling.samples;
        r.seed = opt.sampling.seed;
    }

    const auto axes = trine_axes();
    const DensityOp rho = DensityOp::maximally_mixed(2);
    const CorrelationTriple c = sequential_correlations(rho, axes, opt.eta);
    const MomentMatrix m = build_moment_matrix(c);
    const auto ev = moment_eigenvalues(m);

    r.results["correlations"] = {{"c12", c.c12}, {"c23", c.c23}, {"c13", c.c13}};
    Json rows = Json::array();
    for (const auto &row : m.rows()) {
        rows.push_back(Json(std::vector<double>(row.begin(), row.end())));
    }
    r.results["matrix"] = std::move(rows);
    r.results["eigenvalues"] = std::vector<double>(ev.begin(), ev.end());
    r.results["min_eigenvalue"] = ev.front();
    r.results["positive"] = ev.front() >= -1e-12;
    r.results["lgi_value"] = lgi_value(c);
    r.results["lgi_satisfied"] = lgi_value(c) <= 1.0;
    r.results["positivity_threshold"] = positivity_threshold(axes, rho);

    if (opt.sampling.samples > 0) {
        const std::array<std::pair<std::size_t, std::size_t>, 3> pairs{
            {{0, 1}, {1, 2}, {0, 2}}};
        const std::array<const char *, 3> names{"c12", "c23", "c13"};
        Json emp = Json::object();
        for (std::size_t k = 0; k < 3; ++k) {
            const auto [a, b] = pairs[k];
            const SampleRun run = sample_table(
                sequential_pair_table(rho, axes[a], axes[b], opt.eta),
                opt.sampling.samples, opt.sampling.seed, k);
            emp[names[k]] = empirical_correlation(run);
        }
        emp["correlation_sigma"] = correlation_sigma(c.c12, opt.sampling.samples);
        r.results["empirical"] = std::move(emp);
    }
    return r;
}

Report cmd_compat(const CompatOptions &opt) {
    Report r;
    r.command = "compat";
    r.inputs["axes"] = axes_json(opt.axes);
    r.inputs["eta"] = opt.eta;
    r.inputs["solver"] = solver_json(opt.solver);

    const GrandPovmProblem problem = GrandPovmProblem::noisy(opt.axes, opt.eta);
    const FeasibilityReport f = solve_feasibility(problem, opt.solver);
    r.results["verdict"] = to_string(f.verdict);
    r.results["residual"] = f.residual;
    r.results["iterations"] = f.iterations;
    if (opt.axes.size() == 2) {
        const auto scaled = [&](const Axis &a) {
            return Vec3{opt.eta * a[0], opt.eta * a[1], opt.eta * a[2]};
        };
        r.results["pair_criterion"] =
            pair_criterion_unbiased(scaled(opt.axes[0]), scaled(opt.axes[1]));
    }
    if (f.witness) {
        Json w = Json::array();
        std::vector<HermitianOp> ops;
        for (std::size_t l = 0; l < f.witness->size(); ++l) {
            const BlochEffect &e = (*f.witness)[l];
            Json outcomes = Json::array();
            for (std::size_t i = 0; i < problem.arity(); ++i) {
                outcomes.push_back(((l >> i) & 1U) != 0U ? -1 : 1);
            }
            w.push_back({{"outcomes", outcomes},
                         {"a", e.a},
                         {"b", {e.b[0], e.b[1], e.b[2]}}});
            ops.push_back(e.op());
        }
        const WitnessCheck chk = check_grand_povm(problem, ops);
        r.results["witness"] = std::move(w);
        r.results["witness_marginal_error"] = chk.marginal_error;
        r.results["witness_effect_violation"] = chk.effect_violation;
    }
    return r;
}

Report cmd_repro_all(const ReproOptions &opt) {
    Report r;
    r.command = "repro-all";
    r.inputs["solver"] = solver_json(opt.solver);
    r.inputs["samples"] = opt.samples;
    r.seed = opt.seed;

    Json criteria = Json::array();
    bool all = true;
    auto add = [&](Json c) {
        all = all && c["passed"].get<bool>();
        criteria.push_back(std::move(c));
    };

    // 1. compatibility thresholds
    double trine_full = 0.0;
    {
        const std::vector<std::pair<std::string, double>> sets{
            {"pair-xz", 1.0 / std::numbers::sqrt2},
            {"triple-xyz", 1.0 / std::numbers::sqrt3},
            {"trine-pair", std::numbers::sqrt3 - 1.0},
            {"trine-triple", 2.0 / 3.0}};
        Json detail = Json::array();
        bool ok = true;
        for (const auto &[name, expected] : sets) {
            const AxisSet s = *named_axis_set(name);
            const double eta = threshold(s.axes, s.mode, opt.solver).eta;
            if (name == "trine-triple") {
                trine_full = eta;
            }
            const bool pass = std::abs(eta - expected) <= 5e-3;
            ok = ok && pass;
            detail.push_back({{"set", name},
                              {"eta_star", eta},
                              {"expected", expected},
                              {"tolerance", 5e-3},
                              {"passed", pass}});
        }
        add(criterion(1, "compatibility thresholds", ok, std::move(detail)));
    }

    // 2. witness validity
    {
        const GrandPovmProblem problem =
            GrandPovmProblem::noisy({Axis::x(), Axis::z()}, 0.70);
        const FeasibilityReport f = solve_feasibility(problem, opt.solver);
        double m_err = INFINITY;
        double e_err = INFINITY;
        if (f.witness) {
            std::vector<HermitianOp> ops;
            for (const BlochEffect &e : *f.witness) {
                ops.push_back(e.op());
            }
            const WitnessCheck chk = check_grand_povm(problem, ops);
            m_err = chk.marginal_error;
            e_err = chk.effect_violation;
        }
        const Povm canon = canonical_pair_grand_povm(0.70);
        std::vector<HermitianOp> canon_ops;
        for (const Outcome &o : canon.outcomes()) {
            canon_ops.push_back(o.effect);
        }
        const WitnessCheck cc = check_grand_povm(problem, canon_ops);
        const bool ok = f.verdict == Verdict::Feasible && m_err <= 1e-7 &&
                        e_err <= 1e-8 && cc.marginal_error <= 1e-12 &&
                        cc.effect_violation <= 1e-12;
        add(criterion(2, "witness validity", ok,
                      {{"verdict", to_string(f.verdict)},
                       {"solver_marginal_error", m_err},
                       {"solver_effect_violation", e_err},
                       {"canonical_marginal_error", cc.marginal_error},
                       {"canonical_effect_violation", cc.effect_violation}}));
    }

    // 3. oracle agreement on random unbiased pairs
    {
        Xoshiro256ss rng(opt.seed);
        auto random_axis = [&] {
            const double z = 2.0 * rng.uniform() - 1.0;
            const double phi = 2.0 * std::numbers::pi * rng.uniform();
            const double s = std::sqrt(std::max(1.0 - z * z, 0.0));
            return Axis::normalized({s * std::cos(phi), s * std::sin(phi), z});
        };
        int evaluated = 0;
        int disagreements = 0;
        while (evaluated < 200) {
            const Axis a = random_axis();
            const Axis b = random_axis();
            const double eta = rng.uniform();
            Vec3 sum{};
            Vec3 diff{};
            for (std::size_t k = 0; k < 3; ++k) {
                sum[k] = a[k] + b[k];
                diff[k] = a[k] - b[k];
            }
            const double boundary = 2.0 / (norm(sum) + norm(diff));
            if (std::abs(eta - boundary) <= 2e-3) {
                continue;
            }
            ++evaluated;
            const bool oracle = pair_criterion_unbiased(
                {eta * a[0], eta * a[1], eta * a[2]},
                {eta * b[0], eta * b[1], eta * b[2]});
            const Verdict v =
                solve_feasibility(GrandPovmProblem::noisy({a, b}, eta), opt.solver)
                    .verdict;
            const Verdict expected = oracle ? Verdict::Feasible : Verdict::Infeasible;
            if (v != expected) {
                ++disagreements;
            }
        }
        add(criterion(3, "oracle agreement", disagreements == 0,
                      {{"instances", evaluated}, {"disagreements", disagreements}}));
    }

    // 4. memory game
    {
        Json detail = Json::object();
        bool ok = true;
        Json deviations = Json::array();
        for (double eta : {0.0, 0.25, 1.0 / std::numbers::sqrt2, 0.78, 0.9, 1.0}) {
            const GameReport g = run_game(eta);
            const double dev = std::abs(g.lhs - g.closed_form);
            ok = ok && dev <= 1e-9;
            deviations.push_back({{"eta", eta}, {"deviation", dev}});
        }
        const double beat = beating_threshold();
        const bool rounds = std::round(beat * 100.0) / 100.0 == 0.78;
        double min_lhs = INFINITY;
        for (int k = 0; k <= 70; ++k) {
            min_lhs = std::min(min_lhs, run_game(0.01 * k).lhs);
        }
        const double at_boundary = run_game(1.0 / std::numbers::sqrt2).lhs;
        min_lhs = std::min(min_lhs, at_boundary);
        ok = ok && rounds && min_lhs >= 1.0;
        detail["closed_form_deviation"] = std::move(deviations);
        detail["beating_threshold"] = beat;
        detail["min_lhs_compatible_range"] = min_lhs;
        add(criterion(4, "memory game", ok, std::move(detail)));
    }

    // 5. memory-assisted bound, equality case
    {
        const DensityOp s = singlet();
        const Povm px = sharp_spin(Axis::x());
        const Povm pz = sharp_spin(Axis::z());
        const double lhs =
            measured_conditional_entropy(s, px) + measured_conditional_entropy(s, pz);
        const double rhs = memory_bound(s, px, pz);
        const double sab = conditional_vn_entropy(s);
        const bool ok = std::abs(lhs) <= 1e-9 && std::abs(rhs) <= 1e-9 &&
                        std::abs(sab + 1.0) <= 1e-10;
        add(criterion(5, "memory-assisted bound", ok,
                      {{"lhs", lhs}, {"rhs", rhs}, {"conditional_entropy", sab}}));
    }

    // 6. moment matrix
    {
        const auto axes = trine_axes();
        const DensityOp rho = DensityOp::maximally_mixed(2);
        double corr_dev = 0.0;
        double eig_dev = 0.0;
        for (double eta : {0.0, 0.25, 0.5, 2.0 / 3.0, 1.0}) {
            const CorrelationTriple c = sequential_correlations(rho, axes, eta);
            for (double v : {c.c12, c.c23, c.c13}) {
                corr_dev = std::max(corr_dev, std::abs(v + eta / 2.0));
            }
            const auto ev = moment_eigenvalues(build_moment_matrix(c));
            const std::array<double, 4> expected{(2.0 - 3.0 * eta) / 2.0,
                                                 (2.0 + eta) / 2.0, (2.0 + eta) / 2.0,
                                                 (2.0 + eta) / 2.0};
            for (std::size_t k = 0; k < 4; ++k) {
                eig_dev = std::max(eig_dev, std::abs(ev[k] - expected[k]));
            }
        }
        const double pos = positivity_threshold(axes, rho);
        const bool ok = corr_dev <= 1e-12 && eig_dev <= 1e-12 &&
                        std::abs(pos - 2.0 / 3.0) <= 1e-4 &&
                        std::abs(pos - trine_full) <= 5e-3;
        add(criterion(6, "moment matrix", ok,
                      {{"correlation_deviation", corr_dev},
                       {"eigenvalue_deviation", eig_dev},
                       {"positivity_threshold", pos},
                       {"compat_trine_threshold", trine_full}}));
    }

    // 7. Monte Carlo consistency
    {
        const double eta = 0.5;
        const SampleRun game_run =
            sample_table(game_table(eta, Axis::x()), opt.samples, opt.seed, 0);
        const auto axes = trine_axes();
        const SampleRun trine_run = sample_table(
            sequential_pair_table(DensityOp::maximally_mixed(2), axes[0], axes[1], eta),
            opt.samples, opt.seed, 1);
        const double cg = empirical_correlation(game_run);
        const double ct = empirical_correlation(trine_run);
        const double sg = correlation_sigma(-eta, opt.samples);
        const double st = correlation_sigma(-eta / 2.0, opt.samples);
        GameOptions go;
        go.eta = eta;
        go.sampling = {std::min<std::uint64_t>(opt.samples, 100000), opt.seed};
        const bool identical =
            cmd_game(go).to_json_string() == cmd_game(go).to_json_string();
        const bool ok = std::abs(cg + eta) <= 4.0 * sg &&
                        std::abs(ct + eta / 2.0) <= 4.0 * st && identical;
        add(criterion(7, "Monte Carlo consistency", ok,
                      {{"game_correlation", cg},
                       {"game_sigma", sg},
                       {"trine_correlation", ct},
                       {"trine_sigma", st},
                       {"deterministic", identical}}));
    }

    // 8. LGI arithmetic maximum
    {
        const double v = lgi_value(CorrelationTriple(0.5, 0.5, -0.5));
        add(criterion(8, "LGI arithmetic maximum", v == 1.5, {{"value", v}}));
    }

    r.results["criteria"] = std::move(criteria);
    r.results["all_passed"] = all;
    return r;
}

} // namespace qpovm
