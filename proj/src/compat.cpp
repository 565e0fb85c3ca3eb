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

#include "qpovm/compat.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "qpovm/error.hpp"

namespace qpovm {

namespace {

struct Point2 {
    double x;
    double y;
};

Point2 project_segment(Point2 p, Point2 s0, Point2 s1) {
    const double dx = s1.x - s0.x;
    const double dy = s1.y - s0.y;
    double t = ((p.x - s0.x) * dx + (p.y - s0.y) * dy) / (dx * dx + dy * dy);
    t = std::clamp(t, 0.0, 1.0);
    return {s0.x + t * dx, s0.y + t * dy};
}

BlochEffect read_effect(std::span<const double> v, std::size_t lambda) {
    const std::size_t o = 4 * lambda;
    return {v[o], {v[o + 1], v[o + 2], v[o + 3]}};
}

void write_effect(std::span<double> v, std::size_t lambda, const BlochEffect &e) {
    const std::size_t o = 4 * lambda;
    v[o] = e.a;
    v[o + 1] = e.b[0];
    v[o + 2] = e.b[1];
    v[o + 3] = e.b[2];
}

bool outcome_bit(std::size_t lambda, std::size_t i) {
    return ((lambda >> i) & 1U) != 0U;
}

std::vector<BlochEffect> unpack(std::span<const double> v, std::size_t count) {
    std::vector<BlochEffect> g(count);
    for (std::size_t l = 0; l < count; ++l) {
        g[l] = read_effect(v, l);
    }
    return g;
}

std::vector<HermitianOp> to_ops(const std::vector<BlochEffect> &g) {
    std::vector<HermitianOp> ops;
    ops.reserve(g.size());
    for (const BlochEffect &e : g) {
        ops.push_back(e.op());
    }
    return ops;
}

double effect_violation(const HermitianOp &g) {
    const EigenDecomposition e = eig_hermitian(g);
    return std::max({0.0, -e.values.front(), e.values.back() - 1.0});
}

} // namespace

BlochEffect BlochEffect::from_op(const HermitianOp &op) {
    const BlochCoords c = bloch_coords(op);
    return {c.a, c.b};
}

double BlochEffect::violation() const {
    const double r = norm(b);
    return std::max({0.0, r - a, r - (1.0 - a)});
}

BlochEffect project_effect_cone(const BlochEffect &e) {
    const double r = norm(e.b);
    if (r <= e.a && r <= 1.0 - e.a) {
        return e;
    }
    // In the (a, |b⃗|) half-plane the set is the square with corners
    // (0,0), (½,½), (1,0), (½,−½); its boundary edges are checked in turn.
    static constexpr std::array<Point2, 4> kCorners{
        {{0.0, 0.0}, {0.5, 0.5}, {1.0, 0.0}, {0.5, -0.5}}};
    const Point2 p{e.a, r};
    Point2 best{};
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < kCorners.size(); ++k) {
        const Point2 q = project_segment(p, kCorners[k], kCorners[(k + 1) % 4]);
        const double d = std::hypot(q.x - p.x, q.y - p.y);
        if (d < best_d) {
            best_d = d;
            best = q;
        }
    }
    BlochEffect out{best.x, {0.0, 0.0, 0.0}};
    if (r > 0.0) {
        const double scale = std::max(best.y, 0.0) / r;
        out.b = {e.b[0] * scale, e.b[1] * scale, e.b[2] * scale};
    }
    return out;
}

GrandPovmProblem::GrandPovmProblem(std::vector<Povm> marginals)
    : marginals_(std::move(marginals)) {
    if (marginals_.size() < 2 || marginals_.size() > 3) {
        throw Error(ErrorKind::UnsupportedArity,
                    "grand POVM search supports 2 or 3 observables, got " +
                        std::to_string(marginals_.size()));
    }
    for (const Povm &p : marginals_) {
        if (p.dim() != 2 || p.size() != 2) {
            throw Error(ErrorKind::InvalidPovm,
                        "marginals must be two-outcome qubit POVMs");
        }
        if (!validate(p).ok) {
            throw Error(ErrorKind::InvalidPovm, "marginal fails validation");
        }
        targets_.push_back(BlochEffect::from_op(p.effect(0)));
        targets_.push_back(BlochEffect::from_op(p.effect(1)));
    }
}

GrandPovmProblem GrandPovmProblem::noisy(const std::vector<Axis> &axes,
                                         double eta) {
    std::vector<Povm> m;
    m.reserve(axes.size());
    for (const Axis &ax : axes) {
        m.push_back(noisy_spin(ax, eta));
    }
    return GrandPovmProblem(std::move(m));
}

AffineSystem::AffineSystem(std::size_t variables,
                           std::vector<std::vector<double>> rows,
                           std::vector<double> rhs)
    : variables_(variables), rows_(std::move(rows)), rhs_(std::move(rhs)) {
    if (rows_.size() != rhs_.size()) {
        throw Error(ErrorKind::DimMismatch, "row and rhs counts differ");
    }
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r].size() != variables_) {
            throw Error(ErrorKind::DimMismatch, "row length mismatch");
        }
        std::vector<double> q = rows_[r];
        double s = rhs_[r];
        double n0 = 0.0;
        for (double x : q) {
            n0 += x * x;
        }
        n0 = std::sqrt(n0);
        // Modified Gram–Schmidt, two passes.
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < basis_.size(); ++k) {
                double c = 0.0;
                for (std::size_t j = 0; j < variables_; ++j) {
                    c += basis_[k][j] * q[j];
                }
                for (std::size_t j = 0; j < variables_; ++j) {
                    q[j] -= c * basis_[k][j];
                }
                s -= c * basis_rhs_[k];
            }
        }
        double n = 0.0;
        for (double x : q) {
            n += x * x;
        }
        n = std::sqrt(n);
        if (n <= 1e-10 * std::max(n0, 1.0)) {
            if (std::abs(s) > 1e-9) {
                throw Error(ErrorKind::InvalidPovm,
                            "marginal constraints are inconsistent");
            }
            continue;
        }
        for (double &x : q) {
            x /= n;
        }
        basis_.push_back(std::move(q));
        basis_rhs_.push_back(s / n);
    }
}

void AffineSystem::project(std::span<double> v) const {
    for (std::size_t k = 0; k < basis_.size(); ++k) {
        double c = -basis_rhs_[k];
        for (std::size_t j = 0; j < variables_; ++j) {
            c += basis_[k][j] * v[j];
        }
        for (std::size_t j = 0; j < variables_; ++j) {
            v[j] -= c * basis_[k][j];
        }
    }
}

double AffineSystem::residual(std::span<const double> v) const {
    double worst = 0.0;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        double s = -rhs_[r];
        for (std::size_t j = 0; j < variables_; ++j) {
            s += rows_[r][j] * v[j];
        }
        worst = std::max(worst, std::abs(s));
    }
    return worst;
}

AffineSystem marginal_constraints(const GrandPovmProblem &problem) {
    const std::size_t n = problem.arity();
    const std::size_t outcomes = problem.outcome_count();
    const std::size_t vars = problem.variable_count();
    std::vector<std::vector<double>> rows;
    std::vector<double> rhs;

    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t x = 0; x < 2; ++x) {
            const BlochEffect &t = problem.target(i, x);
            const std::array<double, 4> coords{t.a, t.b[0], t.b[1], t.b[2]};
            for (std::size_t c = 0; c < 4; ++c) {
                std::vector<double> row(vars, 0.0);
                for (std::size_t l = 0; l < outcomes; ++l) {
                    if (outcome_bit(l, i) == (x == 1)) {
                        row[4 * l + c] = 1.0;
                    }
                }
                rows.push_back(std::move(row));
                rhs.push_back(coords[c]);
            }
        }
    }
    for (std::size_t c = 0; c < 4; ++c) {
        std::vector<double> row(vars, 0.0);
        for (std::size_t l = 0; l < outcomes; ++l) {
            row[4 * l + c] = 1.0;
        }
        rows.push_back(std::move(row));
        rhs.push_back(c == 0 ? 1.0 : 0.0);
    }
    return AffineSystem(vars, std::move(rows), std::move(rhs));
}

const char *to_string(Verdict v) noexcept {
    switch (v) {
    case Verdict::Feasible:
        return "Feasible";
    case Verdict::Infeasible:
        return "Infeasible";
    case Verdict::Indeterminate:
        return "Indeterminate";
    }
    return "Indeterminate";
}

FeasibilityReport solve_feasibility(const GrandPovmProblem &problem,
                                    const SolverConfig &cfg) {
    constexpr int kStallWindow = 100;
    constexpr double kStallTol = 1e-12;

    const AffineSystem system = marginal_constraints(problem);
    const std::size_t outcomes = problem.outcome_count();
    const std::size_t vars = problem.variable_count();

    std::vector<double> x(vars, 0.0);
    for (std::size_t l = 0; l < outcomes; ++l) {
        x[4 * l] = 1.0 / static_cast<double>(outcomes);
    }
    std::vector<double> y(vars);
    std::vector<double> p(vars, 0.0); // Dykstra increments, affine set
    std::vector<double> q(vars, 0.0); // Dykstra increments, cone set
    std::vector<double> w(vars);

    FeasibilityReport report;
    double window_start = std::numeric_limits<double>::infinity();

    for (int it = 1; it <= cfg.max_iter; ++it) {
        for (std::size_t j = 0; j < vars; ++j) {
            y[j] = x[j] + p[j];
        }
        system.project(y);
        for (std::size_t j = 0; j < vars; ++j) {
            p[j] = x[j] + p[j] - y[j];
            w[j] = y[j] + q[j];
        }
        for (std::size_t l = 0; l < outcomes; ++l) {
            write_effect(x, l, project_effect_cone(read_effect(w, l)));
        }
        double residual = 0.0;
        for (std::size_t j = 0; j < vars; ++j) {
            q[j] = w[j] - x[j];
            residual = std::max(residual, std::abs(x[j] - y[j]));
        }
        report.residual = residual;
        report.iterations = it;

        if (residual < cfg.tol_feas) {
            std::vector<BlochEffect> g = unpack(x, outcomes);
            const WitnessCheck chk = check_grand_povm(problem, to_ops(g));
            if (chk.marginal_error <= 1e-7 && chk.effect_violation <= 1e-8 &&
                chk.completeness_error <= 1e-7) {
                report.verdict = Verdict::Feasible;
                report.witness = std::move(g);
                return report;
            }
        }
        if (it % kStallWindow == 0) {
            if (residual > cfg.tol_infeas &&
                std::abs(window_start - residual) < kStallTol) {
                report.verdict = Verdict::Infeasible;
                return report;
            }
            window_start = residual;
        }
    }
    report.verdict = Verdict::Indeterminate;
    return report;
}

WitnessCheck check_grand_povm(const GrandPovmProblem &problem,
                              const std::vector<HermitianOp> &grand) {
    if (grand.size() != problem.outcome_count()) {
        throw Error(ErrorKind::DimMismatch, "grand POVM has wrong outcome count");
    }
    WitnessCheck chk{0.0, 0.0, 0.0};
    CMatrix total(2);
    for (const HermitianOp &g : grand) {
        chk.effect_violation = std::max(chk.effect_violation, effect_violation(g));
        total += g.matrix();
    }
    chk.completeness_error = max_abs_diff(total, CMatrix::identity(2));
    for (std::size_t i = 0; i < problem.arity(); ++i) {
        for (std::size_t x = 0; x < 2; ++x) {
            CMatrix sum(2);
            for (std::size_t l = 0; l < grand.size(); ++l) {
                if (outcome_bit(l, i) == (x == 1)) {
                    sum += grand[l].matrix();
                }
            }
            chk.marginal_error =
                std::max(chk.marginal_error,
                         max_abs_diff(sum, problem.marginals()[i].effect(x).matrix()));
        }
    }
    return chk;
}

Povm grand_povm(const std::vector<HermitianOp> &effects) {
    std::vector<Outcome> out;
    out.reserve(effects.size());
    for (std::size_t l = 0; l < effects.size(); ++l) {
        out.push_back({static_cast<int>(l), 0.0, effects[l]});
    }
    return Povm(std::move(out));
}

Povm grand_povm(const std::vector<BlochEffect> &effects) {
    return grand_povm(to_ops(effects));
}

Povm marginal(const Povm &grand, std::size_t arity, std::size_t i) {
    if (grand.size() != (std::size_t{1} << arity) || i >= arity) {
        throw Error(ErrorKind::DimMismatch, "grand POVM does not match arity");
    }
    CMatrix plus(grand.dim());
    CMatrix minus(grand.dim());
    for (const Outcome &o : grand.outcomes()) {
        const auto l = static_cast<std::size_t>(o.label);
        (outcome_bit(l, i) ? minus : plus) += o.effect.matrix();
    }
    return Povm({{+1, +1.0, HermitianOp(plus)}, {-1, -1.0, HermitianOp(minus)}});
}

bool pair_criterion_unbiased(const Vec3 &b1, const Vec3 &b2) {
    const Vec3 s{b1[0] + b2[0], b1[1] + b2[1], b1[2] + b2[2]};
    const Vec3 d{b1[0] - b2[0], b1[1] - b2[1], b1[2] - b2[2]};
    return norm(s) + norm(d) <= 2.0 + 1e-12;
}

Povm canonical_pair_grand_povm(double eta) {
    if (!(eta >= 0.0 && eta <= 1.0 / std::sqrt(2.0) + 1e-12)) {
        throw Error(ErrorKind::EtaOutOfRange,
                    "canonical grand POVM needs 0 <= eta <= 1/sqrt(2)");
    }
    std::vector<BlochEffect> g;
    for (std::size_t l = 0; l < 4; ++l) {
        const double x = outcome_bit(l, 0) ? -1.0 : 1.0;
        const double z = outcome_bit(l, 1) ? -1.0 : 1.0;
        g.push_back({0.25, {0.25 * eta * x, 0.0, 0.25 * eta * z}});
    }
    return grand_povm(g);
}

ThresholdResult threshold(const std::vector<Axis> &axes, ThresholdMode mode,
                          const SolverConfig &cfg, double gap) {
    if (axes.size() < 2 || axes.size() > 3) {
        throw Error(ErrorKind::UnsupportedArity, "threshold needs 2 or 3 axes");
    }
    ThresholdResult result{0.0, {}};

    auto probe = [&](double eta) {
        ThresholdProbe pr{eta, true, 0.0, 0};
        auto run = [&](const std::vector<Axis> &subset) {
            const FeasibilityReport r =
                solve_feasibility(GrandPovmProblem::noisy(subset, eta), cfg);
            pr.residual = std::max(pr.residual, r.residual);
            pr.iterations += r.iterations;
            pr.feasible = pr.feasible && r.verdict == Verdict::Feasible;
        };
        if (mode == ThresholdMode::Full || axes.size() == 2) {
            run(axes);
        } else {
            for (std::size_t i = 0; i < axes.size() && pr.feasible; ++i) {
                for (std::size_t j = i + 1; j < axes.size() && pr.feasible; ++j) {
                    run({axes[i], axes[j]});
                }
            }
        }
        result.probes.push_back(pr);
        return pr.feasible;
    };

    if (probe(1.0)) {
        result.eta = 1.0;
        return result;
    }
    if (!probe(0.0)) {
        throw Error(ErrorKind::InternalDefect, "trivial POVMs reported infeasible");
    }
    double lo = 0.0;
    double hi = 1.0;
    while (hi - lo > gap) {
        const double mid = 0.5 * (lo + hi);
        (probe(mid) ? lo : hi) = mid;
    }

    // Noise addition is post-processing, so feasibility is monotone in η:
    // every feasible probe must lie below every infeasible one.
    double max_feasible = 0.0;
    double min_infeasible = 1.0;
    for (const ThresholdProbe &pr : result.probes) {
        if (pr.feasible) {
            max_feasible = std::max(max_feasible, pr.eta);
        } else {
            min_infeasible = std::min(min_infeasible, pr.eta);
        }
    }
    if (max_feasible >= min_infeasible) {
        throw Error(ErrorKind::InternalDefect, "non-monotone probe history");
    }
    result.eta = 0.5 * (lo + hi);
    return result;
}

} // namespace qpovm
