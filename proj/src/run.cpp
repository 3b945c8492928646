/// @file run.cpp
/// @brief Problem execution, references and run outputs.

#include "weno/run.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <future>
#include <memory>

#include <fmt/format.h>

#include "weno/errors.hpp"
#include "weno/output.hpp"
#include "weno/solver.hpp"

namespace weno {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void check_positive_state(const CellField& u) {
    const Grid1D& g = u.grid1d();
    for (int i = 0; i < g.n; ++i) {
        const double rho = u(i, 0);
        if (!(rho > 0.0)) throw StateError(fmt::format("nonpositive density {:.6g} at x = {:.6g}", rho, g.center(i)));
        const double p = (kGamma - 1.0) * (u(i, 2) - 0.5 * u(i, 1) * u(i, 1) / rho);
        if (!(p > 0.0)) throw StateError(fmt::format("nonpositive pressure {:.6g} at x = {:.6g}", p, g.center(i)));
    }
}

StageCheck with_positivity(const StageCheck& user) {
    return [user](const CellField& u) {
        check_positive_state(u);
        if (user) user(u);
    };
}

double step_size(const TimeStepRule& rule, double rate_cfl_dt, double h) {
    return rule.mode == TimeStepRule::Mode::Cfl ? rate_cfl_dt : rule.value * h;
}

std::string step_text(const TimeStepRule& r) {
    return (r.mode == TimeStepRule::Mode::Cfl ? "cfl " : "dt-scale ") + format_double(r.value);
}

void describe_scheme(Manifest& m, const WeightScheme& s) {
    m.add("scheme", s.label());
    m.add("family", family_name(s.family));
    m.add("eps", s.eps);
    m.add("p", s.p);
    m.add("q", s.q);
}

}  // namespace

void RunConfig::validate() const {
    find_problem(problem);
    if (scheme) scheme->validate();
    if (n && *n < 5) throw ConfigError("grid size must be at least 5");
    for (int k : n_list)
        if (k < 5) throw ConfigError("grid sizes must be at least 5");
    if (step && !(step->value > 0.0 && std::isfinite(step->value)))
        throw ConfigError("time-step parameter must be positive");
    if (step && step->mode == TimeStepRule::Mode::Cfl && step->value > 1.0)
        throw ConfigError("cfl above 1 is unstable for TVD-RK3 with this flux");
    if (t_final && !(*t_final >= 0.0 && std::isfinite(*t_final)))
        throw ConfigError("final time must be nonnegative");
}

Simulation simulate(const Problem& p, const WeightScheme& scheme, int n, const TimeStepRule& step,
                    double t_final, const StepOptions& opt) {
    scheme.validate();
    Simulation sim;
    sim.u = p.initial(n);
    StepOptions o = opt;

    switch (p.kind) {
        case ProblemKind::Scalar1D: {
            auto op = std::make_shared<ScalarOp1D>();
            op->model = p.model;
            op->scheme = scheme;
            op->bc = p.bc1d;
            const double dx = sim.u.grid1d().dx();
            auto plan = [op, step, dx](const CellField& u) {
                op->alpha = max_wave_speed(u, op->model);
                return step_size(step, cfl_dt(step.value, op->alpha, dx), dx);
            };
            sim.integration = integrate_to(sim.u, bind_operator(op), t_final, plan, o);
            break;
        }
        case ProblemKind::Euler1D: {
            auto op = std::make_shared<EulerOp1D>();
            op->scheme = scheme;
            op->bc = p.bc1d;
            op->variables = p.variables;
            const double dx = sim.u.grid1d().dx();
            auto plan = [op, step, dx](const CellField& u) {
                op->alpha = max_wave_speed_euler(u, op->gamma);
                return step_size(step, cfl_dt(step.value, op->alpha, dx), dx);
            };
            o.check = with_positivity(opt.check);
            sim.integration = integrate_to(sim.u, bind_operator(op), t_final, plan, o);
            break;
        }
        case ProblemKind::Scalar2D: {
            auto op = std::make_shared<ScalarOp2D>();
            op->model = p.model2d;
            op->scheme = scheme;
            op->bc = p.bc2d;
            const double dx = sim.u.grid2d().dx();
            const double dy = sim.u.grid2d().dy();
            auto plan = [op, step, dx, dy](const CellField& u) {
                const auto [ax, ay] = max_wave_speeds_2d(u, op->model);
                op->alpha_x = ax;
                op->alpha_y = ay;
                return step_size(step, cfl_dt_2d(step.value, ax, ay, dx, dy), std::min(dx, dy));
            };
            sim.integration = integrate_to(sim.u, bind_operator(op), t_final, plan, o);
            break;
        }
    }
    return sim;
}

int fine_grid_factor(int n) {
    if (n <= 0) throw ConfigError("grid size must be positive");
    return (2001 + n - 1) / n;
}

CellField block_average(const CellField& fine, int factor, const Grid1D& coarse) {
    if (fine.is_2d() || fine.grid1d().n != factor * coarse.n)
        throw ConfigError("fine grid is not a refinement of the coarse grid");
    CellField out(coarse, fine.components());
    for (int i = 0; i < coarse.n; ++i)
        for (int c = 0; c < fine.components(); ++c) {
            double s = 0.0;
            for (int k = 0; k < factor; ++k) s += fine(i * factor + k, c);
            out(i, c) = s / factor;
        }
    return out;
}

CellField reference_solution(const Problem& p, int n, double t_final, const TimeStepRule& step) {
    switch (p.reference) {
        case ReferenceKind::Exact:
            return p.exact(n, t_final);
        case ReferenceKind::FineGrid: {
            if (p.kind == ProblemKind::Scalar2D) throw ConfigError("fine-grid references are 1D only");
            const int m = fine_grid_factor(n);
            const Simulation fine = simulate(p, WeightScheme::m(), n * m, step, t_final);
            return block_average(fine.u, m, p.grid1d(n));
        }
        case ReferenceKind::None:
            break;
    }
    throw ConfigError("problem '" + p.id + "' has no reference solution");
}

namespace {

Problem configured_problem(const RunConfig& cfg) {
    Problem p = find_problem(cfg.problem);
    if (cfg.variables) {
        if (p.kind != ProblemKind::Euler1D) throw ConfigError("reconstruction variables apply to Euler problems only");
        p.variables = *cfg.variables;
    }
    return p;
}

}  // namespace

RunResult run_problem(const RunConfig& cfg) {
    cfg.validate();
    const Problem p = configured_problem(cfg);
    RunResult r;
    r.problem = p.id;
    r.scheme = cfg.scheme.value_or(p.scheme);
    r.n = cfg.n.value_or(p.n);
    r.step = cfg.step.value_or(p.step);
    r.t_final = cfg.t_final.value_or(p.t_final);

    const auto t0 = Clock::now();
    r.sim = simulate(p, r.scheme, r.n, r.step, r.t_final);
    const bool want_reference =
        p.reference == ReferenceKind::Exact || (p.reference == ReferenceKind::FineGrid && cfg.fine_reference);
    if (want_reference) {
        r.reference = reference_solution(p, r.n, r.t_final, r.step);
        r.errors = error_norms(r.sim.u, *r.reference);
    }
    r.wall_seconds = seconds_since(t0);

    if (cfg.out_dir.empty()) return r;
    const std::filesystem::path dir(cfg.out_dir);
    auto emit = [&](const std::string& name, const std::string& text) {
        write_text_file(dir / name, text);
        r.files.push_back((dir / name).string());
    };
    emit("solution.csv", solution_csv(r.sim.u));
    if (r.reference) {
        emit("reference.csv", solution_csv(*r.reference));
        emit("errors.csv", make_report({{r.n, *r.errors}}).to_csv());
    }

    Manifest m;
    m.add("problem", p.id);
    m.add("summary", p.summary);
    m.add("kind", kind_name(p.kind));
    describe_scheme(m, r.scheme);
    if (p.kind == ProblemKind::Euler1D) m.add("variables", variables_name(p.variables));
    m.add("n", r.n);
    m.add("time_step", step_text(r.step));
    m.add("t_final", r.t_final);
    m.add("steps", r.sim.integration.steps);
    m.add("reference", want_reference ? reference_name(p.reference) : "none");
    if (r.errors) {
        m.add("L1", r.errors->l1);
        m.add("L2", r.errors->l2);
        m.add("Linf", r.errors->linf);
    }
    m.add("seed", std::to_string(cfg.seed));
    m.add("wall_seconds", r.wall_seconds);
    emit("manifest.txt", m.to_text());
    emit("plot.gp", gnuplot_solution_script("solution.csv", r.reference ? "reference.csv" : "",
                                            p.kind == ProblemKind::Scalar2D, p.kind == ProblemKind::Euler1D,
                                            p.id + " " + r.scheme.label()));
    return r;
}

ConvergenceResult converge(const RunConfig& cfg) {
    cfg.validate();
    const Problem p = configured_problem(cfg);
    if (p.reference == ReferenceKind::None) throw ConfigError("problem '" + p.id + "' has no reference solution");
    if (p.reference == ReferenceKind::FineGrid && !cfg.fine_reference)
        throw ConfigError("problem '" + p.id + "' needs fine-grid references; enable them explicitly");
    std::vector<int> ns = cfg.n_list.empty() ? p.n_list : cfg.n_list;
    if (ns.empty()) ns = {p.n};

    ConvergenceResult c;
    c.problem = p.id;
    c.scheme = cfg.scheme.value_or(p.scheme);
    const TimeStepRule step = cfg.step.value_or(p.step);
    const double t_final = cfg.t_final.value_or(p.t_final);

    const auto t0 = Clock::now();
    std::vector<std::future<ErrorNorms>> jobs;
    for (int n : ns)
        jobs.push_back(std::async(std::launch::async, [&p, &c, &step, t_final, n] {
            const Simulation sim = simulate(p, c.scheme, n, step, t_final);
            return error_norms(sim.u, reference_solution(p, n, t_final, step));
        }));
    std::vector<std::pair<int, ErrorNorms>> runs;
    for (std::size_t k = 0; k < ns.size(); ++k) runs.emplace_back(ns[k], jobs[k].get());
    c.report = make_report(runs);
    c.wall_seconds = seconds_since(t0);

    if (cfg.out_dir.empty()) return c;
    const std::filesystem::path dir(cfg.out_dir);
    auto emit = [&](const std::string& name, const std::string& text) {
        write_text_file(dir / name, text);
        c.files.push_back((dir / name).string());
    };
    emit("errors.csv", c.report.to_csv());
    Manifest m;
    m.add("problem", p.id);
    m.add("summary", p.summary);
    describe_scheme(m, c.scheme);
    std::string list;
    for (int n : ns) list += (list.empty() ? "" : ",") + std::to_string(n);
    m.add("n_list", list);
    m.add("time_step", step_text(step));
    m.add("t_final", t_final);
    m.add("reference", reference_name(p.reference));
    m.add("seed", std::to_string(cfg.seed));
    m.add("wall_seconds", c.wall_seconds);
    emit("manifest.txt", m.to_text());
    emit("plot.gp", gnuplot_convergence_script("errors.csv", p.id + " " + c.scheme.label()));
    return c;
}

}  // namespace weno
