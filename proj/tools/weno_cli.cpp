/// @file weno_cli.cpp
/// @brief Command-line front end: run, converge, dissect, golden and list.
///
/// Exit codes: 0 ok, 1 divergence, 2 configuration error, 3 golden mismatch.

#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "weno/dissect.hpp"
#include "weno/errors.hpp"
#include "weno/golden.hpp"
#include "weno/run.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDivergence = 1;
constexpr int kExitConfig = 2;
constexpr int kExitGolden = 3;

struct SchemeArgs {
    std::string family;
    std::optional<double> p, q, eps;

    void attach(CLI::App* app, bool required) {
        auto* opt = app->add_option("--scheme", family, "weight family: js, m, z, zr, zl or linear");
        if (required) opt->required();
        app->add_option("--p", p, "ZR root / ZL log exponent p");
        app->add_option("--q", q, "ZL outer exponent q");
        app->add_option("--eps", eps, "regularisation epsilon");
    }

    std::optional<weno::WeightScheme> scheme() const {
        if (family.empty()) {
            if (p || q || eps) throw weno::ConfigError("--p, --q and --eps need --scheme");
            return std::nullopt;
        }
        const weno::Family f = weno::parse_family(family);
        weno::WeightScheme s = weno::default_scheme(f, p.value_or(2.0), q.value_or(1.0));
        if (eps) s.eps = *eps;
        s.validate();
        return s;
    }
};

struct RunArgs {
    std::string problem;
    SchemeArgs scheme;
    std::optional<int> n;
    std::string n_list;
    std::optional<double> cfl, dt_scale, t_final;
    std::string variables;
    std::string out;
    bool reference = false;
    std::uint64_t seed = 0;

    void attach(CLI::App* app, bool sweep) {
        app->add_option("problem", problem, "problem id (see `weno list`)")->required();
        scheme.attach(app, false);
        if (sweep)
            app->add_option("--n-list", n_list, "comma-separated grid sizes");
        else
            app->add_option("--n", n, "cells per direction");
        auto* c = app->add_option("--cfl", cfl, "CFL number applied to the maximum wave speed");
        auto* d = app->add_option("--dt-scale", dt_scale, "fixed time step as a multiple of dx");
        c->excludes(d);
        app->add_option("--tfinal", t_final, "final time");
        app->add_option("--variables", variables, "Euler reconstruction variables: conserved or characteristic");
        app->add_option("--out", out, "output directory");
        app->add_flag("--reference", reference, "compute fine-grid references where no closed form exists");
        app->add_option("--seed", seed, "seed recorded in the manifest");
    }

    weno::RunConfig config() const {
        weno::RunConfig cfg;
        cfg.problem = problem;
        cfg.scheme = scheme.scheme();
        cfg.n = n;
        if (!n_list.empty()) {
            std::stringstream ss(n_list);
            std::string item;
            while (std::getline(ss, item, ',')) {
                try {
                    cfg.n_list.push_back(std::stoi(item));
                } catch (const std::exception&) {
                    throw weno::ConfigError("bad grid size '" + item + "' in --n-list");
                }
            }
        }
        if (cfl) cfg.step = weno::TimeStepRule::cfl(*cfl);
        if (dt_scale) cfg.step = weno::TimeStepRule::dt_scale(*dt_scale);
        cfg.t_final = t_final;
        if (!variables.empty()) cfg.variables = weno::parse_variables(variables);
        cfg.out_dir = out;
        cfg.fine_reference = reference;
        cfg.seed = seed;
        return cfg;
    }
};

int cmd_run(const RunArgs& a) {
    const weno::RunResult r = weno::run_problem(a.config());
    fmt::print("problem {}  scheme {}  n {}  t_final {:.6g}  steps {}\n", r.problem, r.scheme.label(), r.n,
               r.t_final, r.sim.integration.steps);
    if (r.errors) fmt::print("L1 {:.6e}  L2 {:.6e}  Linf {:.6e}\n", r.errors->l1, r.errors->l2, r.errors->linf);
    for (const auto& f : r.files) fmt::print("wrote {}\n", f);
    fmt::print("wall time {:.3f} s\n", r.wall_seconds);
    return kExitOk;
}

int cmd_converge(const RunArgs& a) {
    const weno::ConvergenceResult c = weno::converge(a.config());
    fmt::print("problem {}  scheme {}\n{}", c.problem, c.scheme.label(), c.report.to_text());
    for (const auto& f : c.files) fmt::print("wrote {}\n", f);
    fmt::print("wall time {:.3f} s\n", c.wall_seconds);
    return kExitOk;
}

struct DissectArgs {
    double nu = 0.5;
    double delta = 1.0;
    double dx = 0.01;
    std::string schemes = "table";
    std::string stage = "all";
    std::string table = "all";
    std::optional<double> t_final;
    bool csv = false;

    // "table", "zl-table", or items family[:p[:q]] separated by commas.
    std::vector<weno::WeightScheme> scheme_list() const {
        if (schemes == "table") return weno::table_schemes();
        if (schemes == "zl-table") return weno::table_zl_schemes();
        std::vector<weno::WeightScheme> out;
        std::stringstream ss(schemes);
        std::string item;
        while (std::getline(ss, item, ',')) {
            std::vector<std::string> parts;
            std::stringstream is(item);
            std::string part;
            while (std::getline(is, part, ':')) parts.push_back(part);
            if (parts.empty() || parts.size() > 3) throw weno::ConfigError("bad scheme item '" + item + "'");
            const weno::Family f = weno::parse_family(parts[0]);
            double p = 2.0, q = 1.0;
            try {
                if (parts.size() > 1) p = std::stod(parts[1]);
                if (parts.size() > 2) q = std::stod(parts[2]);
            } catch (const std::exception&) {
                throw weno::ConfigError("bad parameters in scheme item '" + item + "'");
            }
            weno::WeightScheme s = f == weno::Family::JS ? weno::WeightScheme::js(1e-12) : weno::default_scheme(f, p, q);
            s.validate();
            out.push_back(s);
        }
        if (out.empty()) throw weno::ConfigError("no schemes given");
        return out;
    }
};

int cmd_dissect(const DissectArgs& a) {
    weno::RiemannSetup setup;
    setup.uL = a.delta;
    setup.uR = 0.0;
    setup.nu = a.nu;
    setup.dx = a.dx;
    setup.schemes = a.scheme_list();
    setup.validate();

    auto emit = [&](const weno::Table& t) {
        if (a.csv)
            fmt::print("# {}\n{}", t.title, t.to_csv());
        else
            fmt::print("{}\n", t.to_text());
    };
    if (a.t_final) {
        emit(weno::final_time_comparison(setup, *a.t_final));
        return kExitOk;
    }

    std::vector<int> stages;
    if (a.stage == "all")
        stages = {1, 2, 3};
    else if (a.stage == "1" || a.stage == "2" || a.stage == "3")
        stages = {std::stoi(a.stage)};
    else
        throw weno::ConfigError("--stage must be 1, 2, 3 or all");
    std::vector<weno::TableKind> kinds;
    if (a.table == "all")
        kinds = {weno::TableKind::Weights, weno::TableKind::Fluxes, weno::TableKind::Solutions};
    else
        kinds = {weno::parse_table_kind(a.table)};

    const weno::StepAnalysis analysis = weno::analyze_step(setup);
    for (int s : stages)
        for (weno::TableKind k : kinds) emit(weno::render_table(analysis, s, k));
    return kExitOk;
}

int cmd_golden(const std::string& which, bool verbose) {
    const std::vector<std::string> ids =
        which == "all" ? weno::golden_table_ids() : std::vector<std::string>{which};
    int failed = 0;
    for (const std::string& id : ids) {
        const weno::GoldenResult r = weno::golden_check(id);
        fmt::print("{}", r.listing(!verbose));
        if (!r.passed()) ++failed;
    }
    if (ids.size() > 1) fmt::print("{} of {} tables reproduced\n", ids.size() - failed, ids.size());
    return failed ? kExitGolden : kExitOk;
}

int cmd_list() {
    for (const weno::Problem& p : weno::problem_registry())
        fmt::print("{:<20} {:<8} n={:<4} T={:<9.6g} {:<14} reference={:<9} {}\n", p.id, weno::kind_name(p.kind), p.n,
                   p.t_final, p.scheme.label(), weno::reference_name(p.reference), p.summary);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-volume WENO solver and benchmark harness"};
    app.require_subcommand(1);

    RunArgs run_args;
    run_args.attach(app.add_subcommand("run", "run one problem and write its outputs"), false);
    RunArgs conv_args;
    conv_args.attach(app.add_subcommand("converge", "grid-convergence sweep with an error report"), true);

    DissectArgs dis;
    auto* dissect = app.add_subcommand("dissect", "stage-by-stage tables of one step on a single jump");
    dissect->add_option("--nu", dis.nu, "Courant number (0, 0.5]");
    dissect->add_option("--delta", dis.delta, "jump height uL - uR");
    dissect->add_option("--dx", dis.dx, "cell width");
    dissect->add_option("--schemes", dis.schemes,
                        "table, zl-table or a comma list of family[:p[:q]] (JS uses eps 1e-12)");
    dissect->add_option("--stage", dis.stage, "1, 2, 3 or all");
    dissect->add_option("--table", dis.table, "weights, fluxes, solutions or all");
    dissect->add_option("--tfinal", dis.t_final, "advect to this time instead and tabulate the cells near x = T");
    dissect->add_flag("--csv", dis.csv, "CSV instead of aligned text");

    std::string golden_id = "all";
    bool golden_verbose = false;
    auto* golden = app.add_subcommand("golden", "recompute reference tables and compare with golden/");
    golden->add_option("table", golden_id, "table id or all");
    golden->add_flag("-v,--verbose", golden_verbose, "list every cell, not only failures");

    app.add_subcommand("list", "list registered problems");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (app.got_subcommand("run")) return cmd_run(run_args);
        if (app.got_subcommand("converge")) return cmd_converge(conv_args);
        if (app.got_subcommand("dissect")) return cmd_dissect(dis);
        if (app.got_subcommand("golden")) return cmd_golden(golden_id, golden_verbose);
        if (app.got_subcommand("list")) return cmd_list();
    } catch (const weno::DivergenceError& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return kExitDivergence;
    } catch (const weno::StateError& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return kExitDivergence;
    } catch (const weno::ConfigError& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return kExitConfig;
    } catch (const std::exception& e) {
        fmt::print(stderr, "error: {}\n", e.what());
        return kExitConfig;
    }
    return kExitConfig;
}
