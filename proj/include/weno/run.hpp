/// @file run.hpp
/// @brief Running registry problems: time integration, reference solutions,
///        error reports and output files.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "weno/integrate.hpp"
#include "weno/norms.hpp"
#include "weno/problems.hpp"

namespace weno {

/// Unset optionals fall back to the problem's defaults.
struct RunConfig {
    std::string problem;
    std::optional<WeightScheme> scheme;
    std::optional<int> n;
    std::vector<int> n_list;
    std::optional<TimeStepRule> step;
    std::optional<double> t_final;
    /// Euler reconstruction variables; the problem's choice when unset.
    std::optional<EulerVariables> variables;
    /// No files are written when empty.
    std::string out_dir;
    /// Compute fine-grid references (expensive) for problems without a
    /// closed form.
    bool fine_reference = false;
    /// Recorded in the manifest; no run draws random numbers.
    std::uint64_t seed = 0;

    /// Throws ConfigError for an unknown problem, invalid scheme, grid or
    /// time-step settings.
    void validate() const;
};

struct Simulation {
    CellField u;
    IntegrationResult integration;
};

/// Integrates the problem's initial data on n cells (per direction) to
/// t_final. The Lax-Friedrichs alpha is the global maximum wave speed,
/// refreshed every step. Euler runs reject stages with nonpositive density
/// or pressure and reconstruct in p.variables. Throws DivergenceError naming the step and stage.
Simulation simulate(const Problem& p, const WeightScheme& scheme, int n, const TimeStepRule& step,
                    double t_final, const StepOptions& opt = {});

/// Smallest m with m * n >= 2001.
int fine_grid_factor(int n);

/// Means of consecutive blocks of `factor` cells, component by component.
CellField block_average(const CellField& fine, int factor, const Grid1D& coarse);

/// Exact cell averages, or WENO-M on fine_grid_factor(n) * n cells
/// averaged down to n cells. Throws ConfigError when the problem has
/// neither.
CellField reference_solution(const Problem& p, int n, double t_final,
                             const TimeStepRule& step);

struct RunResult {
    std::string problem;
    WeightScheme scheme;
    int n = 0;
    TimeStepRule step;
    double t_final = 0.0;
    Simulation sim;
    std::optional<CellField> reference;
    std::optional<ErrorNorms> errors;
    double wall_seconds = 0.0;
    std::vector<std::string> files;
};

/// Runs one configuration. Writes solution.csv, reference.csv and
/// errors.csv when a reference exists, manifest.txt and plot.gp.
RunResult run_problem(const RunConfig& cfg);

struct ConvergenceResult {
    std::string problem;
    WeightScheme scheme;
    ErrorReport report;
    double wall_seconds = 0.0;
    std::vector<std::string> files;
};

/// Runs every grid of cfg.n_list (or the problem's default list) in
/// parallel worker threads and builds the error report. Writes errors.csv,
/// manifest.txt and plot.gp.
ConvergenceResult converge(const RunConfig& cfg);

}  // namespace weno
