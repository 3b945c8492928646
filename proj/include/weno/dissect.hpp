/// @file dissect.hpp
/// @brief Stage-by-stage analysis of one TVD-RK3 step on the advected
///        single-jump Riemann problem: captured weights and fluxes,
///        closed-form stage errors, and the comparison tables.

#pragma once

#include <array>
#include <string>
#include <vector>

#include "weno/weno.hpp"

namespace weno {

/// u_t + u_x = 0 with u = uL for x < 0 and uR for x > 0 on cells of width
/// dx, with the cell I_0 = [0, dx]; one step uses dt = nu dx.
struct RiemannSetup {
    double uL = 1.0;
    double uR = 0.0;
    double nu = 0.5;
    double dx = 0.01;
    std::vector<WeightScheme> schemes;

    double delta() const { return uL - uR; }
    /// Throws ConfigError unless 0 < nu <= 1/2, delta > 0 and dx > 0.
    void validate() const;
    /// Exact cell average after one step.
    double exact_after_step(int j) const;
};

/// Schemes used by the comparison tables: JS (eps 1e-12), M, Z and ZR with
/// eps 1e-40; ZR uses the root p = 3 that the tabulated magnitudes imply.
std::vector<WeightScheme> table_schemes();
/// Schemes of the T = 1 comparison: as table_schemes() but ZR with p = 2.
std::vector<WeightScheme> final_table_schemes();
/// The ZL rows (p, q) = (1,1), (2,1), (1,2), (2,2).
std::vector<WeightScheme> table_zl_schemes();

/// Combinations of the weights of one interface.
struct Combos {
    double A, B, C, D, E;
};
Combos combos(const Triple& w);

/// Cells j in [kCellLo, kCellHi) are recorded; face j denotes x_{j+1/2}.
inline constexpr int kCellLo = -15;
inline constexpr int kCellHi = 15;

struct StageReport {
    int stage = 1;
    std::vector<Triple> weights;          ///< face j+1/2, indexed j - kCellLo
    std::vector<double> flux;             ///< face j+1/2
    std::vector<double> solution;         ///< cell j after the stage
    std::vector<double> measured_error;   ///< solution minus exact one-step average
    std::vector<double> formula_error;    ///< closed-form error, 0 outside its support

    const Triple& weight_at(int j) const { return weights[j - kCellLo]; }
    double flux_at(int j) const { return flux[j - kCellLo]; }
    double solution_at(int j) const { return solution[j - kCellLo]; }
    double measured_at(int j) const { return measured_error[j - kCellLo]; }
    double formula_at(int j) const { return formula_error[j - kCellLo]; }
};

struct SchemeAnalysis {
    WeightScheme scheme;
    std::array<StageReport, 3> stages;
};

struct StepAnalysis {
    RiemannSetup setup;
    std::vector<SchemeAnalysis> schemes;
};

/// Runs one solver step per scheme, capturing every stage, and evaluates
/// the closed-form stage errors from the captured weights.
StepAnalysis analyze_step(const RiemannSetup& setup);

/// Closed-form errors of one stage given the stage's weights (indexed as in
/// StageReport) and the previous stage's formula errors. Cells outside the
/// support are zero.
std::vector<double> stage_formula_errors(int stage, const std::vector<Triple>& weights,
                                         const std::vector<double>& previous, double nu, double delta);

enum class TableKind { Weights, Fluxes, Solutions };

std::string table_kind_name(TableKind k);
TableKind parse_table_kind(const std::string& s);

struct TableRow {
    std::string label;
    std::vector<double> values;
};

struct Table {
    std::string title;
    std::vector<double> coords;
    std::vector<TableRow> rows;

    /// Aligned text with the coordinates as column heads.
    std::string to_text() const;
    /// CSV with a `row` column followed by one column per coordinate; labels
    /// containing commas are quoted.
    std::string to_csv() const;
};

/// Table cell formatting: 6 decimals (trailing zeros trimmed) from 1e-3 up,
/// otherwise 3-digit e-notation; zero prints as "0".
std::string format_value(double v);

/// Columns: weights and fluxes at the faces -0.03 .. 0.04 / 0.07 / 0.10 and
/// solutions at the cells -0.025 .. 0.035 / 0.065 / 0.095 for stages 1 / 2 / 3.
Table render_table(const StepAnalysis& a, int stage, TableKind kind);

/// Advects the Riemann data to time t_final with each scheme and tabulates
/// the cells 0.965 .. 1.035 (relative to dx = 0.01 and t_final = 1).
Table final_time_comparison(const RiemannSetup& setup, double t_final);

}  // namespace weno
