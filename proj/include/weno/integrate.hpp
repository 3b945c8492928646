/// @file integrate.hpp
/// @brief Third-order TVD Runge-Kutta stepping and CFL time-step control.

#pragma once

#include <functional>

#include "weno/mesh.hpp"

namespace weno {

/// Conservative tendency: fills the ghosts of u as needed and writes L(u)
/// into dudt (same shape as u).
using SpatialOperator = std::function<void(CellField& u, CellField& dudt)>;

/// Observer called after each stage with the stage index (1, 2, 3) and the
/// stage field. Must not modify the field.
using StageHook = std::function<void(int stage, const CellField& u)>;

/// Admissibility check run after each stage; throws StateError to reject.
using StageCheck = std::function<void(const CellField& u)>;

struct StepOptions {
    StageHook hook;
    StageCheck check;
    /// Step number reported in divergence errors.
    int step_index = 0;
};

/// One step of u1 = u + dt L(u); u2 = 3/4 u + 1/4 u1 + 1/4 dt L(u1);
/// u <- 1/3 u + 2/3 u2 + 2/3 dt L(u2). Throws DivergenceError naming the
/// stage when a stage yields non-finite or rejected values.
void rk3_step(CellField& u, const SpatialOperator& L, double dt, const StepOptions& opt = {});

/// dt = cfl * dx / alpha, or +infinity when alpha is zero.
double cfl_dt(double cfl, double alpha, double dx);
/// dt = cfl / (alpha_x / dx + alpha_y / dy), or +infinity when both are zero.
double cfl_dt_2d(double cfl, double alpha_x, double alpha_y, double dx, double dy);

/// Time-step rule: either a CFL number applied to the current wave speed or
/// a fixed multiple of the cell width.
struct TimeStepRule {
    enum class Mode { Cfl, DtScale };
    Mode mode = Mode::Cfl;
    double value = 0.4;

    static TimeStepRule cfl(double c) { return {Mode::Cfl, c}; }
    static TimeStepRule dt_scale(double c) { return {Mode::DtScale, c}; }
};

/// Per-step preparation: receives the current field and returns the
/// unclamped dt for the next step (it may also refresh operator state such
/// as the global Lax-Friedrichs alpha).
using StepPlanner = std::function<double(const CellField& u)>;

struct IntegrationResult {
    int steps = 0;
    double time = 0.0;
};

/// Advances u from t = 0 to t_final, clamping the last step to land on it.
IntegrationResult integrate_to(CellField& u, const SpatialOperator& L, double t_final,
                               const StepPlanner& plan, const StepOptions& opt = {});

}  // namespace weno
