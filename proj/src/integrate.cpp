/// @file integrate.cpp
/// @brief TVD-RK3 stepping.

#include "weno/integrate.hpp"

#include <cmath>
#include <limits>

#include "weno/errors.hpp"

namespace weno {

namespace {

void evaluate(const SpatialOperator& L, CellField& u, CellField& k, int step, int stage) {
    try {
        L(u, k);
    } catch (const StateError& e) {
        throw DivergenceError(step, stage, e.what());
    }
}

void verify(const CellField& u, const StepOptions& opt, int stage) {
    if (!u.interior_finite()) throw DivergenceError(opt.step_index, stage, "non-finite cell average");
    if (opt.check) {
        try {
            opt.check(u);
        } catch (const StateError& e) {
            throw DivergenceError(opt.step_index, stage, e.what());
        }
    }
}

}  // namespace

void rk3_step(CellField& u, const SpatialOperator& L, double dt, const StepOptions& opt) {
    CellField u0 = u;
    CellField k = u;
    std::vector<double>& x = u.data();
    const std::vector<double>& x0 = u0.data();
    const std::vector<double>& kd = k.data();
    const std::size_t n = x.size();

    evaluate(L, u, k, opt.step_index, 1);
    for (std::size_t i = 0; i < n; ++i) x[i] = x0[i] + dt * kd[i];
    verify(u, opt, 1);
    if (opt.hook) opt.hook(1, u);

    evaluate(L, u, k, opt.step_index, 2);
    for (std::size_t i = 0; i < n; ++i) x[i] = 0.75 * x0[i] + 0.25 * x[i] + 0.25 * dt * kd[i];
    verify(u, opt, 2);
    if (opt.hook) opt.hook(2, u);

    evaluate(L, u, k, opt.step_index, 3);
    for (std::size_t i = 0; i < n; ++i) x[i] = x0[i] / 3.0 + 2.0 / 3.0 * x[i] + 2.0 / 3.0 * dt * kd[i];
    verify(u, opt, 3);
    if (opt.hook) opt.hook(3, u);
}

double cfl_dt(double cfl, double alpha, double dx) {
    if (alpha <= 0.0) return std::numeric_limits<double>::infinity();
    return cfl * dx / alpha;
}

double cfl_dt_2d(double cfl, double alpha_x, double alpha_y, double dx, double dy) {
    const double rate = alpha_x / dx + alpha_y / dy;
    if (rate <= 0.0) return std::numeric_limits<double>::infinity();
    return cfl / rate;
}

IntegrationResult integrate_to(CellField& u, const SpatialOperator& L, double t_final,
                               const StepPlanner& plan, const StepOptions& opt) {
    IntegrationResult r;
    StepOptions o = opt;
    while (r.time < t_final) {
        double dt;
        try {
            dt = plan(u);
        } catch (const StateError& e) {
            throw DivergenceError(r.steps + 1, 0, e.what());
        }
        if (!(dt > 0.0)) throw DivergenceError(r.steps + 1, 0, "nonpositive time step");
        const double remaining = t_final - r.time;
        // Avoid a sliver step caused by accumulated round-off in t.
        const bool last = dt >= remaining * (1.0 - 1e-12);
        if (last) dt = remaining;
        o.step_index = r.steps + 1;
        rk3_step(u, L, dt, o);
        ++r.steps;
        r.time = last ? t_final : r.time + dt;
    }
    return r;
}

}  // namespace weno
