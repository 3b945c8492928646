/// @file physics.cpp
/// @brief Flux models and wave-speed bounds.

#include "weno/physics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/tools/minima.hpp>

#include "weno/errors.hpp"

namespace weno {

std::string model_name(ScalarModel m) {
    switch (m) {
        case ScalarModel::Advection: return "advection";
        case ScalarModel::Burgers: return "burgers";
        case ScalarModel::QuarticNonconvex: return "quartic";
        case ScalarModel::BuckleyLeverett: return "buckley-leverett";
    }
    return "?";
}

double scalar_flux(ScalarModel m, double u) {
    switch (m) {
        case ScalarModel::Advection: return u;
        case ScalarModel::Burgers: return 0.5 * u * u;
        case ScalarModel::QuarticNonconvex: return 0.25 * (u * u - 1.0) * (u * u - 4.0);
        case ScalarModel::BuckleyLeverett: {
            const double v = 1.0 - u;
            return 4.0 * u * u / (4.0 * u * u + v * v);
        }
    }
    return 0.0;
}

double scalar_flux_derivative(ScalarModel m, double u) {
    switch (m) {
        case ScalarModel::Advection: return 1.0;
        case ScalarModel::Burgers: return u;
        case ScalarModel::QuarticNonconvex: return u * (u * u - 2.5);
        case ScalarModel::BuckleyLeverett: {
            const double v = 1.0 - u;
            const double den = 4.0 * u * u + v * v;
            return 8.0 * u * v / (den * den);
        }
    }
    return 0.0;
}

double max_abs_derivative(ScalarModel m, double lo, double hi) {
    if (lo > hi) std::swap(lo, hi);
    auto g = [m](double u) { return std::abs(scalar_flux_derivative(m, u)); };
    double best = std::max(g(lo), g(hi));
    switch (m) {
        case ScalarModel::Advection: return 1.0;
        case ScalarModel::Burgers: return best;
        case ScalarModel::QuarticNonconvex: {
            const double r = std::sqrt(5.0 / 6.0);
            for (double c : {-r, r})
                if (c > lo && c < hi) best = std::max(best, g(c));
            return best;
        }
        case ScalarModel::BuckleyLeverett: {
            if (hi == lo) return best;
            const int samples = 256;
            double arg = lo;
            for (int k = 0; k <= samples; ++k) {
                const double u = lo + (hi - lo) * k / samples;
                if (g(u) > best) {
                    best = g(u);
                    arg = u;
                }
            }
            const double h = (hi - lo) / samples;
            const auto r = boost::math::tools::brent_find_minima(
                [&](double u) { return -g(u); }, std::max(lo, arg - h), std::min(hi, arg + h), 40);
            return std::max(best, -r.second);
        }
    }
    return best;
}

Conserved to_conserved(const Primitive& w, double gamma) {
    return {w.rho, w.rho * w.u, w.p / (gamma - 1.0) + 0.5 * w.rho * w.u * w.u};
}

Primitive to_primitive(const double* U, double gamma) {
    if (!(U[0] > 0.0)) throw StateError("nonpositive density");
    const double u = U[1] / U[0];
    return {U[0], u, (gamma - 1.0) * (U[2] - 0.5 * U[1] * u)};
}

Conserved euler_flux(const double* U, double gamma) {
    const Primitive w = to_primitive(U, gamma);
    return {U[1], U[1] * w.u + w.p, w.u * (U[2] + w.p)};
}

double sound_speed(const Primitive& w, double gamma) {
    if (!(w.rho > 0.0)) throw StateError("nonpositive density");
    if (!(w.p > 0.0)) throw StateError("nonpositive pressure");
    return std::sqrt(gamma * w.p / w.rho);
}

double max_wave_speed(const CellField& field, ScalarModel m) {
    if (m == ScalarModel::Advection) return 1.0;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    if (field.is_2d()) {
        const Grid2D& g = field.grid2d();
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) {
                lo = std::min(lo, field.at(i, j));
                hi = std::max(hi, field.at(i, j));
            }
    } else {
        for (int i = 0; i < field.grid1d().n; ++i) {
            lo = std::min(lo, field(i));
            hi = std::max(hi, field(i));
        }
    }
    return max_abs_derivative(m, lo, hi);
}

double max_wave_speed_euler(const CellField& field, double gamma) {
    if (field.components() != 3 || field.is_2d()) throw ConfigError("Euler wave speed needs a 1D 3-component field");
    double a = 0.0;
    for (int i = 0; i < field.grid1d().n; ++i) {
        const Primitive w = to_primitive(&field.data()[field.index(i, 0)], gamma);
        a = std::max(a, std::abs(w.u) + sound_speed(w, gamma));
    }
    return a;
}

}  // namespace weno
