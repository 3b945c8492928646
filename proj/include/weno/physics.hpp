/// @file physics.hpp
/// @brief Scalar flux catalog, 1D Euler fluxes and the Lax-Friedrichs flux.

#pragma once

#include <array>
#include <string>

#include "weno/mesh.hpp"

namespace weno {

enum class ScalarModel { Advection, Burgers, QuarticNonconvex, BuckleyLeverett };

std::string model_name(ScalarModel m);

double scalar_flux(ScalarModel m, double u);
double scalar_flux_derivative(ScalarModel m, double u);
/// max |f'(u)| for u in [lo, hi].
double max_abs_derivative(ScalarModel m, double lo, double hi);

/// h(a, b) = 1/2 [f(a) + f(b) - alpha (b - a)], given fa = f(a), fb = f(b).
inline double lf_flux(double fa, double fb, double a, double b, double alpha) {
    return 0.5 * (fa + fb - alpha * (b - a));
}

/// Ratio of specific heats used by every Euler problem.
inline constexpr double kGamma = 1.4;

struct Primitive {
    double rho = 1.0;
    double u = 0.0;
    double p = 1.0;
};

using Conserved = std::array<double, 3>;

Conserved to_conserved(const Primitive& w, double gamma = kGamma);
/// Throws StateError for nonpositive density.
Primitive to_primitive(const double* U, double gamma = kGamma);
/// (rho u, rho u^2 + P, u (E + P)); throws StateError for nonpositive density.
Conserved euler_flux(const double* U, double gamma = kGamma);
/// sqrt(gamma P / rho); throws StateError for nonpositive pressure or density.
double sound_speed(const Primitive& w, double gamma = kGamma);

/// Largest |f'| over the interior data range of a scalar field.
double max_wave_speed(const CellField& field, ScalarModel m);
/// Largest |u| + c over the interior cells of an Euler field.
double max_wave_speed_euler(const CellField& field, double gamma = kGamma);

}  // namespace weno
