/// @file weno.hpp
/// @brief Smoothness indicators, the nonlinear weight families and the
///        fifth-order interface and Gauss-point reconstructions.

#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "weno/coefficients.hpp"

namespace weno {

using Triple = std::array<double, 3>;

/// Linear weights (1/10, 3/5, 3/10) of the interface reconstruction.
inline constexpr Triple kLinearWeights = {0.1, 0.6, 0.3};

enum class Family { JS, M, Z, ZR, ZL, Linear };

/// Weight-family selection plus its parameters. `p` is the root exponent for
/// ZR and the logarithm tuner for ZL; `q` is the ZL power.
struct WeightScheme {
    Family family = Family::JS;
    double eps = 1e-6;
    double p = 1.0;
    double q = 1.0;

    static WeightScheme js(double eps = 1e-6) { return {Family::JS, eps, 1.0, 1.0}; }
    static WeightScheme m(double eps = 1e-40) { return {Family::M, eps, 1.0, 1.0}; }
    static WeightScheme z(double eps = 1e-40) { return {Family::Z, eps, 1.0, 1.0}; }
    static WeightScheme zr(double p = 2.0, double eps = 1e-40) { return {Family::ZR, eps, p, 1.0}; }
    static WeightScheme zl(double p, double q, double eps = 1e-40) { return {Family::ZL, eps, p, q}; }
    static WeightScheme linear() { return {Family::Linear, 1.0, 1.0, 1.0}; }

    /// Throws ConfigError when eps, p or q are outside the family's domain.
    void validate() const;
    /// Short label such as "JS", "ZR(p=2)" or "ZL(p=1,q=2)".
    std::string label() const;
};

/// Parses "js", "m", "z", "zr", "zl" or "linear" (case-insensitive).
Family parse_family(const std::string& name);
/// Lower-case family name as accepted by parse_family.
std::string family_name(Family f);
/// Scheme with the default eps for the family (1e-6 for JS, 1e-40 otherwise).
WeightScheme default_scheme(Family f, double p = 2.0, double q = 1.0);

enum class Orientation { LeftBiased, RightBiased };

/// Five consecutive cell averages v_{i-2} .. v_{i+2}. A right-biased window
/// reconstructs at x_{i-1/2} and is processed as the reversed window.
struct Window5 {
    std::array<double, 5> v{};
    Orientation orientation = Orientation::LeftBiased;

    /// Values in left-biased order.
    std::array<double, 5> oriented() const;
};

/// beta_0, beta_1, beta_2 of the window (orientation applied).
Triple smoothness_indicators(const Window5& w);
Triple smoothness_indicators(const double* v);

double map_henrick(double omega, double d);

Triple weights_js(const Triple& beta, const Triple& d, double eps);
Triple weights_m(const Triple& beta, const Triple& d, double eps);
Triple weights_z(const Triple& beta, const Triple& d, double eps);
Triple weights_zr(const Triple& beta, const Triple& d, double eps, double p);
Triple weights_zl(const Triple& beta, const Triple& d, double eps, double p, double q);

/// Dispatches on the scheme's family.
Triple nonlinear_weights(const Triple& beta, const Triple& d, const WeightScheme& s);

/// Fifth-order reconstruction at the cell edge selected by the window's
/// orientation. When `weights` is non-null the nonlinear weights are stored.
double reconstruct_interface(const Window5& w, const WeightScheme& s, Triple* weights = nullptr);

/// Left-biased reconstruction from five contiguous values in memory with
/// the given stride; used by the solvers.
double reconstruct_left(const double* v, const WeightScheme& s, Triple* weights = nullptr);
/// Right-biased counterpart: v points at v_{i-2}, result is v+_{i-1/2}.
double reconstruct_right(const double* v, const WeightScheme& s);

/// Point value at one Gauss node inside cell i.
double reconstruct_gauss_point(const Window5& w, const WeightScheme& s, Node node);

/// Point values at (Minus, Center, Plus) sharing one set of smoothness
/// indicators. v holds the five averages in order.
std::array<double, 3> reconstruct_gauss_nodes(const double* v, const WeightScheme& s);

/// reconstruct_left for `count` windows: window j starts at
/// v + j * window_stride and its five values are elem_stride apart. A
/// negative elem_stride walks a window backwards, giving the right-biased
/// value. Agrees with the per-window call up to round-off.
void reconstruct_left_batch(const double* v, std::ptrdiff_t elem_stride, std::ptrdiff_t window_stride, int count,
                            const WeightScheme& s, double* out);

/// reconstruct_gauss_nodes for the windows v[j .. j+4], j = 0 .. count-1,
/// evaluated in bulk. Agrees with the per-window call up to round-off.
void reconstruct_gauss_nodes_batch(const double* v, int count, const WeightScheme& s, double* minus,
                                   double* center, double* plus);

/// Combined center-node weights sigma+ w+ - sigma- w-; these may be negative.
Triple center_node_weights(const Triple& beta, const WeightScheme& s);

}  // namespace weno
