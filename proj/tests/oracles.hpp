/// @file oracles.hpp
/// @brief Independent reference computations shared by the unit tests and
///        the acceptance binary.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "weno/coefficients.hpp"
#include "weno/weno.hpp"

namespace oracle {

/// Offset of a reconstruction node from the cell center, in cell widths.
inline double node_offset(weno::Node node) {
    const double half_xi = 0.5 * std::sqrt(3.0 / 5.0);
    switch (node) {
        case weno::Node::Interface: return 0.5;
        case weno::Node::GaussMinus: return -half_xi;
        case weno::Node::GaussCenter: return 0.0;
        case weno::Node::GaussPlus: return half_xi;
    }
    return 0.0;
}

/// Point value at x of the polynomial whose cell averages over the unit
/// cells first, first+1, ... (cell k spans [k - 1/2, k + 1/2]) are v. The
/// primitive V is interpolated at the faces and differentiated.
inline double primitive_reconstruction(const std::vector<double>& v, int first, double x) {
    const std::size_t m = v.size() + 1;
    std::vector<double> face(m), prim(m, 0.0);
    for (std::size_t k = 0; k < m; ++k) face[k] = first - 0.5 + static_cast<double>(k);
    for (std::size_t k = 1; k < m; ++k) prim[k] = prim[k - 1] + v[k - 1];
    double out = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
        double dk = 0.0;
        for (std::size_t l = 0; l < m; ++l) {
            if (l == k) continue;
            double term = 1.0 / (face[k] - face[l]);
            for (std::size_t j = 0; j < m; ++j)
                if (j != k && j != l) term *= (x - face[j]) / (face[k] - face[j]);
            dk += term;
        }
        out += prim[k] * dk;
    }
    return out;
}

/// Candidate s evaluated from the window v_{i-2} .. v_{i+2}.
inline double candidate(const std::array<double, 5>& w, int s, weno::Node node) {
    return primitive_reconstruction({w[s], w[s + 1], w[s + 2]}, -2 + s, node_offset(node));
}

/// Five-cell big-stencil value.
inline double big_stencil(const std::array<double, 5>& w, weno::Node node) {
    return primitive_reconstruction({w.begin(), w.end()}, -2, node_offset(node));
}

/// Distance between two doubles in units of the last place of the larger.
inline double ulps(double a, double b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    if (scale == 0.0) return 0.0;
    return std::abs(a - b) / (std::numeric_limits<double>::epsilon() * scale);
}

/// max_s |omega_s - d_s| for the cell centred at x0 of width h, with cell
/// averages taken from the antiderivative F.
template <class Antiderivative>
double weight_deviation(const weno::WeightScheme& s, const Antiderivative& F, double x0, double h) {
    std::array<double, 5> w{};
    for (int k = 0; k < 5; ++k) {
        const double a = x0 + (k - 2.5) * h;
        w[k] = (F(a + h) - F(a)) / h;
    }
    const weno::Triple beta = weno::smoothness_indicators(w.data());
    const weno::Triple om = weno::nonlinear_weights(beta, weno::kLinearWeights, s);
    double dev = 0.0;
    for (int k = 0; k < 3; ++k) dev = std::max(dev, std::abs(om[k] - weno::kLinearWeights[k]));
    return dev;
}

/// Observed orders of weight_deviation across the grids 40, 80, 160 on
/// [-1, 1]; the cell containing x0 is centred there on every grid.
template <class Antiderivative>
std::array<double, 2> deviation_orders(const weno::WeightScheme& s, const Antiderivative& F, double x0) {
    const double d40 = weight_deviation(s, F, x0, 2.0 / 40);
    const double d80 = weight_deviation(s, F, x0, 2.0 / 80);
    const double d160 = weight_deviation(s, F, x0, 2.0 / 160);
    return {std::log2(d40 / d80), std::log2(d80 / d160)};
}

/// Antiderivative of sin(pi x); its derivative vanishes nowhere near 0.3.
inline double sine_primitive(double x) { return -std::cos(std::numbers::pi * x) / std::numbers::pi; }

/// Antiderivative of x^2 + x^3, which has a first-order critical point at
/// 0 without the even symmetry that would make every deviation vanish.
inline double critical_primitive(double x) { return x * x * x / 3.0 + x * x * x * x / 4.0; }

}  // namespace oracle
