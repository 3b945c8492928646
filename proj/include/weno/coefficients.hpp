/// @file coefficients.hpp
/// @brief Exact reconstruction coefficients for the fifth-order stencil.
///
/// Every coefficient is held as a + b*sqrt(15) with rational a and b, so the
/// consistency identities between candidate stencils, linear weights and the
/// big stencil can be checked exactly. Floating-point copies are rendered
/// once from the exact values.

#pragma once

#include <array>
#include <cstdint>

#include <boost/rational.hpp>

namespace weno {

using Rational = boost::rational<std::int64_t>;

/// Element of Q(sqrt 15): a + b*sqrt(15).
struct Surd {
    Rational a{0};
    Rational b{0};

    double value() const;
    friend bool operator==(const Surd&, const Surd&) = default;
};

Surd operator+(const Surd& x, const Surd& y);
Surd operator-(const Surd& x, const Surd& y);
Surd operator*(const Surd& x, const Surd& y);

/// Where a reconstruction is evaluated inside cell i (half-cell units for
/// the Gauss nodes, xi = sqrt(3/5)).
enum class Node { Interface, GaussMinus, GaussCenter, GaussPlus };

/// Exact coefficient set for one evaluation point.
/// candidate[s][k] multiplies the k-th average of substencil s, which spans
/// cells i-2+s .. i+s. big[k] multiplies cell i-2+k of the 5-cell stencil.
struct StencilTable {
    std::array<std::array<Surd, 3>, 3> candidate;
    std::array<Surd, 3> linear;
    std::array<Surd, 5> big;
};

const StencilTable& exact_table(Node node);

/// Positive/negative split of linear weights that contain negative entries.
struct SplitWeights {
    Rational sigma_plus{0};
    Rational sigma_minus{0};
    std::array<Rational, 3> gamma_plus;
    std::array<Rational, 3> gamma_minus;
};

/// Splits d into gamma~+ = (d + 3|d|)/2 and gamma~- = gamma~+ - d, then
/// normalises each part by its sum.
SplitWeights split_linear_weights(const std::array<Rational, 3>& d);

/// Split used at the cell-center Gauss node.
const SplitWeights& center_split();

/// Floating-point rendering of one table, as used by the reconstruction.
struct NodeCoefficients {
    double c[3][3];
    double d[3];
};

const NodeCoefficients& node_coefficients(Node node);

/// Floating-point split weights for the center node.
struct SplitCoefficients {
    double sigma_plus;
    double sigma_minus;
    double gamma_plus[3];
    double gamma_minus[3];
};

const SplitCoefficients& center_split_coefficients();

}  // namespace weno
