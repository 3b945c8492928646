/// @file riemann.hpp
/// @brief Exact solution of the 1D Euler Riemann problem for an ideal gas.

#pragma once

#include "weno/physics.hpp"

namespace weno {

/// Self-similar exact solution; sample(x/t) returns the primitive state.
class EulerRiemannSolution {
public:
    EulerRiemannSolution(const Primitive& left, const Primitive& right, double gamma = kGamma);

    double p_star() const { return p_star_; }
    double u_star() const { return u_star_; }
    /// Densities on either side of the contact.
    double rho_star_left() const;
    double rho_star_right() const;

    Primitive sample(double xi) const;

    /// Smallest and largest density taken by the solution.
    double min_density() const;
    double max_density() const;

private:
    Primitive l_, r_;
    double gamma_;
    double cl_, cr_;
    double p_star_ = 0.0;
    double u_star_ = 0.0;
};

}  // namespace weno
