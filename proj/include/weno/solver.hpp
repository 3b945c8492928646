/// @file solver.hpp
/// @brief Conservative semi-discrete operators: 1D scalar, 1D Euler and 2D
///        scalar with three-point Gauss interface quadrature.

#pragma once

#include <array>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "weno/integrate.hpp"
#include "weno/mesh.hpp"
#include "weno/physics.hpp"
#include "weno/weno.hpp"

namespace weno {

/// Per-face record of a 1D scalar tendency evaluation. Entry k belongs to
/// the face x_{k-1/2}, k = 0 .. n.
struct InterfaceTrace {
    std::vector<Triple> weights;  ///< weights of the left-biased reconstruction
    std::vector<double> u_minus;
    std::vector<double> u_plus;
    std::vector<double> flux;
};

struct ScalarOp1D {
    ScalarModel model = ScalarModel::Advection;
    WeightScheme scheme = WeightScheme::js();
    Boundaries1D bc{};
    /// Global Lax-Friedrichs constant, refreshed once per step.
    double alpha = 1.0;
    /// When set, every evaluation overwrites it.
    InterfaceTrace* trace = nullptr;
};

/// Fills ghosts of u, then writes -(f_{i+1/2} - f_{i-1/2}) / dx into dudt.
void tendency_1d(CellField& u, const ScalarOp1D& op, CellField& dudt);

/// Variables the Euler reconstruction acts on.
enum class EulerVariables {
    Conserved,       ///< (rho, rho u, E) componentwise
    Characteristic,  ///< eigen-coordinates of the Roe-averaged Jacobian at each face
};

std::string variables_name(EulerVariables v);
/// Accepts "conserved" or "characteristic"; throws ConfigError otherwise.
EulerVariables parse_variables(const std::string& s);

struct EulerOp1D {
    WeightScheme scheme = WeightScheme::js();
    Boundaries1D bc{};
    double alpha = 1.0;
    double gamma = kGamma;
    EulerVariables variables = EulerVariables::Conserved;
};

/// Right (columns) and left (rows) eigenvectors of the Euler flux Jacobian
/// at the Roe average of two states, ordered by the speeds u - c, u, u + c.
/// Throws StateError when the averaged sound speed is not real.
struct EigenBasis {
    std::array<Conserved, 3> right;  ///< right[k] is the k-th eigenvector
    std::array<Conserved, 3> left;   ///< left[k] . right[m] = delta_km
};
EigenBasis roe_eigenbasis(const double* a, const double* b, double gamma = kGamma);

/// Reconstruction of the three fields followed by the LF flux.
void tendency_euler(CellField& u, const EulerOp1D& op, CellField& dudt);

/// Flux pair of a 2D scalar law u_t + f(u)_x + g(u)_y = 0.
struct FluxModel2D {
    ScalarModel fx = ScalarModel::Burgers;
    ScalarModel fy = ScalarModel::Burgers;
};

struct ScalarOp2D {
    FluxModel2D model{};
    WeightScheme scheme = WeightScheme::js();
    Boundaries2D bc{};
    double alpha_x = 1.0;
    double alpha_y = 1.0;
};

/// Two-sweep tendency: interface reconstruction across each face gives line
/// averages, Gauss-point reconstruction along the face gives point values
/// at the nodes 0, +-sqrt(3/5) (half-cell units) and the face flux is the
/// Gauss sum of the point LF fluxes.
void tendency_2d(CellField& u, const ScalarOp2D& op, CellField& dudt);

/// (max |f'|, max |g'|) over the interior data range.
std::pair<double, double> max_wave_speeds_2d(const CellField& u, const FluxModel2D& m);

/// Operators bound to shared state so a step planner can update alpha.
SpatialOperator bind_operator(std::shared_ptr<ScalarOp1D> op);
SpatialOperator bind_operator(std::shared_ptr<EulerOp1D> op);
SpatialOperator bind_operator(std::shared_ptr<ScalarOp2D> op);

}  // namespace weno
