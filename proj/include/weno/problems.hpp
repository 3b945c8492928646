/// @file problems.hpp
/// @brief Registry of benchmark problems: domains, initial cell averages,
///        boundary conditions, default schemes and reference solutions.

#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "weno/integrate.hpp"
#include "weno/mesh.hpp"
#include "weno/physics.hpp"
#include "weno/solver.hpp"
#include "weno/weno.hpp"

namespace weno {

enum class ProblemKind { Scalar1D, Euler1D, Scalar2D };

/// How a problem's error report is obtained.
enum class ReferenceKind {
    None,      ///< no error report
    Exact,     ///< closed-form cell averages
    FineGrid,  ///< WENO-M on a refined grid, block-averaged; computed on request
};

std::string kind_name(ProblemKind k);
std::string reference_name(ReferenceKind k);

struct Problem {
    std::string id;
    std::string summary;
    ProblemKind kind = ProblemKind::Scalar1D;
    double xa = 0.0, xb = 1.0;
    double ya = 0.0, yb = 1.0;
    /// Default cells per direction.
    int n = 40;
    /// Default grid sizes of a convergence sweep.
    std::vector<int> n_list;
    double t_final = 1.0;
    WeightScheme scheme = WeightScheme::zl(2.0, 1.0);
    TimeStepRule step = TimeStepRule::cfl(0.4);
    ScalarModel model = ScalarModel::Advection;
    FluxModel2D model2d{};
    /// Euler problems only.
    EulerVariables variables = EulerVariables::Conserved;
    Boundaries1D bc1d{};
    Boundaries2D bc2d{};
    ReferenceKind reference = ReferenceKind::None;

    /// Initial cell averages on the n-cell (or n x n) grid.
    std::function<CellField(int n)> initial;
    /// Exact cell averages at time t; set when reference == Exact.
    std::function<CellField(int n, double t)> exact;

    Grid1D grid1d(int cells) const;
    Grid2D grid2d(int cells) const;
    /// Number of conserved components per cell.
    int components() const { return kind == ProblemKind::Euler1D ? 3 : 1; }
};

/// All registered problems in a fixed order.
const std::vector<Problem>& problem_registry();
/// Throws ConfigError for an unknown id.
const Problem& find_problem(const std::string& id);

/// Solves U = u0(x - c U t) for U by Newton's method (tolerance 1e-14, at
/// most 100 iterations), falling back to bisection on [lo, hi] when Newton
/// fails. The residual is monotone before the characteristics cross.
double characteristic_value(const std::function<double(double)>& u0,
                            const std::function<double(double)>& du0, double x, double t,
                            double c, double lo, double hi);

using Point2 = std::array<double, 2>;

/// Area of the intersection of a convex polygon (counter-clockwise
/// vertices) with the rectangle [x0, x1] x [y0, y1].
double polygon_rect_overlap(const std::vector<Point2>& polygon, double x0, double x1, double y0,
                            double y1);

/// Cell averages of the conserved variables of a Riemann solution centred
/// at x0 at time t > 0, each cell split into `subcells` pieces.
CellField riemann_cell_averages(const Primitive& left, const Primitive& right, double x0, double t,
                                const Grid1D& grid, int subcells = 32);

}  // namespace weno
