/// @file mesh.hpp
/// @brief Uniform 1D/2D grids, cell-average fields with ghost layers, and
///        boundary-condition fills.

#pragma once

#include <functional>
#include <span>
#include <vector>

namespace weno {

/// Ghost-layer width needed by the five-cell reconstruction stencil.
inline constexpr int kGhost = 3;

/// Uniform grid on [a, b] with n cells.
struct Grid1D {
    double a = 0.0;
    double b = 1.0;
    int n = 1;
    int ghost = kGhost;

    double dx() const { return (b - a) / n; }
    /// Center of cell i (ghost cells use i < 0 or i >= n).
    double center(int i) const { return a + (i + 0.5) * dx(); }
    /// Left face of cell i, i.e. x_{i-1/2}.
    double face(int i) const { return a + i * dx(); }
    /// Throws ConfigError when the grid is degenerate.
    void validate() const;
};

/// Uniform tensor-product grid on [ax, bx] x [ay, by].
struct Grid2D {
    double ax = 0.0;
    double bx = 1.0;
    double ay = 0.0;
    double by = 1.0;
    int nx = 1;
    int ny = 1;
    int ghost = kGhost;

    double dx() const { return (bx - ax) / nx; }
    double dy() const { return (by - ay) / ny; }
    double xc(int i) const { return ax + (i + 0.5) * dx(); }
    double yc(int j) const { return ay + (j + 0.5) * dy(); }
    void validate() const;
};

/// Cell averages over a 1D or 2D grid, including ghost cells, with m
/// components per cell. Storage is cell-major: all components of a cell
/// are contiguous.
class CellField {
public:
    CellField() = default;
    explicit CellField(const Grid1D& g, int components = 1);
    explicit CellField(const Grid2D& g, int components = 1);

    bool is_2d() const { return two_d_; }
    int components() const { return m_; }
    const Grid1D& grid1d() const { return g1_; }
    const Grid2D& grid2d() const { return g2_; }

    /// Number of interior cells (n or nx*ny).
    int interior_size() const;

    double& operator()(int i, int c = 0) { return data_[index(i, c)]; }
    double operator()(int i, int c = 0) const { return data_[index(i, c)]; }
    double& at(int i, int j, int c = 0) { return data_[index(i, j, c)]; }
    double at(int i, int j, int c = 0) const { return data_[index(i, j, c)]; }

    std::vector<double>& data() { return data_; }
    const std::vector<double>& data() const { return data_; }

    /// Row stride in doubles for 2D fields (one row of cells incl. ghosts).
    int row_stride() const { return (g2_.nx + 2 * g2_.ghost) * m_; }

    std::size_t index(int i, int c) const {
        return static_cast<std::size_t>((i + g1_.ghost) * m_ + c);
    }
    std::size_t index(int i, int j, int c) const {
        return static_cast<std::size_t>(((j + g2_.ghost) * (g2_.nx + 2 * g2_.ghost) +
                                         (i + g2_.ghost)) * m_ + c);
    }

    /// Sum of interior averages times cell volume, per component.
    double total(int c = 0) const;
    /// True when every interior entry is finite.
    bool interior_finite() const;

private:
    Grid1D g1_{};
    Grid2D g2_{};
    bool two_d_ = false;
    int m_ = 1;
    std::vector<double> data_;
};

enum class BcKind { Periodic, Outflow, Reflective, DirichletInflow };

/// One side of a boundary. DirichletInflow carries a pointwise profile of
/// the coordinate tangent to the boundary (in 1D the ghost-cell center).
struct BoundaryCondition {
    BcKind kind = BcKind::Periodic;
    std::function<double(double)> profile;

    static BoundaryCondition periodic() { return {BcKind::Periodic, {}}; }
    static BoundaryCondition outflow() { return {BcKind::Outflow, {}}; }
    static BoundaryCondition reflective() { return {BcKind::Reflective, {}}; }
    static BoundaryCondition inflow(std::function<double(double)> f) {
        return {BcKind::DirichletInflow, std::move(f)};
    }
};

struct Boundaries1D {
    BoundaryCondition left = BoundaryCondition::periodic();
    BoundaryCondition right = BoundaryCondition::periodic();
};

struct Boundaries2D {
    BoundaryCondition x_lo = BoundaryCondition::periodic();
    BoundaryCondition x_hi = BoundaryCondition::periodic();
    BoundaryCondition y_lo = BoundaryCondition::periodic();
    BoundaryCondition y_hi = BoundaryCondition::periodic();
};

/// Populate the ghost layers of a 1D field. Reflective walls mirror the
/// cells and flip the momentum sign; they require a 3-component field.
void fill_ghosts(CellField& field, const Boundaries1D& bc);

/// Populate the ghost layers of a 2D field, y-direction first and then x
/// over all rows so corner ghosts are consistent.
void fill_ghosts(CellField& field, const Boundaries2D& bc);

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Rule with the requested number of points (1 to 10).
GaussRule gauss_rule(int points);

/// Cell averages of fn on each interior cell. Cells containing a point of
/// `breaks` are split there and each piece is integrated separately, which
/// makes piecewise-constant data exact.
CellField cell_average_of(const std::function<double(double)>& fn, const Grid1D& grid,
                          int points = 5, std::span<const double> breaks = {});

/// Multi-component variant; fn writes m values for a point.
CellField cell_average_of(const std::function<void(double, std::span<double>)>& fn, int m,
                          const Grid1D& grid, int points = 5,
                          std::span<const double> breaks = {});

/// Tensor-product Gauss averages on each interior cell of a 2D grid.
CellField cell_average_of(const std::function<double(double, double)>& fn, const Grid2D& grid,
                          int points = 5);

/// Average of fn over [lo, hi] by Gauss quadrature, split at breaks.
double interval_average(const std::function<double(double)>& fn, double lo, double hi,
                        const GaussRule& rule, std::span<const double> breaks = {});

}  // namespace weno
