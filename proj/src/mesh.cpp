/// @file mesh.cpp
/// @brief Grid validation, field storage, ghost fills and cell averaging.

#include "weno/mesh.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/gauss.hpp>

#include "weno/errors.hpp"

namespace weno {

void Grid1D::validate() const {
    if (!(n > 0) || !(b > a) || !std::isfinite(a) || !std::isfinite(b)) {
        throw ConfigError("Grid1D needs n > 0 and b > a");
    }
    if (ghost < kGhost) throw ConfigError("Grid1D ghost width must be at least 3");
}

void Grid2D::validate() const {
    if (!(nx > 0) || !(ny > 0) || !(bx > ax) || !(by > ay)) {
        throw ConfigError("Grid2D needs positive cell counts and nonempty bounds");
    }
    if (ghost < kGhost) throw ConfigError("Grid2D ghost width must be at least 3");
}

CellField::CellField(const Grid1D& g, int components) : g1_(g), two_d_(false), m_(components) {
    g.validate();
    if (components < 1) throw ConfigError("CellField needs at least one component");
    data_.assign(static_cast<std::size_t>(g.n + 2 * g.ghost) * m_, 0.0);
}

CellField::CellField(const Grid2D& g, int components) : g2_(g), two_d_(true), m_(components) {
    g.validate();
    if (components < 1) throw ConfigError("CellField needs at least one component");
    data_.assign(static_cast<std::size_t>(g.nx + 2 * g.ghost) * (g.ny + 2 * g.ghost) * m_, 0.0);
}

int CellField::interior_size() const { return two_d_ ? g2_.nx * g2_.ny : g1_.n; }

double CellField::total(int c) const {
    double s = 0.0;
    if (two_d_) {
        for (int j = 0; j < g2_.ny; ++j)
            for (int i = 0; i < g2_.nx; ++i) s += at(i, j, c);
        return s * g2_.dx() * g2_.dy();
    }
    for (int i = 0; i < g1_.n; ++i) s += (*this)(i, c);
    return s * g1_.dx();
}

bool CellField::interior_finite() const {
    if (two_d_) {
        for (int j = 0; j < g2_.ny; ++j)
            for (int i = 0; i < g2_.nx; ++i)
                for (int c = 0; c < m_; ++c)
                    if (!std::isfinite(at(i, j, c))) return false;
        return true;
    }
    for (int i = 0; i < g1_.n; ++i)
        for (int c = 0; c < m_; ++c)
            if (!std::isfinite((*this)(i, c))) return false;
    return true;
}

namespace {

void check_side(const BoundaryCondition& bc, int m) {
    if (bc.kind == BcKind::Reflective && m != 3) {
        throw ConfigError("reflective boundary requires a 3-component Euler field");
    }
    if (bc.kind == BcKind::DirichletInflow) {
        if (!bc.profile) throw ConfigError("inflow boundary requires a profile");
        if (m != 1) throw ConfigError("inflow boundary supports scalar fields only");
    }
}

void check_periodic_pair(const BoundaryCondition& lo, const BoundaryCondition& hi) {
    if ((lo.kind == BcKind::Periodic) != (hi.kind == BcKind::Periodic)) {
        throw ConfigError("periodic boundaries must be applied on both sides");
    }
}

// Fills ghosts along one line of cells. get(k) addresses cell k of the
// line (k in [-g, n+g)), with component stride handled by the caller.
template <class Access>
void fill_line(Access cell, int n, int g, int m, const BoundaryCondition& lo,
               const BoundaryCondition& hi, const std::function<double(int)>& lo_inflow,
               const std::function<double(int)>& hi_inflow) {
    for (int k = 1; k <= g; ++k) {
        for (int c = 0; c < m; ++c) {
            switch (lo.kind) {
                case BcKind::Periodic: cell(-k, c) = cell(n - k, c); break;
                case BcKind::Outflow: cell(-k, c) = cell(0, c); break;
                case BcKind::Reflective:
                    cell(-k, c) = (c == 1 ? -1.0 : 1.0) * cell(k - 1, c);
                    break;
                case BcKind::DirichletInflow: cell(-k, c) = lo_inflow(-k); break;
            }
            switch (hi.kind) {
                case BcKind::Periodic: cell(n - 1 + k, c) = cell(k - 1, c); break;
                case BcKind::Outflow: cell(n - 1 + k, c) = cell(n - 1, c); break;
                case BcKind::Reflective:
                    cell(n - 1 + k, c) = (c == 1 ? -1.0 : 1.0) * cell(n - k, c);
                    break;
                case BcKind::DirichletInflow: cell(n - 1 + k, c) = hi_inflow(n - 1 + k); break;
            }
        }
    }
}

}  // namespace

void fill_ghosts(CellField& field, const Boundaries1D& bc) {
    if (field.is_2d()) throw ConfigError("1D boundary set applied to a 2D field");
    const int m = field.components();
    check_side(bc.left, m);
    check_side(bc.right, m);
    check_periodic_pair(bc.left, bc.right);
    const Grid1D& g = field.grid1d();
    auto cell = [&](int i, int c) -> double& { return field(i, c); };
    auto lo = [&](int i) { return bc.left.profile(g.center(i)); };
    auto hi = [&](int i) { return bc.right.profile(g.center(i)); };
    fill_line(cell, g.n, g.ghost, m, bc.left, bc.right, lo, hi);
}

void fill_ghosts(CellField& field, const Boundaries2D& bc) {
    if (!field.is_2d()) throw ConfigError("2D boundary set applied to a 1D field");
    const int m = field.components();
    for (const auto* side : {&bc.x_lo, &bc.x_hi, &bc.y_lo, &bc.y_hi}) check_side(*side, m);
    check_periodic_pair(bc.x_lo, bc.x_hi);
    check_periodic_pair(bc.y_lo, bc.y_hi);
    const Grid2D& g = field.grid2d();
    const GaussRule rule = gauss_rule(5);

    // y-direction for interior columns.
    for (int i = 0; i < g.nx; ++i) {
        auto cell = [&](int j, int c) -> double& { return field.at(i, j, c); };
        const double xl = g.ax + i * g.dx();
        const double xr = xl + g.dx();
        auto lo = [&](int) { return interval_average(bc.y_lo.profile, xl, xr, rule); };
        auto hi = [&](int) { return interval_average(bc.y_hi.profile, xl, xr, rule); };
        fill_line(cell, g.ny, g.ghost, m, bc.y_lo, bc.y_hi, lo, hi);
    }
    // x-direction for every row, ghost rows included.
    for (int j = -g.ghost; j < g.ny + g.ghost; ++j) {
        auto cell = [&](int i, int c) -> double& { return field.at(i, j, c); };
        const double yl = g.ay + j * g.dy();
        const double yr = yl + g.dy();
        auto lo = [&](int) { return interval_average(bc.x_lo.profile, yl, yr, rule); };
        auto hi = [&](int) { return interval_average(bc.x_hi.profile, yl, yr, rule); };
        fill_line(cell, g.nx, g.ghost, m, bc.x_lo, bc.x_hi, lo, hi);
    }
}

namespace {

template <int N>
GaussRule expand_rule() {
    using Q = boost::math::quadrature::gauss<double, N>;
    const auto& x = Q::abscissa();
    const auto& w = Q::weights();
    GaussRule r;
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (x[k] == 0.0) {
            r.nodes.push_back(0.0);
            r.weights.push_back(w[k]);
        } else {
            r.nodes.push_back(-x[k]);
            r.weights.push_back(w[k]);
            r.nodes.push_back(x[k]);
            r.weights.push_back(w[k]);
        }
    }
    return r;
}

}  // namespace

GaussRule gauss_rule(int points) {
    switch (points) {
        case 1: return {{0.0}, {2.0}};
        case 2: return expand_rule<2>();
        case 3: return expand_rule<3>();
        case 4: return expand_rule<4>();
        case 5: return expand_rule<5>();
        case 6: return expand_rule<6>();
        case 7: return expand_rule<7>();
        case 8: return expand_rule<8>();
        case 9: return expand_rule<9>();
        case 10: return expand_rule<10>();
        default: throw ConfigError("Gauss rule supports 1 to 10 points");
    }
}

double interval_average(const std::function<double(double)>& fn, double lo, double hi,
                        const GaussRule& rule, std::span<const double> breaks) {
    std::vector<double> cuts{lo};
    for (double b : breaks)
        if (b > lo && b < hi) cuts.push_back(b);
    cuts.push_back(hi);
    std::sort(cuts.begin(), cuts.end());
    double integral = 0.0;
    for (std::size_t p = 0; p + 1 < cuts.size(); ++p) {
        const double mid = 0.5 * (cuts[p] + cuts[p + 1]);
        const double half = 0.5 * (cuts[p + 1] - cuts[p]);
        double s = 0.0;
        for (std::size_t k = 0; k < rule.nodes.size(); ++k) s += rule.weights[k] * fn(mid + half * rule.nodes[k]);
        integral += s * half;
    }
    return integral / (hi - lo);
}

CellField cell_average_of(const std::function<double(double)>& fn, const Grid1D& grid, int points,
                          std::span<const double> breaks) {
    CellField f(grid, 1);
    const GaussRule rule = gauss_rule(points);
    for (int i = 0; i < grid.n; ++i) f(i) = interval_average(fn, grid.face(i), grid.face(i + 1), rule, breaks);
    return f;
}

CellField cell_average_of(const std::function<void(double, std::span<double>)>& fn, int m,
                          const Grid1D& grid, int points, std::span<const double> breaks) {
    CellField f(grid, m);
    const GaussRule rule = gauss_rule(points);
    std::vector<double> buf(static_cast<std::size_t>(m));
    for (int c = 0; c < m; ++c) {
        auto component = [&](double x) {
            fn(x, buf);
            return buf[static_cast<std::size_t>(c)];
        };
        for (int i = 0; i < grid.n; ++i)
            f(i, c) = interval_average(component, grid.face(i), grid.face(i + 1), rule, breaks);
    }
    return f;
}

CellField cell_average_of(const std::function<double(double, double)>& fn, const Grid2D& grid,
                          int points) {
    CellField f(grid, 1);
    const GaussRule rule = gauss_rule(points);
    const double hx = 0.5 * grid.dx();
    const double hy = 0.5 * grid.dy();
    for (int j = 0; j < grid.ny; ++j) {
        for (int i = 0; i < grid.nx; ++i) {
            double s = 0.0;
            for (std::size_t a = 0; a < rule.nodes.size(); ++a)
                for (std::size_t b = 0; b < rule.nodes.size(); ++b)
                    s += rule.weights[a] * rule.weights[b] *
                         fn(grid.xc(i) + hx * rule.nodes[a], grid.yc(j) + hy * rule.nodes[b]);
            f.at(i, j) = 0.25 * s;
        }
    }
    return f;
}

}  // namespace weno
