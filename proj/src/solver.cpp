/// @file solver.cpp
/// @brief Semi-discrete finite-volume operators.

#include "weno/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "weno/errors.hpp"

namespace weno {

namespace {

// Gauss weights on [-1, 1] for the nodes (-sqrt(3/5), 0, +sqrt(3/5)),
// halved so the face flux is a mean over the face.
constexpr double kSideWeight = 5.0 / 18.0;
constexpr double kCenterWeight = 8.0 / 18.0;

void zero(CellField& f) { std::fill(f.data().begin(), f.data().end(), 0.0); }

void require_shape(const CellField& u, const CellField& dudt) {
    if (u.data().size() != dudt.data().size() || u.components() != dudt.components() ||
        u.is_2d() != dudt.is_2d())
        throw ConfigError("tendency output does not match the field shape");
}

double point_lf(ScalarModel m, double a, double b, double alpha) {
    return lf_flux(scalar_flux(m, a), scalar_flux(m, b), a, b, alpha);
}

// Face fluxes of one face line from the line averages lm/lp (index offset
// by 2 relative to the transverse cell index), written to out[0 .. n-1].
struct FaceLine {
    std::vector<double> am, ac, ap, bm, bc, bp;

    explicit FaceLine(int n) : am(n), ac(n), ap(n), bm(n), bc(n), bp(n) {}

    void fluxes(const std::vector<double>& lm, const std::vector<double>& lp, int n, ScalarModel m,
                const WeightScheme& s, double alpha, std::vector<double>& out) {
        reconstruct_gauss_nodes_batch(lm.data(), n, s, am.data(), ac.data(), ap.data());
        reconstruct_gauss_nodes_batch(lp.data(), n, s, bm.data(), bc.data(), bp.data());
        for (int j = 0; j < n; ++j)
            out[j] = kSideWeight * point_lf(m, am[j], bm[j], alpha) + kCenterWeight * point_lf(m, ac[j], bc[j], alpha) +
                     kSideWeight * point_lf(m, ap[j], bp[j], alpha);
    }
};

}  // namespace

void tendency_1d(CellField& u, const ScalarOp1D& op, CellField& dudt) {
    if (u.is_2d() || u.components() != 1) throw ConfigError("scalar 1D operator needs a 1D scalar field");
    require_shape(u, dudt);
    fill_ghosts(u, op.bc);
    const int n = u.grid1d().n;
    const double inv_dx = 1.0 / u.grid1d().dx();

    std::vector<double> flux(n + 1);
    if (op.trace) {
        op.trace->weights.assign(n + 1, Triple{});
        op.trace->u_minus.assign(n + 1, 0.0);
        op.trace->u_plus.assign(n + 1, 0.0);
    }
    for (int k = 0; k <= n; ++k) {
        Triple w;
        const double a = reconstruct_left(&u(k - 3), op.scheme, op.trace ? &w : nullptr);
        const double b = reconstruct_right(&u(k - 2), op.scheme);
        flux[k] = point_lf(op.model, a, b, op.alpha);
        if (op.trace) {
            op.trace->weights[k] = w;
            op.trace->u_minus[k] = a;
            op.trace->u_plus[k] = b;
        }
    }
    if (op.trace) op.trace->flux = flux;

    zero(dudt);
    for (int i = 0; i < n; ++i) dudt(i) = (flux[i] - flux[i + 1]) * inv_dx;
}

std::string variables_name(EulerVariables v) {
    return v == EulerVariables::Conserved ? "conserved" : "characteristic";
}

EulerVariables parse_variables(const std::string& s) {
    if (s == "conserved") return EulerVariables::Conserved;
    if (s == "characteristic") return EulerVariables::Characteristic;
    throw ConfigError("unknown reconstruction variables '" + s + "' (expected conserved or characteristic)");
}

EigenBasis roe_eigenbasis(const double* a, const double* b, double gamma) {
    const Primitive wa = to_primitive(a, gamma);
    const Primitive wb = to_primitive(b, gamma);
    const double ra = std::sqrt(wa.rho);
    const double rb = std::sqrt(wb.rho);
    const double ha = (a[2] + wa.p) / wa.rho;
    const double hb = (b[2] + wb.p) / wb.rho;
    const double u = (ra * wa.u + rb * wb.u) / (ra + rb);
    const double h = (ra * ha + rb * hb) / (ra + rb);
    const double c2 = (gamma - 1.0) * (h - 0.5 * u * u);
    if (!(c2 > 0.0)) throw StateError("Roe-averaged sound speed is not real");
    const double c = std::sqrt(c2);
    const double b1 = (gamma - 1.0) / c2;
    const double b2 = 0.5 * b1 * u * u;

    EigenBasis e;
    e.right[0] = {1.0, u - c, h - u * c};
    e.right[1] = {1.0, u, 0.5 * u * u};
    e.right[2] = {1.0, u + c, h + u * c};
    e.left[0] = {0.5 * (b2 + u / c), -0.5 * (b1 * u + 1.0 / c), 0.5 * b1};
    e.left[1] = {1.0 - b2, b1 * u, -b1};
    e.left[2] = {0.5 * (b2 - u / c), -0.5 * (b1 * u - 1.0 / c), 0.5 * b1};
    return e;
}

void tendency_euler(CellField& u, const EulerOp1D& op, CellField& dudt) {
    if (u.is_2d() || u.components() != 3) throw ConfigError("Euler operator needs a 1D 3-component field");
    require_shape(u, dudt);
    fill_ghosts(u, op.bc);
    const int n = u.grid1d().n;
    const double inv_dx = 1.0 / u.grid1d().dx();
    const bool characteristic = op.variables == EulerVariables::Characteristic;

    std::vector<Conserved> flux(n + 1);
    double w[6];
    for (int k = 0; k <= n; ++k) {
        Conserved a, b;
        if (characteristic) {
            const EigenBasis e = roe_eigenbasis(&u(k - 1, 0), &u(k, 0), op.gamma);
            Conserved ca, cb;
            for (int f = 0; f < 3; ++f) {
                for (int q = 0; q < 6; ++q)
                    w[q] = e.left[f][0] * u(k - 3 + q, 0) + e.left[f][1] * u(k - 3 + q, 1) +
                           e.left[f][2] * u(k - 3 + q, 2);
                ca[f] = reconstruct_left(w, op.scheme);
                cb[f] = reconstruct_right(w + 1, op.scheme);
            }
            for (int c = 0; c < 3; ++c) {
                a[c] = e.right[0][c] * ca[0] + e.right[1][c] * ca[1] + e.right[2][c] * ca[2];
                b[c] = e.right[0][c] * cb[0] + e.right[1][c] * cb[1] + e.right[2][c] * cb[2];
            }
        } else {
            for (int c = 0; c < 3; ++c) {
                for (int q = 0; q < 6; ++q) w[q] = u(k - 3 + q, c);
                a[c] = reconstruct_left(w, op.scheme);
                b[c] = reconstruct_right(w + 1, op.scheme);
            }
        }
        const Conserved fa = euler_flux(a.data(), op.gamma);
        const Conserved fb = euler_flux(b.data(), op.gamma);
        for (int c = 0; c < 3; ++c) flux[k][c] = lf_flux(fa[c], fb[c], a[c], b[c], op.alpha);
    }

    zero(dudt);
    for (int i = 0; i < n; ++i)
        for (int c = 0; c < 3; ++c) dudt(i, c) = (flux[i][c] - flux[i + 1][c]) * inv_dx;
}

void tendency_2d(CellField& u, const ScalarOp2D& op, CellField& dudt) {
    if (!u.is_2d() || u.components() != 1) throw ConfigError("2D operator needs a 2D scalar field");
    require_shape(u, dudt);
    fill_ghosts(u, op.bc);
    const Grid2D& g = u.grid2d();
    const int nx = g.nx;
    const int ny = g.ny;
    const double inv_dx = 1.0 / g.dx();
    const double inv_dy = 1.0 / g.dy();
    const std::ptrdiff_t stride = u.row_stride();

    zero(dudt);

    // x-faces: line averages in rows -2 .. ny+1, then Gauss nodes along y.
    {
        std::vector<double> lm(ny + 4), lp(ny + 4), prev(ny), cur(ny);
        FaceLine line(ny);
        for (int i = 0; i <= nx; ++i) {
            reconstruct_left_batch(&u.at(i - 3, -2), 1, stride, ny + 4, op.scheme, lm.data());
            reconstruct_left_batch(&u.at(i + 2, -2), -1, stride, ny + 4, op.scheme, lp.data());
            line.fluxes(lm, lp, ny, op.model.fx, op.scheme, op.alpha_x, cur);
            if (i > 0)
                for (int j = 0; j < ny; ++j) dudt.at(i - 1, j) += (prev[j] - cur[j]) * inv_dx;
            std::swap(prev, cur);
        }
    }

    // y-faces: line averages in columns -2 .. nx+1, then Gauss nodes along x.
    {
        std::vector<double> lm(nx + 4), lp(nx + 4), prev(nx), cur(nx);
        FaceLine line(nx);
        for (int j = 0; j <= ny; ++j) {
            reconstruct_left_batch(&u.at(-2, j - 3), stride, 1, nx + 4, op.scheme, lm.data());
            reconstruct_left_batch(&u.at(-2, j + 2), -stride, 1, nx + 4, op.scheme, lp.data());
            line.fluxes(lm, lp, nx, op.model.fy, op.scheme, op.alpha_y, cur);
            if (j > 0)
                for (int i = 0; i < nx; ++i) dudt.at(i, j - 1) += (prev[i] - cur[i]) * inv_dy;
            std::swap(prev, cur);
        }
    }
}

std::pair<double, double> max_wave_speeds_2d(const CellField& u, const FluxModel2D& m) {
    const Grid2D& g = u.grid2d();
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (int j = 0; j < g.ny; ++j)
        for (int i = 0; i < g.nx; ++i) {
            lo = std::min(lo, u.at(i, j));
            hi = std::max(hi, u.at(i, j));
        }
    return {max_abs_derivative(m.fx, lo, hi), max_abs_derivative(m.fy, lo, hi)};
}

SpatialOperator bind_operator(std::shared_ptr<ScalarOp1D> op) {
    return [op](CellField& u, CellField& k) { tendency_1d(u, *op, k); };
}

SpatialOperator bind_operator(std::shared_ptr<EulerOp1D> op) {
    return [op](CellField& u, CellField& k) { tendency_euler(u, *op, k); };
}

SpatialOperator bind_operator(std::shared_ptr<ScalarOp2D> op) {
    return [op](CellField& u, CellField& k) { tendency_2d(u, *op, k); };
}

}  // namespace weno
