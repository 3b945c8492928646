/// @file problems.cpp
/// @brief Benchmark problem registry and closed-form reference solutions.

#include "weno/problems.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "weno/errors.hpp"
#include "weno/riemann.hpp"

namespace weno {

namespace {

constexpr double kPi = std::numbers::pi;

BoundaryCondition periodic() { return BoundaryCondition::periodic(); }
BoundaryCondition outflow() { return BoundaryCondition::outflow(); }

Boundaries1D both(BoundaryCondition bc) { return {bc, bc}; }

// Cell averages of a piecewise-constant scalar with one jump at x0
// (u = left for x <= x0).
CellField step_averages(const Grid1D& g, double x0, double left, double right) {
    const double breaks[] = {x0};
    return cell_average_of([=](double x) { return x <= x0 ? left : right; }, g, 2, breaks);
}

// Cell averages of the conserved variables of a primitive profile.
CellField primitive_averages(const Grid1D& g, const std::function<Primitive(double)>& w,
                             std::span<const double> breaks, int points) {
    return cell_average_of(
        [&](double x, std::span<double> out) {
            const Conserved c = to_conserved(w(x));
            std::copy(c.begin(), c.end(), out.begin());
        },
        3, g, points, breaks);
}

Problem advection1d() {
    Problem p;
    p.id = "advection1d-accuracy";
    p.summary = "u_t + u_x = 0, u0 = sin(pi x) on [-1, 1], periodic";
    p.xa = -1.0;
    p.xb = 1.0;
    p.n = 40;
    p.n_list = {10, 20, 40, 80, 160};
    p.t_final = 8.0;
    p.scheme = WeightScheme::zl(2.0, 2.0);
    p.step = TimeStepRule::dt_scale(0.1);
    p.model = ScalarModel::Advection;
    p.bc1d = both(periodic());
    p.reference = ReferenceKind::Exact;
    p.initial = [p](int n) {
        return cell_average_of([](double x) { return std::sin(kPi * x); }, p.grid1d(n));
    };
    p.exact = [p](int n, double t) {
        return cell_average_of([t](double x) { return std::sin(kPi * (x - t)); }, p.grid1d(n));
    };
    return p;
}

Problem burgers1d() {
    Problem p;
    p.id = "burgers1d";
    p.summary = "u_t + (u^2/2)_x = 0, u0 = -sin(pi x) on [-1, 1], periodic, up to shock formation";
    p.xa = -1.0;
    p.xb = 1.0;
    p.n = 40;
    p.n_list = {10, 20, 40, 80, 160};
    p.t_final = 1.0 / kPi;
    p.scheme = WeightScheme::zl(5.0, 1.0);
    p.model = ScalarModel::Burgers;
    p.bc1d = both(periodic());
    p.reference = ReferenceKind::Exact;
    p.initial = [p](int n) {
        return cell_average_of([](double x) { return -std::sin(kPi * x); }, p.grid1d(n));
    };
    p.exact = [p](int n, double t) {
        auto u0 = [](double x) { return -std::sin(kPi * x); };
        auto du0 = [](double x) { return -kPi * std::cos(kPi * x); };
        const double breaks[] = {0.0};
        return cell_average_of(
            [&](double x) { return characteristic_value(u0, du0, x, t, 1.0, -1.0, 1.0); },
            p.grid1d(n), 5, breaks);
    };
    return p;
}

Problem scalar_riemann(std::string id, std::string summary, ScalarModel model, double xa,
                       double xb, int n, double x0, double a, double b, double left, double right,
                       double t_final, WeightScheme scheme) {
    Problem p;
    p.id = std::move(id);
    p.summary = std::move(summary);
    p.xa = xa;
    p.xb = xb;
    p.n = n;
    p.t_final = t_final;
    p.scheme = scheme;
    p.model = model;
    p.bc1d = both(outflow());
    p.reference = ReferenceKind::FineGrid;
    p.initial = [p, x0, a, b, left, right](int cells) {
        const Grid1D g = p.grid1d(cells);
        if (a >= b) return step_averages(g, x0, left, right);
        const double breaks[] = {a, b};
        return cell_average_of([=](double x) { return x >= a && x <= b ? left : right; }, g, 2,
                               breaks);
    };
    return p;
}

Problem euler_riemann(std::string id, std::string summary, Primitive left, Primitive right,
                      double t_final, WeightScheme scheme) {
    Problem p;
    p.id = std::move(id);
    p.summary = std::move(summary);
    p.kind = ProblemKind::Euler1D;
    p.xa = -5.0;
    p.xb = 5.0;
    p.n = 200;
    p.t_final = t_final;
    p.scheme = scheme;
    p.bc1d = both(outflow());
    p.reference = ReferenceKind::Exact;
    p.initial = [p, left, right](int n) {
        const double breaks[] = {0.0};
        return primitive_averages(
            p.grid1d(n), [&](double x) { return x < 0.0 ? left : right; }, breaks, 2);
    };
    p.exact = [p, left, right](int n, double t) {
        return riemann_cell_averages(left, right, 0.0, t, p.grid1d(n));
    };
    return p;
}

Problem shock_entropy(int k, int n) {
    Problem p;
    p.id = "shock-entropy-k" + std::to_string(k);
    p.summary = "Mach 3 shock meeting the density wave 1 + 0.2 sin(" + std::to_string(k) +
                " x) on [-5, 5]";
    p.kind = ProblemKind::Euler1D;
    p.xa = -5.0;
    p.xb = 5.0;
    p.n = n;
    p.t_final = 2.0;
    p.scheme = WeightScheme::zl(5.0, 1.0);
    p.bc1d = both(outflow());
    p.reference = ReferenceKind::FineGrid;
    const double kk = k;
    p.initial = [p, kk](int cells) {
        const Primitive post{3.857143, 2.629369, 10.333333};
        const double breaks[] = {-4.0};
        return primitive_averages(
            p.grid1d(cells),
            [&](double x) {
                return x < -4.0 ? post : Primitive{1.0 + 0.2 * std::sin(kk * x), 0.0, 1.0};
            },
            breaks, 5);
    };
    return p;
}

Problem blastwave() {
    Problem p;
    p.id = "blastwave";
    p.summary = "two interacting blast waves on [0, 1] between reflective walls";
    p.kind = ProblemKind::Euler1D;
    p.xa = 0.0;
    p.xb = 1.0;
    p.n = 400;
    p.t_final = 0.038;
    p.scheme = WeightScheme::zl(1.0 / 7.0, 2.0);
    p.bc1d = both(BoundaryCondition::reflective());
    p.variables = EulerVariables::Characteristic;
    p.reference = ReferenceKind::FineGrid;
    p.initial = [p](int n) {
        const double breaks[] = {0.1, 0.9};
        return primitive_averages(
            p.grid1d(n),
            [](double x) {
                const double pr = x < 0.1 ? 1000.0 : (x < 0.9 ? 0.01 : 100.0);
                return Primitive{1.0, 0.0, pr};
            },
            breaks, 2);
    };
    return p;
}

Problem advection2d() {
    Problem p;
    p.id = "advection2d";
    p.summary = "u_t + u_x + u_y = 0, indicator of |x| + |y| < 1/sqrt(2) on [-1, 1]^2, periodic";
    p.kind = ProblemKind::Scalar2D;
    p.xa = p.ya = -1.0;
    p.xb = p.yb = 1.0;
    p.n = 40;
    p.n_list = {10, 20, 40, 80, 160};
    p.t_final = 4.0;
    p.scheme = WeightScheme::zl(5.0, 1.0);
    p.step = TimeStepRule::dt_scale(0.4);
    p.model2d = {ScalarModel::Advection, ScalarModel::Advection};
    p.reference = ReferenceKind::Exact;
    auto diamond = [p](int n, double t) {
        const Grid2D g = p.grid2d(n);
        const double r = 1.0 / std::sqrt(2.0);
        // Periodic shift by (t, t) folded back into the domain.
        const double period = p.xb - p.xa;
        double s = std::fmod(t, period);
        if (s > 0.5 * period) s -= period;
        CellField u(g);
        const double area = g.dx() * g.dy();
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) {
                double sum = 0.0;
                for (int a = -1; a <= 1; ++a)
                    for (int b = -1; b <= 1; ++b) {
                        const double cx = s + a * period;
                        const double cy = s + b * period;
                        const std::vector<Point2> poly{
                            {cx + r, cy}, {cx, cy + r}, {cx - r, cy}, {cx, cy - r}};
                        sum += polygon_rect_overlap(poly, g.xc(i) - 0.5 * g.dx(), g.xc(i) + 0.5 * g.dx(),
                                                    g.yc(j) - 0.5 * g.dy(), g.yc(j) + 0.5 * g.dy());
                    }
                u.at(i, j) = sum / area;
            }
        return u;
    };
    p.initial = [diamond](int n) { return diamond(n, 0.0); };
    p.exact = diamond;
    return p;
}

Problem burgers2d(std::string id, WeightScheme scheme) {
    Problem p;
    p.id = std::move(id);
    p.summary = "u_t + (u^2/2)_x + (u^2/2)_y = 0, u0 = 1/4 + 1/2 sin(pi (x + y) / 2) on [-2, 2]^2, periodic";
    p.kind = ProblemKind::Scalar2D;
    p.xa = p.ya = -2.0;
    p.xb = p.yb = 2.0;
    p.n = 40;
    p.t_final = 2.0 / kPi;
    p.scheme = scheme;
    p.model2d = {ScalarModel::Burgers, ScalarModel::Burgers};
    p.reference = ReferenceKind::Exact;
    auto u0 = [](double xi) { return 0.25 + 0.5 * std::sin(0.5 * kPi * xi); };
    auto du0 = [](double xi) { return 0.25 * kPi * std::cos(0.5 * kPi * xi); };
    p.initial = [p, u0](int n) {
        return cell_average_of([&](double x, double y) { return u0(x + y); }, p.grid2d(n));
    };
    p.exact = [p, u0, du0](int n, double t) {
        return cell_average_of(
            [&](double x, double y) {
                return characteristic_value(u0, du0, x + y, t, 2.0, -0.25, 0.75);
            },
            p.grid2d(n));
    };
    return p;
}

Problem boundary_layer(std::string id, double alpha, double beta) {
    Problem p;
    p.id = std::move(id);
    p.summary = "u_t + (u^2/2)_x + u_y = 0 on [0, 2pi] x [0, 1], inflow " +
                std::to_string(static_cast<int>(alpha)) + " + " +
                std::to_string(static_cast<int>(beta)) + " sin x at y = 0";
    p.kind = ProblemKind::Scalar2D;
    p.xa = 0.0;
    p.xb = 2.0 * kPi;
    p.ya = 0.0;
    p.yb = 1.0;
    p.n = 30;
    p.t_final = 1.0;
    p.scheme = WeightScheme::zl(1.0, 1.0);
    p.model2d = {ScalarModel::Burgers, ScalarModel::Advection};
    auto profile = [alpha, beta](double x) { return alpha + beta * std::sin(x); };
    p.bc2d = {periodic(), periodic(), BoundaryCondition::inflow(profile), outflow()};
    p.reference = ReferenceKind::None;
    p.initial = [p, profile](int n) {
        return cell_average_of([&](double x, double) { return profile(x); }, p.grid2d(n));
    };
    return p;
}

std::vector<Problem> build_registry() {
    std::vector<Problem> r;
    r.push_back(advection1d());
    r.push_back(burgers1d());
    r.push_back(scalar_riemann("nonconvex-a", "u_t + f(u)_x = 0, f = (u^2 - 1)(u^2 - 4)/4, u = 2 | -2",
                               ScalarModel::QuarticNonconvex, -1.0, 1.0, 40, 0.0, 0.0, 0.0, 2.0, -2.0,
                               1.0, WeightScheme::zl(2.0, 2.0)));
    r.push_back(scalar_riemann("nonconvex-b", "u_t + f(u)_x = 0, f = (u^2 - 1)(u^2 - 4)/4, u = -3 | 3",
                               ScalarModel::QuarticNonconvex, -1.0, 1.0, 40, 0.0, 0.0, 0.0, -3.0, 3.0,
                               0.05, WeightScheme::zl(2.0, 1.0)));
    r.push_back(scalar_riemann("buckley-leverett",
                               "u_t + f(u)_x = 0, f = 4u^2 / (4u^2 + (1 - u)^2), u = 1 on [-1/2, 0]",
                               ScalarModel::BuckleyLeverett, -1.0, 1.0, 80, 0.0, -0.5, 0.0, 1.0, 0.0,
                               0.3, WeightScheme::zl(1.0, 1.0)));
    r.push_back(euler_riemann("sod", "Sod shock tube on [-5, 5]", {1.0, 0.0, 1.0}, {0.125, 0.0, 0.1},
                              2.0, WeightScheme::zl(5.0, 1.0)));
    Problem lax = euler_riemann("lax", "Lax shock tube on [-5, 5]", {0.445, 0.698, 3.528}, {0.5, 0.0, 0.571}, 1.3,
                                WeightScheme::zl(2.0, 1.0));
    lax.variables = EulerVariables::Characteristic;
    r.push_back(lax);
    r.push_back(shock_entropy(5, 200));
    r.push_back(shock_entropy(10, 400));
    r.push_back(blastwave());
    r.push_back(advection2d());
    r.push_back(burgers2d("burgers2d", WeightScheme::zl(1.0, 1.0)));
    r.push_back(boundary_layer("boundary-layer-a", 0.0, 5.0));
    r.push_back(boundary_layer("boundary-layer-b", 2.0, 5.0));
    return r;
}

}  // namespace

std::string kind_name(ProblemKind k) {
    switch (k) {
        case ProblemKind::Scalar1D: return "scalar1d";
        case ProblemKind::Euler1D: return "euler1d";
        case ProblemKind::Scalar2D: return "scalar2d";
    }
    return "?";
}

std::string reference_name(ReferenceKind k) {
    switch (k) {
        case ReferenceKind::None: return "none";
        case ReferenceKind::Exact: return "exact";
        case ReferenceKind::FineGrid: return "fine-grid";
    }
    return "?";
}

Grid1D Problem::grid1d(int cells) const {
    Grid1D g{xa, xb, cells, kGhost};
    g.validate();
    return g;
}

Grid2D Problem::grid2d(int cells) const {
    Grid2D g{xa, xb, ya, yb, cells, cells, kGhost};
    g.validate();
    return g;
}

const std::vector<Problem>& problem_registry() {
    static const std::vector<Problem> registry = build_registry();
    return registry;
}

const Problem& find_problem(const std::string& id) {
    for (const Problem& p : problem_registry())
        if (p.id == id) return p;
    std::string known;
    for (const Problem& p : problem_registry()) known += (known.empty() ? "" : ", ") + p.id;
    throw ConfigError("unknown problem '" + id + "' (known: " + known + ")");
}

double characteristic_value(const std::function<double(double)>& u0,
                            const std::function<double(double)>& du0, double x, double t, double c,
                            double lo, double hi) {
    auto residual = [&](double u) { return u - u0(x - c * u * t); };
    double u = u0(x);
    for (int it = 0; it < 100; ++it) {
        const double r = residual(u);
        if (std::abs(r) <= 1e-14) return u;
        const double dr = 1.0 + c * t * du0(x - c * u * t);
        if (!(std::abs(dr) > 1e-300)) break;
        const double next = u - r / dr;
        if (!std::isfinite(next) || next < lo || next > hi) break;
        if (std::abs(next - u) <= 1e-15 * std::max(1.0, std::abs(u))) return next;
        u = next;
    }
    double a = lo, b = hi;
    double ra = residual(a);
    for (int it = 0; it < 200 && b - a > 1e-15 * std::max(1.0, std::abs(a)); ++it) {
        const double m = 0.5 * (a + b);
        const double rm = residual(m);
        if ((rm > 0.0) == (ra > 0.0)) {
            a = m;
            ra = rm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

double polygon_rect_overlap(const std::vector<Point2>& polygon, double x0, double x1, double y0,
                            double y1) {
    std::vector<Point2> poly = polygon;
    // Sutherland-Hodgman against the four half-planes side(p) >= 0.
    auto clip = [&](auto side) {
        std::vector<Point2> out;
        const std::size_t m = poly.size();
        for (std::size_t k = 0; k < m; ++k) {
            const Point2& a = poly[k];
            const Point2& b = poly[(k + 1) % m];
            const double sa = side(a);
            const double sb = side(b);
            if (sa >= 0.0) out.push_back(a);
            if ((sa >= 0.0) != (sb >= 0.0)) {
                const double s = sa / (sa - sb);
                out.push_back({a[0] + s * (b[0] - a[0]), a[1] + s * (b[1] - a[1])});
            }
        }
        poly = std::move(out);
    };
    clip([&](const Point2& p) { return p[0] - x0; });
    clip([&](const Point2& p) { return x1 - p[0]; });
    clip([&](const Point2& p) { return p[1] - y0; });
    clip([&](const Point2& p) { return y1 - p[1]; });
    double twice = 0.0;
    for (std::size_t k = 0; k < poly.size(); ++k) {
        const Point2& a = poly[k];
        const Point2& b = poly[(k + 1) % poly.size()];
        twice += a[0] * b[1] - b[0] * a[1];
    }
    return 0.5 * std::abs(twice);
}

CellField riemann_cell_averages(const Primitive& left, const Primitive& right, double x0, double t,
                                const Grid1D& grid, int subcells) {
    if (!(t > 0.0)) {
        const double breaks[] = {x0};
        return primitive_averages(
            grid, [&](double x) { return x < x0 ? left : right; }, breaks, 2);
    }
    const EulerRiemannSolution sol(left, right);
    const GaussRule rule = gauss_rule(5);
    CellField u(grid, 3);
    const double h = grid.dx() / subcells;
    for (int i = 0; i < grid.n; ++i) {
        Conserved sum{0.0, 0.0, 0.0};
        for (int s = 0; s < subcells; ++s) {
            const double mid = grid.face(i) + (s + 0.5) * h;
            for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
                const Conserved c = to_conserved(sol.sample((mid + 0.5 * h * rule.nodes[q] - x0) / t));
                for (int k = 0; k < 3; ++k) sum[k] += rule.weights[q] * c[k];
            }
        }
        for (int k = 0; k < 3; ++k) u(i, k) = sum[k] / (2.0 * subcells);
    }
    return u;
}

}  // namespace weno
