#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <random>
#include <vector>

#include <doctest.h>

#include "weno/errors.hpp"
#include "weno/integrate.hpp"
#include "weno/mesh.hpp"
#include "weno/physics.hpp"
#include "weno/solver.hpp"

using namespace weno;

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
const double pi = std::numbers::pi;

Grid1D line(double a, double b, int n) {
    Grid1D g;
    g.a = a;
    g.b = b;
    g.n = n;
    return g;
}

Grid2D square(double a, double b, int n) {
    Grid2D g;
    g.ax = g.ay = a;
    g.bx = g.by = b;
    g.nx = g.ny = n;
    return g;
}

std::vector<WeightScheme> all_schemes() {
    return {WeightScheme::js(), WeightScheme::m(), WeightScheme::z(), WeightScheme::zr(2.0),
            WeightScheme::zl(2.0, 1.0)};
}

// Interior L-infinity distance between the tendency of cell averages of
// sin(pi x) and the cell averages of -pi cos(pi x).
double advection_tendency_error(int n) {
    const Grid1D g = line(-1.0, 1.0, n);
    CellField u = cell_average_of([](double x) { return std::sin(pi * x); }, g);
    CellField d(g);
    ScalarOp1D op;
    op.scheme = WeightScheme::js();
    tendency_1d(u, op, d);
    double err = 0.0;
    for (int i = 0; i < n; ++i) {
        const double exact = -(std::sin(pi * g.face(i + 1)) - std::sin(pi * g.face(i))) / g.dx();
        err = std::max(err, std::abs(d(i) - exact));
    }
    return err;
}

double burgers2d_tendency_error(int n) {
    const Grid2D g = square(-2.0, 2.0, n);
    auto u0 = [](double x, double y) { return std::sin(0.5 * pi * (x + y)); };
    CellField u = cell_average_of(u0, g);
    CellField d(g);
    ScalarOp2D op;
    op.scheme = WeightScheme::js();
    tendency_2d(u, op, d);
    const CellField exact = cell_average_of(
        [&](double x, double y) { return -pi * u0(x, y) * std::cos(0.5 * pi * (x + y)); }, g);
    double err = 0.0;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) err = std::max(err, std::abs(d.at(i, j) - exact.at(i, j)));
    return err;
}

CellField euler_field(const Grid1D& g, const std::function<Primitive(double)>& w) {
    CellField u(g, 3);
    for (int i = 0; i < g.n; ++i) {
        const Conserved c = to_conserved(w(g.center(i)));
        for (int k = 0; k < 3; ++k) u(i, k) = c[k];
    }
    return u;
}

}  // namespace

TEST_CASE("constant fields have zero tendency") {
    for (const WeightScheme& s : all_schemes()) {
        CellField u(line(0.0, 1.0, 16));
        std::fill(u.data().begin(), u.data().end(), 0.4);
        CellField d = u;
        ScalarOp1D op;
        op.model = ScalarModel::Burgers;
        op.scheme = s;
        tendency_1d(u, op, d);
        for (int i = 0; i < 16; ++i) CHECK(std::abs(d(i)) <= 1e-14);

        CellField e = euler_field(line(0.0, 1.0, 16), [](double) { return Primitive{1.2, 0.3, 0.8}; });
        CellField de = e;
        for (EulerVariables v : {EulerVariables::Conserved, EulerVariables::Characteristic}) {
            EulerOp1D eop;
            eop.scheme = s;
            eop.variables = v;
            tendency_euler(e, eop, de);
            for (int i = 0; i < 16; ++i)
                for (int k = 0; k < 3; ++k) CHECK(std::abs(de(i, k)) <= 1e-13);
        }

        CellField u2(square(0.0, 1.0, 8));
        std::fill(u2.data().begin(), u2.data().end(), -0.6);
        CellField d2 = u2;
        ScalarOp2D op2;
        op2.scheme = s;
        tendency_2d(u2, op2, d2);
        for (int j = 0; j < 8; ++j)
            for (int i = 0; i < 8; ++i) CHECK(std::abs(d2.at(i, j)) <= 1e-13);
    }
}

TEST_CASE("first-stage JS fluxes on the single jump") {
    const Grid1D g = line(-1.0, 1.0, 200);
    CellField u(g);
    for (int i = 0; i < g.n; ++i) u(i) = i < 100 ? 1.0 : 0.0;
    CellField d(g);
    InterfaceTrace trace;
    ScalarOp1D op;
    op.scheme = WeightScheme::js(1e-12);
    op.bc = {BoundaryCondition::outflow(), BoundaryCondition::outflow()};
    op.trace = &trace;
    tendency_1d(u, op, d);
    // Face k is x_{k-1/2}; x = 0 is face 100.
    CHECK(trace.flux[100] == 1.0 - std::ldexp(1.0, -52));
    CHECK(std::abs(trace.flux[101] - (-2.125e-25)) <= 5e-29);
    CHECK(trace.flux[99] == 1.0);
}

TEST_CASE("advection tendency of smooth data converges at fifth order") {
    const double e40 = advection_tendency_error(40), e80 = advection_tendency_error(80);
    CHECK(std::log2(e40 / e80) >= 4.5);
}

TEST_CASE("2D Burgers tendency of smooth data converges") {
    const double e20 = burgers2d_tendency_error(20), e40 = burgers2d_tendency_error(40);
    CHECK(std::log2(e20 / e40) >= 4.0);
}

TEST_CASE("periodic tendencies telescope to zero total") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> U(-1.0, 1.0);
    for (const WeightScheme& s : all_schemes()) {
        const Grid1D g = line(0.0, 1.0, 50);
        CellField u(g);
        for (int i = 0; i < g.n; ++i) u(i) = U(rng) + (i > 20 && i < 30 ? 2.0 : 0.0);
        CellField d(g);
        InterfaceTrace trace;
        ScalarOp1D op;
        op.model = ScalarModel::Burgers;
        op.scheme = s;
        op.alpha = 3.0;
        op.trace = &trace;
        tendency_1d(u, op, d);
        double total = 0.0, scale = 0.0;
        for (int i = 0; i < g.n; ++i) total += d(i) * g.dx();
        for (double f : trace.flux) scale += std::abs(f);
        CHECK(std::abs(total) <= 10 * kEps * scale);

        const Grid2D g2 = square(0.0, 1.0, 20);
        CellField u2(g2);
        for (int j = 0; j < 20; ++j)
            for (int i = 0; i < 20; ++i) u2.at(i, j) = U(rng) + ((i - 10) * (i - 10) + (j - 8) * (j - 8) < 20 ? 1.5 : 0.0);
        CellField d2(g2);
        ScalarOp2D op2;
        op2.scheme = s;
        op2.alpha_x = op2.alpha_y = 2.5;
        tendency_2d(u2, op2, d2);
        double total2 = 0.0, scale2 = 0.0;
        for (int j = 0; j < 20; ++j)
            for (int i = 0; i < 20; ++i) {
                total2 += d2.at(i, j) * g2.dx() * g2.dy();
                const double v = u2.at(i, j);
                scale2 += 2.0 * (0.5 * v * v + 2.5 * std::abs(v)) * g2.dy();
            }
        CHECK(std::abs(total2) <= 10 * kEps * scale2);
    }
}

TEST_CASE("periodic Euler tendencies conserve each component") {
    const Grid1D g = line(0.0, 1.0, 40);
    CellField u = euler_field(g, [](double x) {
        return Primitive{1.0 + 0.5 * std::sin(2 * pi * x) + (x > 0.5 ? 1.0 : 0.0), 0.3, 1.0 + 0.2 * std::cos(2 * pi * x)};
    });
    CellField d = u;
    for (EulerVariables v : {EulerVariables::Conserved, EulerVariables::Characteristic}) {
        EulerOp1D op;
        op.scheme = WeightScheme::zl(2.0, 1.0);
        op.variables = v;
        op.alpha = max_wave_speed_euler(u);
        tendency_euler(u, op, d);
        for (int k = 0; k < 3; ++k) {
            double total = 0.0, scale = 0.0;
            for (int i = 0; i < g.n; ++i) {
                total += d(i, k) * g.dx();
                scale += std::abs(u(i, k)) * (op.alpha + 1.0);
            }
            CHECK(std::abs(total) <= 10 * kEps * scale);
        }
    }
}

TEST_CASE("a y-independent 2D field evolves like the 1D problem") {
    const Grid1D g1 = line(-1.0, 1.0, 32);
    const Grid2D g2 = square(-1.0, 1.0, 32);
    auto X = [](double x) { return 0.5 + std::sin(pi * x) + (x > 0.2 && x < 0.5 ? 0.8 : 0.0); };
    for (const WeightScheme& s : all_schemes()) {
        CellField u1 = cell_average_of(X, g1);
        CellField u2(g2);
        for (int j = 0; j < 32; ++j)
            for (int i = 0; i < 32; ++i) u2.at(i, j) = u1(i);
        CellField d1(g1), d2(g2);
        ScalarOp1D op1;
        op1.model = ScalarModel::Burgers;
        op1.scheme = s;
        op1.alpha = 2.3;
        ScalarOp2D op2;
        op2.model = {ScalarModel::Burgers, ScalarModel::QuarticNonconvex};
        op2.scheme = s;
        op2.alpha_x = 2.3;
        op2.alpha_y = 1.7;
        tendency_1d(u1, op1, d1);
        tendency_2d(u2, op2, d2);
        for (int j = 0; j < 32; ++j)
            for (int i = 0; i < 32; ++i) CHECK(std::abs(d2.at(i, j) - d1(i)) <= 1e-12);
    }
}

TEST_CASE("Roe eigenvectors are biorthogonal eigenvectors of the flux Jacobian") {
    std::mt19937_64 rng(37);
    std::uniform_real_distribution<double> R(0.2, 5.0), V(-3.0, 3.0);
    const double g = kGamma;
    for (int n = 0; n < 200; ++n) {
        const Conserved a = to_conserved({R(rng), V(rng), R(rng)});
        const Conserved b = to_conserved({R(rng), V(rng), R(rng)});
        const EigenBasis e = roe_eigenbasis(a.data(), b.data());
        for (int k = 0; k < 3; ++k)
            for (int m = 0; m < 3; ++m) {
                double dot = 0.0;
                for (int c = 0; c < 3; ++c) dot += e.left[k][c] * e.right[m][c];
                CHECK(std::abs(dot - (k == m ? 1.0 : 0.0)) <= 1e-12);
            }
        // At equal states the Roe average is the state itself.
        const EigenBasis s = roe_eigenbasis(a.data(), a.data());
        const Primitive w = to_primitive(a.data());
        const double u = w.u, c = sound_speed(w), H = (a[2] + w.p) / w.rho;
        const double A[3][3] = {{0.0, 1.0, 0.0},
                                {0.5 * (g - 3.0) * u * u, (3.0 - g) * u, g - 1.0},
                                {u * (0.5 * (g - 1.0) * u * u - H), H - (g - 1.0) * u * u, g * u}};
        const double lambda[3] = {u - c, u, u + c};
        for (int k = 0; k < 3; ++k)
            for (int r = 0; r < 3; ++r) {
                double Ar = 0.0;
                for (int q = 0; q < 3; ++q) Ar += A[r][q] * s.right[k][q];
                CHECK(std::abs(Ar - lambda[k] * s.right[k][r]) <= 1e-11 * (1.0 + std::abs(Ar)));
            }
    }
}

TEST_CASE("single-jump advection creates no large new extrema") {
    const Grid1D g = line(-1.0, 2.0, 300);
    for (const WeightScheme& s : all_schemes()) {
        CellField u(g);
        for (int i = 0; i < g.n; ++i) u(i) = g.center(i) < 0.0 ? 1.0 : 0.0;
        auto op = std::make_shared<ScalarOp1D>();
        op->scheme = s;
        op->bc = {BoundaryCondition::outflow(), BoundaryCondition::outflow()};
        const SpatialOperator L = bind_operator(op);
        integrate_to(u, L, 1.0, [&](const CellField&) { return 0.5 * g.dx(); });
        for (int i = 0; i < g.n; ++i) {
            CHECK(u(i) <= 1.0 + 1e-2);
            CHECK(u(i) >= -1e-2);
        }
    }
}

TEST_CASE("operators reject mismatched fields") {
    CellField u(line(0.0, 1.0, 8), 3);
    CellField d(line(0.0, 1.0, 8), 3);
    ScalarOp1D op;
    CHECK_THROWS_AS(tendency_1d(u, op, d), ConfigError);
    CellField s(line(0.0, 1.0, 8));
    CellField ds(line(0.0, 1.0, 8));
    CHECK_THROWS_AS(tendency_euler(s, EulerOp1D{}, ds), ConfigError);
    CHECK_THROWS_AS(tendency_2d(s, ScalarOp2D{}, ds), ConfigError);
    CHECK(parse_variables("characteristic") == EulerVariables::Characteristic);
    CHECK_THROWS_AS(parse_variables("primitive"), ConfigError);
}
