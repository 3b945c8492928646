#include <cmath>
#include <numbers>
#include <vector>

#include <doctest.h>

#include "weno/errors.hpp"
#include "weno/mesh.hpp"

using namespace weno;

namespace {

Grid1D grid(int n, int ghost, double a = 0.0, double b = 1.0) {
    Grid1D g;
    g.a = a;
    g.b = b;
    g.n = n;
    g.ghost = ghost;
    return g;
}

CellField field_of(const std::vector<double>& interior, int ghost) {
    CellField f(grid(static_cast<int>(interior.size()), ghost));
    for (std::size_t i = 0; i < interior.size(); ++i) f(static_cast<int>(i)) = interior[i];
    return f;
}

}  // namespace

TEST_CASE("grid geometry") {
    const Grid1D g = grid(4, 3, -1.0, 1.0);
    CHECK(g.dx() == 0.5);
    CHECK(g.center(0) == -0.75);
    CHECK(g.center(3) == 0.75);
    CHECK(g.face(0) == -1.0);
    CHECK(g.face(4) == 1.0);
    CHECK(g.center(-1) == -1.25);
}

TEST_CASE("degenerate grids are rejected") {
    CHECK_THROWS_AS(grid(0, 3).validate(), ConfigError);
    CHECK_THROWS_AS(grid(4, 3, 1.0, 1.0).validate(), ConfigError);
    CHECK_THROWS_AS(grid(4, 2).validate(), ConfigError);
    Grid2D g2;
    g2.nx = 3;
    g2.ny = 0;
    CHECK_THROWS_AS(g2.validate(), ConfigError);
}

TEST_CASE("periodic ghosts wrap around") {
    CellField f = field_of({1, 2, 3}, 3);
    fill_ghosts(f, Boundaries1D{});
    CHECK(f(-1) == 3);
    CHECK(f(3) == 1);
}

TEST_CASE("outflow ghosts copy the edge cell") {
    CellField f = field_of({5, 6, 7}, 3);
    Boundaries1D bc{BoundaryCondition::outflow(), BoundaryCondition::outflow()};
    fill_ghosts(f, bc);
    CHECK(f(-2) == 5);
    CHECK(f(-1) == 5);
    CHECK(f(3) == 7);
    CHECK(f(4) == 7);
}

TEST_CASE("reflective walls mirror cells and flip momentum") {
    CellField f(grid(4, 3), 3);
    for (int i = 0; i < 4; ++i) {
        f(i, 0) = 1.0 + i;
        f(i, 1) = 0.5 * (i + 1);
        f(i, 2) = 2.5 + i;
    }
    f(0, 0) = 1.0;
    f(0, 1) = 0.5;
    f(0, 2) = 2.5;
    Boundaries1D bc{BoundaryCondition::reflective(), BoundaryCondition::reflective()};
    fill_ghosts(f, bc);
    CHECK(f(-1, 0) == 1.0);
    CHECK(f(-1, 1) == -0.5);
    CHECK(f(-1, 2) == 2.5);
    for (int g = 1; g <= 3; ++g) {
        CHECK(f(-g, 0) == f(g - 1, 0));
        CHECK(f(-g, 1) == -f(g - 1, 1));
        CHECK(f(3 + g, 2) == f(4 - g, 2));
        CHECK(f(3 + g, 1) == -f(4 - g, 1));
    }
}

TEST_CASE("reflective walls need a three-component field") {
    CellField f = field_of({1, 2, 3, 4}, 3);
    Boundaries1D bc{BoundaryCondition::reflective(), BoundaryCondition::outflow()};
    CHECK_THROWS_AS(fill_ghosts(f, bc), ConfigError);
}

TEST_CASE("ghost fill is idempotent and periodic fill is a shift by n") {
    CellField f = field_of({0.3, -1.2, 4.0, 2.5, 0.0, 7.5}, 3);
    fill_ghosts(f, Boundaries1D{});
    const std::vector<double> once = f.data();
    fill_ghosts(f, Boundaries1D{});
    CHECK(f.data() == once);
    for (int i = -3; i < 0; ++i) CHECK(f(i) == f(i + 6));
    for (int i = 6; i < 9; ++i) CHECK(f(i) == f(i - 6));
}

TEST_CASE("2D ghosts: periodic in x, inflow profile below, outflow above") {
    Grid2D g;
    g.ax = 0.0;
    g.bx = 4.0;
    g.ay = 0.0;
    g.by = 3.0;
    g.nx = 4;
    g.ny = 3;
    CellField f(g);
    for (int j = 0; j < 3; ++j)
        for (int i = 0; i < 4; ++i) f.at(i, j) = 10.0 * j + i;
    Boundaries2D bc;
    bc.y_lo = BoundaryCondition::inflow([](double x) { return 2.0 * x; });
    bc.y_hi = BoundaryCondition::outflow();
    fill_ghosts(f, bc);
    // Inflow ghosts hold the cell average of the profile over each x-cell.
    for (int i = 0; i < 4; ++i) CHECK(std::abs(f.at(i, -1) - (2.0 * i + 1.0)) <= 1e-14);
    for (int i = 0; i < 4; ++i) CHECK(f.at(i, 3) == f.at(i, 2));
    for (int j = -3; j < 6; ++j) {
        CHECK(f.at(-1, j) == f.at(3, j));
        CHECK(f.at(4, j) == f.at(0, j));
    }
}

TEST_CASE("cell averages: constants, linear data and a closed-form antiderivative") {
    const Grid1D unit = grid(5, 3, 0.0, 5.0);
    const CellField c = cell_average_of([](double) { return 7.0; }, unit);
    for (int i = 0; i < 5; ++i) CHECK(c(i) == doctest::Approx(7.0).epsilon(1e-15));
    const CellField lin = cell_average_of([](double x) { return x; }, unit);
    for (int i = 0; i < 5; ++i) CHECK(std::abs(lin(i) - (i + 0.5)) <= 1e-14);

    const Grid1D g = grid(40, 3, -1.0, 1.0);
    const double pi = std::numbers::pi;
    const CellField s = cell_average_of([pi](double x) { return std::sin(pi * x); }, g);
    for (int i = 0; i < 40; ++i) {
        const double exact = (std::cos(pi * g.face(i)) - std::cos(pi * g.face(i + 1))) / (pi * g.dx());
        CHECK(std::abs(s(i) - exact) <= 1e-14);
    }
}

TEST_CASE("five-point Gauss averages polynomials of degree up to 9 exactly") {
    const Grid1D g = grid(7, 3, -0.3, 1.1);
    for (int k = 0; k <= 9; ++k) {
        const CellField f = cell_average_of([k](double x) { return std::pow(x, k); }, g);
        for (int i = 0; i < g.n; ++i) {
            const double a = g.face(i), b = g.face(i + 1);
            const double exact = (std::pow(b, k + 1) - std::pow(a, k + 1)) / ((k + 1) * g.dx());
            CHECK(std::abs(f(i) - exact) <= 1e-14);
        }
    }
}

TEST_CASE("Gauss rules sum to the interval length") {
    for (int n = 1; n <= 10; ++n) {
        const GaussRule r = gauss_rule(n);
        double sum = 0.0;
        for (double w : r.weights) sum += w;
        CHECK(std::abs(sum - 2.0) <= 1e-14);
    }
    CHECK_THROWS_AS(gauss_rule(0), ConfigError);
    CHECK_THROWS_AS(gauss_rule(11), ConfigError);
}

TEST_CASE("a jump inside a cell is averaged by its volume fraction") {
    const Grid1D g = grid(4, 3, 0.0, 1.0);
    const std::vector<double> breaks = {0.3};
    const CellField f = cell_average_of([](double x) { return x < 0.3 ? 1.0 : 0.0; }, g, 5, breaks);
    CHECK(f(0) == 1.0);
    CHECK(std::abs(f(1) - 0.2) <= 1e-15);
    CHECK(f(2) == 0.0);
}

TEST_CASE("totals use the cell volume") {
    CellField f = field_of({1, 2, 3, 4}, 3);
    CHECK(f.total() == doctest::Approx(2.5));
    CHECK(f.interior_finite());
    f(2) = std::nan("");
    CHECK_FALSE(f.interior_finite());
}
