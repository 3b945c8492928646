/// @file dissect.cpp
/// @brief One-step Riemann analysis and comparison tables.

#include "weno/dissect.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <memory>
#include <sstream>

#include "weno/errors.hpp"
#include "weno/integrate.hpp"
#include "weno/solver.hpp"

namespace weno {

namespace {

// Cells left of I_0 on the analysis grid.
constexpr int kLeftCells = 100;
constexpr int kRightMargin = 100;

struct RunGrid {
    Grid1D grid;
    int offset;  // grid index of cell j is j + offset
};

RunGrid make_grid(const RiemannSetup& s, double t_final) {
    const int travel = static_cast<int>(std::ceil(t_final / s.dx - 1e-9));
    // Keep at least [-100 dx, 200 dx] so the default width 0.01 gives (b - a) / n == dx exactly.
    const int n = kLeftCells + std::max(travel + kRightMargin, 2 * kLeftCells);
    return {Grid1D{-kLeftCells * s.dx, (n - kLeftCells) * s.dx, n, kGhost}, kLeftCells};
}

CellField initial_field(const RiemannSetup& s, const RunGrid& g) {
    CellField u(g.grid);
    for (int i = 0; i < g.grid.n; ++i) u(i) = i < g.offset ? s.uL : s.uR;
    return u;
}

std::shared_ptr<ScalarOp1D> make_op(const WeightScheme& scheme) {
    auto op = std::make_shared<ScalarOp1D>();
    op->model = ScalarModel::Advection;
    op->scheme = scheme;
    op->bc = {BoundaryCondition::outflow(), BoundaryCondition::outflow()};
    op->alpha = 1.0;
    return op;
}

// Weight accessor on half-integer face labels.
class Faces {
public:
    explicit Faces(const std::vector<Triple>& w) : w_(w) {}

    double w(int s, double f) const { return at(f)[s]; }
    double A(double f) const { return combos(at(f)).A; }
    double B(double f) const { return combos(at(f)).B; }
    double C(double f) const { return combos(at(f)).C; }
    double D(double f) const { return combos(at(f)).D; }
    double E(double f) const { return combos(at(f)).E; }

private:
    const Triple& at(double f) const {
        const int j = static_cast<int>(std::lround(f - 0.5));
        return w_.at(static_cast<std::size_t>(j - kCellLo));
    }
    const std::vector<Triple>& w_;
};

std::size_t slot(int j) { return static_cast<std::size_t>(j - kCellLo); }

void stage1_errors(const Faces& F, double nu, double d, std::vector<double>& e) {
    e[slot(-2)] = -nu / 6.0 * F.w(2, -1.5) * d;
    e[slot(-1)] = nu / 6.0 * (F.w(2, -1.5) + 2.0 * F.A(-0.5)) * d;
    e[slot(0)] = nu / 6.0 * (-2.0 * F.A(-0.5) + F.B(0.5)) * d;
    e[slot(1)] = -nu / 6.0 * (F.B(0.5) + 2.0 * F.w(0, 1.5)) * d;
    e[slot(2)] = nu / 3.0 * F.w(0, 1.5) * d;
}

void stage2_errors(const Faces& F, double nu, double d, const std::vector<double>& p, std::vector<double>& e) {
    const double e0 = p[slot(0)], e1 = p[slot(1)], e2 = p[slot(2)];
    const double c = nu / 24.0;
    const double nd = nu * d;
    e[slot(-2)] = -c * F.w(2, -1.5) * (1.0 - nu) * d + c * F.w(2, -1.5) * e0;
    e[slot(-1)] = ((F.w(2, -1.5) + 2.0 * F.A(-0.5)) - (F.w(2, -1.5) + F.C(-0.5)) * nu) * nd / 24.0 +
                  c * (-(F.w(2, -1.5) + F.C(-0.5)) * e0 + F.w(2, -0.5) * e1);
    e[slot(0)] = -0.75 * nd +
                 ((-2.0 * F.A(-0.5) + F.D(0.5) + 2.0 * F.A(0.5)) + (F.C(-0.5) - F.D(0.5)) * nu) * nd / 24.0 +
                 c * ((F.C(-0.5) - F.D(0.5) + 6.0 / nu) * e0 - (F.w(2, -0.5) + F.C(0.5)) * e1 + F.w(2, 0.5) * e2);
    e[slot(1)] = 0.25 * nd +
                 (-(F.D(0.5) + 2.0 * F.A(0.5) + 2.0 * F.w(0, 1.5)) + (F.D(0.5) + F.E(1.5)) * nu) * nd / 24.0 +
                 c * ((F.D(0.5) + F.E(1.5)) * e0 + (F.C(0.5) - F.D(1.5) + 6.0 / nu) * e1 -
                      (F.w(2, 0.5) + F.C(1.5)) * e2);
    e[slot(2)] = (2.0 * F.w(0, 1.5) - (F.B(1.5) + 2.0 * F.w(0, 2.5)) * nu) * nd / 24.0 +
                 c * (-(F.E(1.5) + 2.0 * F.w(0, 2.5)) * e0 + (F.D(1.5) + F.E(2.5)) * e1 +
                      (F.C(1.5) - F.D(2.5) + 6.0 / nu) * e2);
    e[slot(3)] = F.w(0, 2.5) * nu * nu * d / 12.0 +
                 c * (2.0 * F.w(0, 2.5) * e0 - (F.E(2.5) + 2.0 * F.w(0, 3.5)) * e1 + (F.D(2.5) + F.E(3.5)) * e2);
    e[slot(4)] = c * (2.0 * F.w(0, 3.5) * e1 - (F.E(3.5) + 2.0 * F.w(0, 4.5)) * e2);
    e[slot(5)] = nu / 12.0 * F.w(0, 4.5) * e2;
}

void stage3_errors(const Faces& F, double nu, double d, const std::vector<double>& p, std::vector<double>& e) {
    auto q = [&](int j) { return p[slot(j)]; };
    const double c = nu / 9.0;
    const double nd = nu * d;
    const double r = 6.0 / nu;
    e[slot(-2)] = -c * F.w(2, -1.5) * (1.0 - nu) * d + c * F.w(2, -1.5) * q(0);
    e[slot(-1)] = ((F.w(2, -1.5) + 2.0 * F.A(-0.5)) - (F.w(2, -1.5) + F.C(-0.5)) * nu) * nd / 9.0 +
                  c * (-(F.w(2, -1.5) + F.C(-0.5)) * q(0) + F.w(2, -0.5) * q(1));
    e[slot(0)] = nd / 3.0 + ((-2.0 * F.A(-0.5) + F.B(0.5)) + (F.C(-0.5) - F.D(0.5)) * nu) * nd / 9.0 +
                 c * ((F.C(-0.5) - F.D(0.5) + r) * q(0) - (F.w(2, -0.5) + F.C(0.5)) * q(1) + F.w(2, 0.5) * q(2));
    e[slot(1)] = (-(F.B(0.5) + 2.0 * F.w(0, 1.5)) + (F.D(0.5) + F.E(1.5)) * nu) * nd / 9.0 +
                 c * ((F.D(0.5) + F.E(1.5)) * q(0) + (F.C(0.5) - F.D(1.5) + r) * q(1) -
                      (F.w(2, 0.5) + F.C(1.5)) * q(2) + F.w(2, 1.5) * q(3));
    e[slot(2)] = (2.0 * F.w(0, 1.5) - (F.E(1.5) + 2.0 * F.w(0, 2.5)) * nu) * nd / 9.0 +
                 c * (-(F.E(1.5) + 2.0 * F.w(0, 2.5)) * q(0) + (F.D(1.5) + F.E(2.5)) * q(1) +
                      (F.C(1.5) - F.D(2.5) + r) * q(2) - (F.w(2, 1.5) + F.C(2.5)) * q(3) + F.w(2, 2.5) * q(4));
    e[slot(3)] = 2.0 / 9.0 * F.w(0, 2.5) * nu * nu * d +
                 c * (2.0 * F.w(0, 2.5) * q(0) - (F.E(2.5) + 2.0 * F.w(0, 3.5)) * q(1) +
                      (F.D(2.5) + F.E(3.5)) * q(2) + (F.C(2.5) - F.D(3.5) + r) * q(3) -
                      (F.w(2, 2.5) + F.C(3.5)) * q(4) + F.w(2, 3.5) * q(5));
    e[slot(4)] = c * (2.0 * F.w(0, 3.5) * q(1) - (F.E(3.5) + 2.0 * F.w(0, 4.5)) * q(2) +
                      (F.D(3.5) + F.E(4.5)) * q(3) + (F.C(3.5) - F.D(4.5) + r) * q(4) -
                      (F.w(2, 3.5) + F.C(4.5)) * q(5));
    e[slot(5)] = c * (2.0 * F.w(0, 4.5) * q(2) - (F.E(4.5) + 2.0 * F.w(0, 5.5)) * q(3) +
                      (F.D(4.5) + F.E(5.5)) * q(4) + (F.C(4.5) - F.D(5.5) + r) * q(5));
    e[slot(6)] = c * (2.0 * F.w(0, 5.5) * q(3) - (F.E(5.5) + 2.0 * F.w(0, 6.5)) * q(4) +
                      (F.D(5.5) + F.E(6.5)) * q(5));
    e[slot(7)] = c * (2.0 * F.w(0, 6.5) * q(4) - (F.E(6.5) + 2.0 * F.w(0, 7.5)) * q(5));
    e[slot(8)] = 2.0 * nu / 9.0 * F.w(0, 7.5) * q(5);
}

}  // namespace

void RiemannSetup::validate() const {
    if (!(nu > 0.0 && nu <= 0.5)) throw ConfigError("Courant number must lie in (0, 0.5]");
    if (!(delta() > 0.0)) throw ConfigError("jump uL - uR must be positive");
    if (!(dx > 0.0)) throw ConfigError("cell width must be positive");
    for (const auto& s : schemes) s.validate();
}

double RiemannSetup::exact_after_step(int j) const {
    if (j < 0) return uL;
    if (j == 0) return uR + nu * delta();
    return uR;
}

std::vector<WeightScheme> table_schemes() {
    return {WeightScheme::js(1e-12), WeightScheme::m(1e-40), WeightScheme::z(1e-40), WeightScheme::zr(3.0, 1e-40)};
}

std::vector<WeightScheme> final_table_schemes() {
    return {WeightScheme::js(1e-12), WeightScheme::m(1e-40), WeightScheme::z(1e-40), WeightScheme::zr(2.0, 1e-40)};
}

std::vector<WeightScheme> table_zl_schemes() {
    return {WeightScheme::zl(1, 1), WeightScheme::zl(2, 1), WeightScheme::zl(1, 2), WeightScheme::zl(2, 2)};
}

Combos combos(const Triple& w) {
    return {w[1] + 2.0 * w[2], 5.0 * w[0] + w[1], 2.0 * w[1] + 5.0 * w[2], 11.0 * w[0] + 5.0 * w[1] + 2.0 * w[2],
            7.0 * w[0] + w[1]};
}

std::vector<double> stage_formula_errors(int stage, const std::vector<Triple>& weights,
                                         const std::vector<double>& previous, double nu, double delta) {
    const std::size_t cells = static_cast<std::size_t>(kCellHi - kCellLo);
    if (weights.size() != cells) throw ConfigError("weights must cover the recorded faces");
    std::vector<double> e(cells, 0.0);
    const Faces F(weights);
    switch (stage) {
        case 1: stage1_errors(F, nu, delta, e); break;
        case 2:
            if (previous.size() != cells) throw ConfigError("stage 2 needs the stage 1 errors");
            stage2_errors(F, nu, delta, previous, e);
            break;
        case 3:
            if (previous.size() != cells) throw ConfigError("stage 3 needs the stage 2 errors");
            stage3_errors(F, nu, delta, previous, e);
            break;
        default: throw ConfigError("stage must be 1, 2 or 3");
    }
    return e;
}

StepAnalysis analyze_step(const RiemannSetup& setup) {
    setup.validate();
    StepAnalysis out{setup, {}};
    const RunGrid g = make_grid(setup, setup.nu * setup.dx);
    const double dt = setup.nu * setup.dx;

    for (const WeightScheme& scheme : setup.schemes) {
        SchemeAnalysis sa{scheme, {}};
        auto op = make_op(scheme);
        InterfaceTrace trace;
        op->trace = &trace;
        CellField u = initial_field(setup, g);

        StepOptions opt;
        opt.step_index = 1;
        opt.hook = [&](int stage, const CellField& f) {
            StageReport& r = sa.stages[stage - 1];
            r.stage = stage;
            for (int j = kCellLo; j < kCellHi; ++j) {
                // Face x_{j+1/2} is trace entry j + offset + 1.
                const std::size_t k = static_cast<std::size_t>(j + g.offset + 1);
                r.weights.push_back(trace.weights[k]);
                r.flux.push_back(trace.flux[k]);
                const double v = f(j + g.offset);
                r.solution.push_back(v);
                r.measured_error.push_back(v - setup.exact_after_step(j));
            }
        };
        rk3_step(u, bind_operator(op), dt, opt);

        std::vector<double> prev;
        for (int k = 0; k < 3; ++k) {
            StageReport& r = sa.stages[k];
            r.formula_error = stage_formula_errors(k + 1, r.weights, prev, setup.nu, setup.delta());
            prev = r.formula_error;
        }
        out.schemes.push_back(std::move(sa));
    }
    return out;
}

std::string table_kind_name(TableKind k) {
    switch (k) {
        case TableKind::Weights: return "weights";
        case TableKind::Fluxes: return "fluxes";
        case TableKind::Solutions: return "solutions";
    }
    return "?";
}

TableKind parse_table_kind(const std::string& s) {
    if (s == "weights") return TableKind::Weights;
    if (s == "fluxes") return TableKind::Fluxes;
    if (s == "solutions") return TableKind::Solutions;
    throw ConfigError("unknown table kind '" + s + "' (weights, fluxes, solutions)");
}

std::string format_value(double v) {
    if (v == 0.0) return "0";
    char buf[64];
    if (std::abs(v) >= 1e-3) {
        std::snprintf(buf, sizeof buf, "%.6f", v);
        std::string s(buf);
        while (s.back() == '0') s.pop_back();
        if (s.back() == '.') s.pop_back();
        if (s == "-0") s = "0";
        return s;
    }
    std::snprintf(buf, sizeof buf, "%.3e", v);
    return buf;
}

std::string Table::to_text() const {
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> head{"x"};
    for (double c : coords) head.push_back(format_value(c));
    cells.push_back(head);
    for (const auto& r : rows) {
        std::vector<std::string> line{r.label};
        for (double v : r.values) line.push_back(format_value(v));
        cells.push_back(line);
    }
    std::vector<std::size_t> width(head.size(), 0);
    for (const auto& line : cells)
        for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
    std::ostringstream os;
    if (!title.empty()) os << title << '\n';
    for (const auto& line : cells) {
        for (std::size_t i = 0; i < line.size(); ++i) {
            os << line[i];
            if (i + 1 < line.size()) os << std::string(width[i] - line[i].size() + 2, ' ');
        }
        os << '\n';
    }
    return os.str();
}

std::string Table::to_csv() const {
    std::ostringstream os;
    os.precision(17);
    os << "row";
    for (double c : coords) os << ',' << c;
    os << '\n';
    for (const auto& r : rows) {
        if (r.label.find(',') != std::string::npos)
            os << '"' << r.label << '"';
        else
            os << r.label;
        for (double v : r.values) os << ',' << v;
        os << '\n';
    }
    return os.str();
}

Table render_table(const StepAnalysis& a, int stage, TableKind kind) {
    if (stage < 1 || stage > 3) throw ConfigError("stage must be 1, 2 or 3");
    static constexpr int kLastFace[3] = {3, 6, 9};
    static constexpr int kLastCell[3] = {3, 6, 9};
    const double dx = a.setup.dx;
    Table t;
    t.title = "stage " + std::to_string(stage) + " " + table_kind_name(kind);

    if (kind == TableKind::Solutions) {
        std::vector<int> cells;
        for (int j = -3; j <= kLastCell[stage - 1]; ++j) cells.push_back(j);
        for (int j : cells) t.coords.push_back((j + 0.5) * dx);
        for (const auto& s : a.schemes) {
            TableRow row{s.scheme.label(), {}};
            for (int j : cells) row.values.push_back(s.stages[stage - 1].solution_at(j));
            t.rows.push_back(row);
        }
        TableRow exact{"exact", {}};
        for (int j : cells) exact.values.push_back(a.setup.exact_after_step(j));
        t.rows.push_back(exact);
        return t;
    }

    std::vector<int> faces;
    for (int j = -4; j <= kLastFace[stage - 1]; ++j) faces.push_back(j);
    for (int j : faces) t.coords.push_back((j + 1) * dx);
    if (kind == TableKind::Fluxes) {
        for (const auto& s : a.schemes) {
            TableRow row{s.scheme.label(), {}};
            for (int j : faces) row.values.push_back(s.stages[stage - 1].flux_at(j));
            t.rows.push_back(row);
        }
        return t;
    }
    for (int k = 0; k < 3; ++k)
        for (const auto& s : a.schemes) {
            TableRow row{"w" + std::to_string(k) + " " + s.scheme.label(), {}};
            for (int j : faces) row.values.push_back(s.stages[stage - 1].weight_at(j)[k]);
            t.rows.push_back(row);
        }
    return t;
}

Table final_time_comparison(const RiemannSetup& setup, double t_final) {
    setup.validate();
    if (!(t_final > 0.0)) throw ConfigError("final time must be positive");
    const RunGrid g = make_grid(setup, t_final);
    const double dt = setup.nu * setup.dx;
    const int shift = static_cast<int>(std::lround(t_final / setup.dx));

    Table t;
    t.title = "solutions at T=" + format_value(t_final);
    std::vector<int> cells;
    for (int j = shift - 4; j < shift + 4; ++j) cells.push_back(j);
    for (int j : cells) t.coords.push_back((j + 0.5) * setup.dx);

    for (const WeightScheme& scheme : setup.schemes) {
        auto op = make_op(scheme);
        CellField u = initial_field(setup, g);
        const auto plan = [dt](const CellField&) { return dt; };
        integrate_to(u, bind_operator(op), t_final, plan);
        TableRow row{scheme.label(), {}};
        for (int j : cells) row.values.push_back(u(j + g.offset));
        t.rows.push_back(row);
    }
    TableRow exact{"exact", {}};
    for (int j : cells) exact.values.push_back(j < shift ? setup.uL : setup.uR);
    t.rows.push_back(exact);
    return t;
}

}  // namespace weno
