/// @file norms.cpp
/// @brief Error norms and convergence reports.

#include "weno/norms.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>

#include "weno/errors.hpp"

namespace weno {

ErrorNorms error_norms(std::span<const double> errors) {
    if (errors.empty()) throw ConfigError("error norms need at least one cell");
    ErrorNorms r;
    for (double e : errors) {
        const double a = std::abs(e);
        r.l1 += a;
        r.l2 += a * a;
        r.linf = std::max(r.linf, a);
    }
    const double n = static_cast<double>(errors.size());
    r.l1 /= n;
    r.l2 = std::sqrt(r.l2 / n);
    return r;
}

namespace {

bool same_grid(const CellField& a, const CellField& b) {
    if (a.is_2d() != b.is_2d() || a.components() != b.components()) return false;
    if (a.is_2d()) {
        const Grid2D &g = a.grid2d(), &h = b.grid2d();
        return g.nx == h.nx && g.ny == h.ny && g.ax == h.ax && g.bx == h.bx && g.ay == h.ay && g.by == h.by;
    }
    const Grid1D &g = a.grid1d(), &h = b.grid1d();
    return g.n == h.n && g.a == h.a && g.b == h.b;
}

}  // namespace

ErrorNorms error_norms(const CellField& numeric, const CellField& exact, int component) {
    if (!same_grid(numeric, exact)) throw ConfigError("error norms need fields on the same grid");
    if (component < 0 || component >= numeric.components()) throw ConfigError("component out of range");
    std::vector<double> e;
    e.reserve(numeric.interior_size());
    if (numeric.is_2d()) {
        const Grid2D& g = numeric.grid2d();
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i) e.push_back(numeric.at(i, j, component) - exact.at(i, j, component));
    } else {
        for (int i = 0; i < numeric.grid1d().n; ++i) e.push_back(numeric(i, component) - exact(i, component));
    }
    return error_norms(e);
}

std::optional<double> convergence_order(double coarse, double fine, double refinement) {
    if (!(coarse > 0.0) || !(fine > 0.0) || !(refinement > 1.0)) return std::nullopt;
    return std::log(coarse / fine) / std::log(refinement);
}

ErrorReport make_report(const std::vector<std::pair<int, ErrorNorms>>& runs) {
    auto sorted = runs;
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    ErrorReport r;
    for (std::size_t k = 0; k < sorted.size(); ++k) {
        ErrorRow row{sorted[k].first, sorted[k].second, {}, {}, {}};
        if (k > 0) {
            const auto& prev = sorted[k - 1];
            const double ratio = static_cast<double>(row.n) / prev.first;
            row.order_l1 = convergence_order(prev.second.l1, row.err.l1, ratio);
            row.order_l2 = convergence_order(prev.second.l2, row.err.l2, ratio);
            row.order_linf = convergence_order(prev.second.linf, row.err.linf, ratio);
        }
        r.rows.push_back(row);
    }
    return r;
}

namespace {

std::string order_cell(const std::optional<double>& o) { return o ? fmt::format("{:.4f}", *o) : std::string(); }

}  // namespace

std::string ErrorReport::to_csv() const {
    std::string s = "N,L1,order1,L2,order2,Linf,orderInf\n";
    for (const auto& r : rows)
        s += fmt::format("{},{:.6e},{},{:.6e},{},{:.6e},{}\n", r.n, r.err.l1, order_cell(r.order_l1), r.err.l2,
                         order_cell(r.order_l2), r.err.linf, order_cell(r.order_linf));
    return s;
}

std::string ErrorReport::to_text() const {
    std::string s = fmt::format("{:>6}  {:>10} {:>8}  {:>10} {:>8}  {:>10} {:>8}\n", "N", "L1", "order", "L2", "order",
                                "Linf", "order");
    for (const auto& r : rows) {
        const auto cell = [](const std::optional<double>& o) { return o ? fmt::format("{:.4f}", *o) : "--"; };
        s += fmt::format("{:>6}  {:>10.3e} {:>8}  {:>10.3e} {:>8}  {:>10.3e} {:>8}\n", r.n, r.err.l1,
                         cell(r.order_l1), r.err.l2, cell(r.order_l2), r.err.linf, cell(r.order_linf));
    }
    return s;
}

}  // namespace weno
