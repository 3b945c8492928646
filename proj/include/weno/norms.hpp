/// @file norms.hpp
/// @brief Discrete error norms, convergence orders and error reports.

#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "weno/mesh.hpp"

namespace weno {

/// L1 = (1/N) sum |e|, L2 = sqrt((1/N) sum e^2), Linf = max |e|.
struct ErrorNorms {
    double l1 = 0.0;
    double l2 = 0.0;
    double linf = 0.0;
};

ErrorNorms error_norms(std::span<const double> errors);

/// Norms of numeric - exact over the interior cells of one component.
/// Throws ConfigError when the fields do not share a grid.
ErrorNorms error_norms(const CellField& numeric, const CellField& exact, int component = 0);

/// log(coarse / fine) / log(n_fine / n_coarse); log2 of the ratio when the
/// grid is doubled. Empty when either error is not positive.
std::optional<double> convergence_order(double coarse, double fine, double refinement = 2.0);

struct ErrorRow {
    int n = 0;
    ErrorNorms err;
    std::optional<double> order_l1, order_l2, order_linf;
};

/// Rows ordered by grid size; each order compares a row with the one above.
struct ErrorReport {
    std::vector<ErrorRow> rows;

    /// Header `N,L1,order1,L2,order2,Linf,orderInf`; undefined orders are blank.
    std::string to_csv() const;
    std::string to_text() const;
};

ErrorReport make_report(const std::vector<std::pair<int, ErrorNorms>>& runs);

}  // namespace weno
