/// @file output.cpp
/// @brief Text emission for runs.

#include "weno/output.hpp"

#include <fstream>

#include <fmt/format.h>

#include "weno/errors.hpp"

namespace weno {

std::string format_double(double v) { return fmt::format("{}", v); }

std::string solution_csv(const CellField& u) {
    std::string out;
    if (u.is_2d()) {
        const Grid2D& g = u.grid2d();
        out = "x,y,u\n";
        for (int j = 0; j < g.ny; ++j)
            for (int i = 0; i < g.nx; ++i)
                out += fmt::format("{},{},{}\n", g.xc(i), g.yc(j), u.at(i, j));
        return out;
    }
    const Grid1D& g = u.grid1d();
    if (u.components() == 3) {
        out = "x,rho,momentum,energy\n";
        for (int i = 0; i < g.n; ++i)
            out += fmt::format("{},{},{},{}\n", g.center(i), u(i, 0), u(i, 1), u(i, 2));
        return out;
    }
    if (u.components() != 1) throw ConfigError("solution CSV supports 1 or 3 components");
    out = "x,u\n";
    for (int i = 0; i < g.n; ++i) out += fmt::format("{},{}\n", g.center(i), u(i));
    return out;
}

void Manifest::add(const std::string& key, const std::string& value) { entries_.emplace_back(key, value); }

void Manifest::add(const std::string& key, double value) { add(key, format_double(value)); }

void Manifest::add(const std::string& key, int value) { add(key, std::to_string(value)); }

std::string Manifest::to_text() const {
    std::string out;
    for (const auto& [k, v] : entries_) out += k + " = " + v + "\n";
    return out;
}

std::string gnuplot_solution_script(const std::string& csv, const std::string& reference_csv,
                                    bool two_d, bool euler, const std::string& title) {
    std::string s = "set datafile separator ','\nset key autotitle columnhead\n";
    s += "set title '" + title + "'\n";
    if (two_d) {
        s += "set view map\nset xlabel 'x'\nset ylabel 'y'\n";
        s += "splot '" + csv + "' using 1:2:3 with points palette pointtype 5 pointsize 0.5 notitle\n";
        return s;
    }
    s += "set xlabel 'x'\n";
    s += "set ylabel '" + std::string(euler ? "density" : "u") + "'\n";
    s += "plot '" + csv + "' using 1:2 with points pointtype 6 title 'numerical'";
    if (!reference_csv.empty())
        s += ", \\\n     '" + reference_csv + "' using 1:2 with lines dashtype 2 title 'reference'";
    s += "\n";
    return s;
}

std::string gnuplot_convergence_script(const std::string& csv, const std::string& title) {
    std::string s = "set datafile separator ','\n";
    s += "set title '" + title + "'\n";
    s += "set logscale xy\nset xlabel 'N'\nset ylabel 'error'\nset key top right\n";
    s += "plot '" + csv + "' using 1:2 with linespoints title 'L1', \\\n";
    s += "     '" + csv + "' using 1:4 with linespoints title 'L2', \\\n";
    s += "     '" + csv + "' using 1:6 with linespoints title 'Linf'\n";
    return s;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::error_code ec;
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw ConfigError("cannot create directory " + path.parent_path().string() + ": " + ec.message());
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ConfigError("cannot write " + path.string());
    f << content;
    if (!f) throw ConfigError("write failed for " + path.string());
}

}  // namespace weno
