/// @file output.hpp
/// @brief CSV, manifest and gnuplot-script emission.

#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "weno/mesh.hpp"

namespace weno {

/// Shortest representation that reads back to the same double.
std::string format_double(double v);

/// One row per interior cell. 1D scalar: `x,u`; 2D scalar: `x,y,u`;
/// three-component 1D fields: `x,rho,momentum,energy`.
std::string solution_csv(const CellField& u);

/// Ordered key-value text, one `key = value` line per entry.
class Manifest {
public:
    void add(const std::string& key, const std::string& value);
    void add(const std::string& key, double value);
    void add(const std::string& key, int value);
    const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }
    std::string to_text() const;

private:
    std::vector<std::pair<std::string, std::string>> entries_;
};

/// Gnuplot script plotting a solution CSV, optionally against a reference
/// CSV of the same layout.
std::string gnuplot_solution_script(const std::string& csv, const std::string& reference_csv,
                                    bool two_d, bool euler, const std::string& title);
/// Log-log plot of the L1, L2 and Linf columns of an error report.
std::string gnuplot_convergence_script(const std::string& csv, const std::string& title);

/// Creates parent directories as needed; throws ConfigError on failure.
void write_text_file(const std::filesystem::path& path, const std::string& content);

}  // namespace weno
