/// @file golden.hpp
/// @brief Reference-table fixtures under golden/ and their recomputation.
///
/// A fixture is CSV with `#` comment lines followed by the header
/// `row,coord,value,rel_tol,abs_tol`. The value may be written as `a+b` or
/// `a-b` to keep a printed round-off offset. Empty tolerances use the
/// defaults.

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace weno {

#ifndef WENO_GOLDEN_DIR
#define WENO_GOLDEN_DIR "golden"
#endif

struct GoldenEntry {
    std::string row;
    double coord = 0.0;
    std::string text;  ///< value as written
    double value = 0.0;
    std::optional<double> rel_tol;
    std::optional<double> abs_tol;
};

struct GoldenFixture {
    std::string id;
    std::vector<std::string> comments;
    std::vector<GoldenEntry> entries;
};

/// Throws ConfigError when the file is missing, malformed or has no entries.
GoldenFixture load_fixture(const std::string& path);

/// Evaluates "a", "a+b" or "a-b" (each term a decimal or e-notation number).
double parse_reference_value(const std::string& text);

/// Half a unit in the last printed digit of the final term. Plain decimals
/// follow the six-decimal table convention (5e-7); e-notation uses its
/// mantissa digits.
double printed_half_unit(const std::string& text);

inline constexpr double kDefaultRelTol = 1e-6;
inline constexpr double kDefaultAbsTol = 1e-15;

/// max(rel |ref|, abs, printed_half_unit) with the defaults filled in.
double golden_tolerance(const GoldenEntry& e);

/// One recomputed table cell.
struct GoldenValue {
    std::string row;
    double coord = 0.0;
    double value = 0.0;
};

/// Recomputes every cell of the table `id`. Throws ConfigError for an
/// unknown id.
std::vector<GoldenValue> compute_table(const std::string& id);

struct GoldenDiff {
    GoldenEntry entry;
    std::optional<double> computed;  ///< empty when no matching cell exists
    double tolerance = 0.0;
    bool ok = false;
};

struct GoldenResult {
    std::string id;
    std::vector<GoldenDiff> diffs;

    bool passed() const;
    int failures() const;
    /// One line per cell (or only the failing ones) and a summary line.
    std::string listing(bool failures_only) const;
};

/// Fixture ids (file names without .csv) in `dir`, sorted.
std::vector<std::string> golden_table_ids(const std::string& dir = WENO_GOLDEN_DIR);

GoldenResult golden_check(const std::string& id, const std::string& dir = WENO_GOLDEN_DIR);

}  // namespace weno
