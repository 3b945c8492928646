/// @file golden.cpp
/// @brief Fixture parsing, table recomputation and comparison.

#include "weno/golden.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <regex>

#include <fmt/format.h>

#include "weno/dissect.hpp"
#include "weno/errors.hpp"
#include "weno/run.hpp"

namespace weno {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

// Splits one CSV record; fields may be double-quoted.
std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char ch = line[i];
        if (quoted) {
            if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                cur += '"';
                ++i;
            } else if (ch == '"') {
                quoted = false;
            } else {
                cur += ch;
            }
        } else if (ch == '"') {
            quoted = true;
        } else if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (quoted) throw ConfigError("unterminated quote in fixture line: " + line);
    out.push_back(cur);
    return out;
}

double parse_number(const std::string& s) {
    const std::string t = trim(s);
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(t, &used);
    } catch (const std::exception&) {
        throw ConfigError("not a number: '" + s + "'");
    }
    if (used != t.size()) throw ConfigError("not a number: '" + s + "'");
    return v;
}

std::optional<double> parse_optional(const std::string& s) {
    if (trim(s).empty()) return std::nullopt;
    return parse_number(s);
}

// Index of the '+' or '-' joining two terms, or npos.
std::size_t term_split(const std::string& t) {
    for (std::size_t i = 1; i < t.size(); ++i)
        if ((t[i] == '+' || t[i] == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') return i;
    return std::string::npos;
}

long long coord_key(double c) { return std::llround(c * 1e6); }

// Recomputed error reports, shared by the L1 / L2 / Linf tables.
std::map<std::string, ErrorReport>& report_cache() {
    static std::map<std::string, ErrorReport> cache;
    return cache;
}
std::mutex& report_mutex() {
    static std::mutex m;
    return m;
}

ErrorReport cached_report(const std::string& problem, const WeightScheme& s) {
    const std::string key = problem + "|" + s.label() + "|" + fmt::format("{:.17g}", s.eps);
    {
        std::lock_guard<std::mutex> lock(report_mutex());
        auto it = report_cache().find(key);
        if (it != report_cache().end()) return it->second;
    }
    RunConfig cfg;
    cfg.problem = problem;
    cfg.scheme = s;
    ErrorReport r = converge(cfg).report;
    std::lock_guard<std::mutex> lock(report_mutex());
    report_cache()[key] = r;
    return r;
}

std::vector<WeightScheme> convergence_schemes(const std::string& problem) {
    const WeightScheme zl = problem == "advection2d" ? WeightScheme::zl(5.0, 1.0) : WeightScheme::zl(2.0, 2.0);
    return {WeightScheme::js(), WeightScheme::m(), WeightScheme::z(), WeightScheme::zr(2.0), zl};
}

std::vector<GoldenValue> convergence_table(const std::string& problem, const std::string& norm) {
    std::vector<GoldenValue> out;
    const std::string name = norm == "l1" ? "L1" : norm == "l2" ? "L2" : "Linf";
    for (const WeightScheme& s : convergence_schemes(problem)) {
        const ErrorReport r = cached_report(problem, s);
        for (const ErrorRow& row : r.rows) {
            const double err = norm == "l1" ? row.err.l1 : norm == "l2" ? row.err.l2 : row.err.linf;
            const auto& order = norm == "l1" ? row.order_l1 : norm == "l2" ? row.order_l2 : row.order_linf;
            out.push_back({name + " " + s.label(), double(row.n), err});
            if (order) out.push_back({"order " + name + " " + s.label(), double(row.n), *order});
        }
    }
    return out;
}

std::vector<GoldenValue> flatten(const Table& t) {
    std::vector<GoldenValue> out;
    for (const TableRow& r : t.rows)
        for (std::size_t k = 0; k < t.coords.size(); ++k) out.push_back({r.label, t.coords[k], r.values[k]});
    return out;
}

}  // namespace

GoldenFixture load_fixture(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ConfigError("fixture not found: " + path);
    GoldenFixture fx;
    fx.id = std::filesystem::path(path).stem().string();
    std::string line;
    bool header_seen = false;
    int lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty()) continue;
        if (t[0] == '#') {
            fx.comments.push_back(trim(t.substr(1)));
            continue;
        }
        const auto fields = split_csv(t);
        if (!header_seen) {
            if (fields.size() != 5 || fields[0] != "row" || fields[2] != "value")
                throw ConfigError(fmt::format("{}:{}: expected header row,coord,value,rel_tol,abs_tol", path, lineno));
            header_seen = true;
            continue;
        }
        if (fields.size() != 5) throw ConfigError(fmt::format("{}:{}: expected 5 fields", path, lineno));
        GoldenEntry e;
        try {
            e.row = trim(fields[0]);
            e.coord = parse_number(fields[1]);
            e.text = trim(fields[2]);
            e.value = parse_reference_value(e.text);
            e.rel_tol = parse_optional(fields[3]);
            e.abs_tol = parse_optional(fields[4]);
        } catch (const ConfigError& err) {
            throw ConfigError(fmt::format("{}:{}: {}", path, lineno, err.what()));
        }
        fx.entries.push_back(e);
    }
    if (fx.entries.empty()) throw ConfigError("fixture has no entries: " + path);
    return fx;
}

double parse_reference_value(const std::string& text) {
    const std::string t = trim(text);
    const std::size_t k = term_split(t);
    if (k == std::string::npos) return parse_number(t);
    const double a = parse_number(t.substr(0, k));
    const double b = parse_number(t.substr(k + 1));
    return t[k] == '+' ? a + b : a - b;
}

double printed_half_unit(const std::string& text) {
    std::string t = trim(text);
    const std::size_t k = term_split(t);
    if (k != std::string::npos) t = t.substr(k + 1);
    static const std::regex enote(R"(^[+-]?(\d+)(?:\.(\d*))?[eE]([+-]?\d+)$)");
    std::smatch m;
    if (std::regex_match(t, m, enote)) {
        const int decimals = static_cast<int>(m[2].length());
        const int exponent = std::stoi(m[3].str());
        return 0.5 * std::pow(10.0, exponent - decimals);
    }
    return 5e-7;
}

double golden_tolerance(const GoldenEntry& e) {
    const double rel = e.rel_tol.value_or(kDefaultRelTol);
    const double abs = e.abs_tol.value_or(kDefaultAbsTol);
    return std::max({rel * std::abs(e.value), abs, printed_half_unit(e.text)});
}

std::vector<GoldenValue> compute_table(const std::string& id) {
    static const std::regex stage_table(R"(^(zl-)?(weights|fluxes|solutions)-stage([123])$)");
    static const std::regex final_table(R"(^(zl-)?final$)");
    static const std::regex conv_table(R"(^(advection1d|advection2d)-(l1|l2|linf)$)");
    std::smatch m;
    RiemannSetup setup;
    if (std::regex_match(id, m, stage_table)) {
        setup.schemes = m[1].matched ? table_zl_schemes() : table_schemes();
        const StepAnalysis a = analyze_step(setup);
        return flatten(render_table(a, std::stoi(m[3].str()), parse_table_kind(m[2].str())));
    }
    if (std::regex_match(id, m, final_table)) {
        setup.schemes = m[1].matched ? table_zl_schemes() : final_table_schemes();
        return flatten(final_time_comparison(setup, 1.0));
    }
    if (std::regex_match(id, m, conv_table)) {
        const std::string problem = m[1].str() == "advection1d" ? "advection1d-accuracy" : "advection2d";
        return convergence_table(problem, m[2].str());
    }
    throw ConfigError("unknown golden table '" + id + "'");
}

bool GoldenResult::passed() const { return failures() == 0; }

int GoldenResult::failures() const {
    return static_cast<int>(std::count_if(diffs.begin(), diffs.end(), [](const GoldenDiff& d) { return !d.ok; }));
}

std::string GoldenResult::listing(bool failures_only) const {
    std::string out;
    for (const GoldenDiff& d : diffs) {
        if (failures_only && d.ok) continue;
        const std::string computed = d.computed ? fmt::format("{:.10e}", *d.computed) : "missing";
        const std::string diff = d.computed ? fmt::format("{:.3e}", std::abs(*d.computed - d.entry.value)) : "-";
        out += fmt::format("{:<4} {} {:<24} {:>8g}  ref {:<16} got {:<18} |diff| {:<10} tol {:.3e}\n",
                           d.ok ? "ok" : "FAIL", id, d.entry.row, d.entry.coord, d.entry.text, computed, diff,
                           d.tolerance);
    }
    out += fmt::format("{}: {} of {} cells within tolerance\n", id, static_cast<int>(diffs.size()) - failures(),
                       diffs.size());
    return out;
}

std::vector<std::string> golden_table_ids(const std::string& dir) {
    std::vector<std::string> ids;
    std::error_code ec;
    for (const auto& entry : std::filesystem::directory_iterator(dir, ec))
        if (entry.path().extension() == ".csv") ids.push_back(entry.path().stem().string());
    if (ec) throw ConfigError("cannot list fixtures in " + dir + ": " + ec.message());
    std::sort(ids.begin(), ids.end());
    return ids;
}

GoldenResult golden_check(const std::string& id, const std::string& dir) {
    const GoldenFixture fx = load_fixture((std::filesystem::path(dir) / (id + ".csv")).string());
    std::map<std::pair<std::string, long long>, double> computed;
    for (const GoldenValue& v : compute_table(id)) computed[{v.row, coord_key(v.coord)}] = v.value;

    GoldenResult r;
    r.id = id;
    for (const GoldenEntry& e : fx.entries) {
        GoldenDiff d;
        d.entry = e;
        d.tolerance = golden_tolerance(e);
        const auto it = computed.find({e.row, coord_key(e.coord)});
        if (it != computed.end()) {
            d.computed = it->second;
            d.ok = std::abs(it->second - e.value) <= d.tolerance;
        }
        r.diffs.push_back(d);
    }
    return r;
}

}  // namespace weno
