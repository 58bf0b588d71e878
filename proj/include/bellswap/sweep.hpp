#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bellswap/states.hpp"

namespace bellswap {

enum class Scenario {
    damp_werner,
    swap_diag,
    swap_gisin,
    swap_lhv,
    swap_damped_werner,
};

std::string_view to_string(Scenario s);
Scenario scenario_from_string(std::string_view s);

struct ScenarioInfo {
    std::vector<std::string> params;  // canonical order; also the CSV columns
    // Copy-2 parameters default to their copy-1 counterpart when not given.
    std::map<std::string, std::string> mirrors;
    bool is_swap = false;
};

const ScenarioInfo& scenario_info(Scenario s);

// Inclusive grid: the step count is round((stop-start)/step); the points are
// start + i*(stop-start)/count so both endpoints are hit exactly.
struct GridRange {
    std::string name;
    double start = 0, stop = 0, step = 0;
};

std::vector<double> grid_points(const GridRange& g);

struct SweepSpec {
    Scenario scenario = Scenario::damp_werner;
    std::vector<GridRange> grids;  // declared order; first grid is outermost
    std::map<std::string, double> fixed;
    std::optional<std::set<BellLabel>> outcome_filter;
    int threads = 1;
};

struct SweepRow {
    std::vector<double> params;  // scenario canonical order
    std::string outcome_label = "-";
    std::string status = "ok";
    bool has_probability = false;
    double probability = 0;
    bool has_analysis = false;
    double m = 0, chsh_max = 0, abs_lhs = 0, post_unitary_m = 0;
    bool abs_local = false;
};

// Rows in deterministic order: lexicographic in grid indices, then Bell
// label order. Per-point domain/validation failures become status rows.
std::vector<SweepRow> run_sweep_rows(const SweepSpec& spec);

// CSV with a fixed header; numbers are written with 9 significant digits.
// The byte stream is identical across runs and thread counts.
std::string run_sweep_csv(const SweepSpec& spec);
std::string sweep_csv_header(Scenario s);
std::string run_sweep_json(const SweepSpec& spec);

struct ThresholdQuery {
    Scenario scenario = Scenario::damp_werner;
    std::map<std::string, double> fixed;
    std::string scan_param;
    double lo = 0, hi = 1;
    std::optional<BellLabel> outcome;  // required for swap scenarios
    double tolerance = 1e-6;
};

struct ThresholdResult {
    double root = 0;
    double f_lo = 0, f_hi = 0;  // endpoint criterion values at the start
    int iterations = 0;
    double lo = 0, hi = 0;  // final bracket
};

// Bisection on (abs_lhs - 1) along the scan parameter. Throws bracket_error
// when the endpoints do not straddle the boundary.
ThresholdResult run_threshold(const ThresholdQuery& query);

// Plain bisection helper; f must change sign across [lo, hi].
ThresholdResult bisect(const std::function<double(double)>& f, double lo, double hi,
                       double tolerance);

// 9-significant-digit value for CSV cells.
std::string format_csv_number(double v);

}  // namespace bellswap
