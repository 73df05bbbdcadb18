#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "pvar/geometry.hpp"
#include "pvar/report.hpp"

namespace pvar {

// Exit statuses of `run`/the CLI.
enum ExitStatus : int {
    kExitOk = 0,          // all checks consistent with expectations
    kExitViolation = 1,   // a guaranteed inequality failed
    kExitUsage = 2,       // usage / parse error
    kExitCapExceeded = 3, // search space above the configured cap
};

struct RunConfig {
    std::string command;
    std::string input_path;    // grid function (most commands)
    std::string second_path;   // second grid / partition file where needed
    std::string output_path;   // empty or "-" = stdout

    std::optional<double> p, q, eps, H, alpha, theta;
    std::optional<Rect> rect;          // sub-rectangle; default = full domain
    std::optional<double> s, t;        // 1D coordinates (fbm-cov, fbm-scan)
    std::optional<double> cut_a, cut_b, cut_s, cut_t, cut_u;  // almost-subadd

    int nx = 0, ny = 0;                // enumerate-partitions
    std::vector<int> grid_sizes;       // fbm-scan
    int points_per_unit = 5;           // fbm-counterexample
    int neg_grid_points = 0;           // fbm-cov: run neg-correlation on this many points
    bool heuristic = false;            // vp: force the alternating engine
    bool emit_partitions = false;      // enumerate-partitions: include the full list

    EnumerationLimits limits;
    CheckTolerance tolerance;
    std::uint64_t seed = 0;
};

struct Report {
    nlohmann::json doc;
    int exit_status = kExitOk;
};

// Enumeration limits with the PVAR_CELL_CAP environment override applied.
EnumerationLimits limits_from_env();

// Dispatches config.command and assembles the machine-readable report.
// Timing is isolated under doc["timing"]; everything else is a pure
// function of the config.
Report run(const RunConfig& config);

// Serialize and write the report (stdout when path is empty or "-").
void write_report(const Report& r, const std::string& output_path);

}  // namespace pvar
