#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "pvar/geometry.hpp"

namespace pvar {

using CheckWitness =
    std::variant<std::monostate, Rect, Dissection, std::pair<Dissection, Dissection>, RectPartition>;

// lhs <= rhs * constant is the canonical shape; slack = constant*rhs - lhs.
struct CheckRecord {
    std::string name;
    double lhs = 0;
    double rhs = 0;
    double constant = 1;
    double slack = 0;
    bool pass = true;
    CheckWitness witness;
};

struct CheckTolerance {
    double abs = 1e-10;
    double rel = 1e-10;
    double margin(double lhs, double rhs) const {
        return std::max(abs, rel * std::max(std::abs(lhs), std::abs(rhs)));
    }
};

struct InequalityReport {
    std::vector<CheckRecord> checks;

    bool all_pass() const {
        return std::all_of(checks.begin(), checks.end(),
                           [](const CheckRecord& c) { return c.pass; });
    }
    double worst_slack() const {
        double w = std::numeric_limits<double>::infinity();
        for (const auto& c : checks) w = std::min(w, c.slack);
        return w;
    }
    int violation_count() const {
        return static_cast<int>(std::count_if(checks.begin(), checks.end(),
                                              [](const CheckRecord& c) { return !c.pass; }));
    }

    // lhs <= constant*rhs within tol; returns the appended record.
    CheckRecord& add(std::string name, double lhs, double rhs, double constant = 1,
                     CheckWitness witness = std::monostate{}, const CheckTolerance& tol = {});
};

}  // namespace pvar
