#pragma once

// Test-only brute-force oracles, kept independent of the library's engines:
// different state representations, different loop structures, no shared
// helpers beyond the public data types.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "pvar/geometry.hpp"
#include "pvar/grid_function.hpp"

namespace oracle {

using CellRect = std::array<int, 4>;  // i0, i1, j0, j1 over cell corner indices
using CanonicalPartition = std::vector<CellRect>;

// Recursive cover of the first uncovered cell with every fitting rectangle,
// occupancy matrix as state, results deduplicated through a set.
inline std::set<CanonicalPartition> partitions(int nx, int ny) {
    std::set<CanonicalPartition> results;
    std::vector<std::vector<bool>> occ(static_cast<size_t>(ny),
                                       std::vector<bool>(static_cast<size_t>(nx), false));
    CanonicalPartition acc;

    auto first_uncovered = [&](int& fx, int& fy) {
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < nx; ++i)
                if (!occ[static_cast<size_t>(j)][static_cast<size_t>(i)]) {
                    fx = i;
                    fy = j;
                    return true;
                }
        return false;
    };

    std::function<void()> dfs = [&]() {
        int fx, fy;
        if (!first_uncovered(fx, fy)) {
            CanonicalPartition sorted = acc;
            std::sort(sorted.begin(), sorted.end());
            results.insert(std::move(sorted));
            return;
        }
        for (int i0 = 0; i0 < nx; ++i0)
            for (int i1 = i0 + 1; i1 <= nx; ++i1)
                for (int j0 = 0; j0 < ny; ++j0)
                    for (int j1 = j0 + 1; j1 <= ny; ++j1) {
                        if (!(i0 <= fx && fx < i1 && j0 <= fy && fy < j1)) continue;
                        bool free = true;
                        for (int j = j0; j < j1 && free; ++j)
                            for (int i = i0; i < i1 && free; ++i)
                                if (occ[static_cast<size_t>(j)][static_cast<size_t>(i)]) free = false;
                        if (!free) continue;
                        for (int j = j0; j < j1; ++j)
                            for (int i = i0; i < i1; ++i) occ[static_cast<size_t>(j)][static_cast<size_t>(i)] = true;
                        acc.push_back({i0, i1, j0, j1});
                        dfs();
                        acc.pop_back();
                        for (int j = j0; j < j1; ++j)
                            for (int i = i0; i < i1; ++i) occ[static_cast<size_t>(j)][static_cast<size_t>(i)] = false;
                    }
    };
    dfs();
    return results;
}

// Exhaustive 1D p-variation: every subset of interior points.
inline double pvar_1d_sum(const std::vector<double>& x, double p) {
    const int n = static_cast<int>(x.size());
    const int interior = n - 2;
    double best = std::pow(std::abs(x.back() - x.front()), p);
    for (std::uint32_t mask = 0; mask < (1u << interior); ++mask) {
        std::vector<int> d{0};
        for (int k = 0; k < interior; ++k)
            if ((mask >> k) & 1u) d.push_back(k + 1);
        d.push_back(n - 1);
        double s = 0;
        for (size_t t = 1; t < d.size(); ++t)
            s += std::pow(std::abs(x[static_cast<size_t>(d[t])] - x[static_cast<size_t>(d[t - 1])]), p);
        best = std::max(best, s);
    }
    return best;
}

// Exhaustive grid-like V_p power sum by direct per-pair evaluation.
inline double vp_2d_sum(const pvar::GridFunction& f, double p) {
    const int n = f.nx(), m = f.ny();
    const int ni = n - 2, nj = m - 2;
    double best = 0;
    for (std::uint32_t xm = 0; xm < (1u << ni); ++xm) {
        std::vector<int> dx{0};
        for (int k = 0; k < ni; ++k)
            if ((xm >> k) & 1u) dx.push_back(k + 1);
        dx.push_back(n - 1);
        for (std::uint32_t ym = 0; ym < (1u << nj); ++ym) {
            std::vector<int> dy{0};
            for (int k = 0; k < nj; ++k)
                if ((ym >> k) & 1u) dy.push_back(k + 1);
            dy.push_back(m - 1);
            double s = 0;
            for (size_t a = 1; a < dx.size(); ++a)
                for (size_t b = 1; b < dy.size(); ++b)
                    s += std::pow(
                        std::abs(f.increment(dx[a - 1], dx[a], dy[b - 1], dy[b])), p);
            best = std::max(best, s);
        }
    }
    return best;
}

// Max power sum over an explicit list of cell partitions.
inline double cvp_sum(const pvar::GridFunction& f, double p,
                      const std::set<CanonicalPartition>& parts) {
    double best = 0;
    for (const auto& part : parts) {
        double s = 0;
        for (const auto& [i0, i1, j0, j1] : part)
            s += std::pow(std::abs(f.increment(i0, i1, j0, j1)), p);
        best = std::max(best, s);
    }
    return best;
}

// Discrete 2D integral summed in the opposite (j-major) order.
inline double integral_2d(const pvar::GridFunction& y, const pvar::GridFunction& x,
                          const std::vector<int>& dx, const std::vector<int>& dy) {
    double s = 0;
    for (size_t b = 1; b < dy.size(); ++b)
        for (size_t a = 1; a < dx.size(); ++a)
            s += y.value(dx[a], dy[b]) * x.increment(dx[a - 1], dx[a], dy[b - 1], dy[b]);
    return s;
}

}  // namespace oracle
