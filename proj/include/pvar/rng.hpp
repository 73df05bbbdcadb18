#pragma once

#include <cstdint>
#include <random>

#include "pvar/grid_function.hpp"

namespace pvar {

// Named generator for the randomized suites: mt19937_64 with the 53-bit
// mantissa mapping u = (draw >> 11) * 2^-53, value = 2u - 1 in [-1, 1).
// Implementation-defined distributions are avoided so identical seeds give
// identical streams everywhere.
class UniformGrid {
  public:
    explicit UniformGrid(std::uint64_t seed) : eng_(seed) {}

    double next() {
        const double u = static_cast<double>(eng_() >> 11) * 0x1.0p-53;
        return 2.0 * u - 1.0;
    }

    // i in [0, n).
    int next_index(int n) {
        return static_cast<int>(eng_() % static_cast<std::uint64_t>(n));
    }

    // Random values on a uniform [0,1]^2 grid with n_x x n_y points.
    GridFunction grid(int n_x, int n_y) {
        Eigen::MatrixXd v(n_x, n_y);
        for (int i = 0; i < n_x; ++i)
            for (int j = 0; j < n_y; ++j) v(i, j) = next();
        return {Dissection::uniform(0, 1, n_x), Dissection::uniform(0, 1, n_y), std::move(v)};
    }

    // Same, but zero on the first row and column (Young–Towghi precondition).
    GridFunction grid_axis_zeroed(int n_x, int n_y) {
        Eigen::MatrixXd v = Eigen::MatrixXd::Zero(n_x, n_y);
        for (int i = 1; i < n_x; ++i)
            for (int j = 1; j < n_y; ++j) v(i, j) = next();
        return {Dissection::uniform(0, 1, n_x), Dissection::uniform(0, 1, n_y), std::move(v)};
    }

    std::vector<double> path(int n, bool zero_start = false) {
        std::vector<double> p(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = next();
        if (zero_start && n > 0) p[0] = 0.0;
        return p;
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace pvar
