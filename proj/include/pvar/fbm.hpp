#pragma once

#include <vector>

#include "pvar/grid_function.hpp"
#include "pvar/report.hpp"
#include "pvar/variation.hpp"

namespace pvar {

// Fractional Brownian motion covariance kernel, Hurst parameter H in (0, 1/2].
struct HurstKernel {
    double H;
    explicit HurstKernel(double H_);
};

// C^H(s,t) = (t^{2H} + s^{2H} - |t-s|^{2H}) / 2 for s,t >= 0.
double fbm_cov(const HurstKernel& k, double s, double t);

// Rectangular increment of C^H over r = [a,b]x[c,d], i.e. the increment
// covariance E[b^H_{a,b} b^H_{c,d}], in closed form:
// (|d-a|^{2H} + |c-b|^{2H} - |d-b|^{2H} - |c-a|^{2H}) / 2.
double fbm_rect_cov(const HurstKernel& k, const Rect& r);

// Sample C^H on grid x grid.
GridFunction fbm_grid_function(const HurstKernel& k, const Dissection& xs, const Dissection& ys);

// fbm_rect_cov <= 0 for every [a,b] x [c,d] with b <= c drawn from `grid`.
// For H = 1/2 the values vanish identically (degenerate pass).
InequalityReport neg_correlation_check(const HurstKernel& k, const Dissection& grid);

struct VariationScanRow {
    int n = 0;        // points per axis
    double value = 0; // V_{1/(2H)} norm on the n x n uniform grid of [s,t]^2
    double ratio = 0; // value / (t-s)^{2H}
    Method method = Method::exact;
};

struct VariationScanReport {
    double H = 0;
    double s = 0, t = 0;
    std::vector<VariationScanRow> rows;
    double empirical_c = 0;     // max ratio over the scan
    double max_rel_step = 0;    // max relative jump between consecutive ratios
};

// V_{1/(2H)}(C^H; [s,t]^2) on uniform n x n grids; exact engine within the
// axis cap, alternating heuristic beyond.
VariationScanReport fbm_variation_scan(const HurstKernel& k, double s, double t,
                                       const std::vector<int>& grid_sizes,
                                       const EnumerationLimits& lim = {});

// The 4-piece partition [0,2]^2 = [0,1]^2 u [1,2]^2 u R u R' with
// R = [0,1]x[1,2], R' = [1,2]x[0,1]: compares sum of V_{1/(2H)}(piece)^{1/(2H)}
// against the whole. For H < 1/2 a violation (sum > whole) is the expected
// outcome; for H = 1/2 the four terms are additive.
InequalityReport superadditivity_counterexample(const HurstKernel& k, int points_per_unit = 5,
                                                const EnumerationLimits& lim = {},
                                                const CheckTolerance& tol = {});

}  // namespace pvar
