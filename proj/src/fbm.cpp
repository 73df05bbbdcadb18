#include "pvar/fbm.hpp"

#include <cmath>

namespace pvar {

HurstKernel::HurstKernel(double H_) : H(H_) {
    if (!(H > 0) || H > 0.5)
        throw std::invalid_argument("HurstKernel: H must lie in (0, 1/2]");
}

double fbm_cov(const HurstKernel& k, double s, double t) {
    if (s < 0 || t < 0) throw std::domain_error("fbm_cov: negative time");
    const double h2 = 2 * k.H;
    return 0.5 * (std::pow(t, h2) + std::pow(s, h2) - std::pow(std::abs(t - s), h2));
}

double fbm_rect_cov(const HurstKernel& k, const Rect& r) {
    if (r.a < 0 || r.c < 0) throw std::domain_error("fbm_rect_cov: rectangle leaves [0,inf)^2");
    const double h2 = 2 * k.H;
    // increment covariance; the pure s^{2H}/t^{2H} corner terms cancel
    return 0.5 * (std::pow(std::abs(r.d - r.a), h2) + std::pow(std::abs(r.c - r.b), h2) -
                  std::pow(std::abs(r.d - r.b), h2) - std::pow(std::abs(r.c - r.a), h2));
}

GridFunction fbm_grid_function(const HurstKernel& k, const Dissection& xs, const Dissection& ys) {
    return GridFunction::sample(xs, ys, [&](double s, double t) { return fbm_cov(k, s, t); });
}

InequalityReport neg_correlation_check(const HurstKernel& k, const Dissection& grid) {
    InequalityReport rep;
    const bool degenerate = k.H == 0.5;  // zero correlation, trivially <= 0
    double worst = -std::numeric_limits<double>::infinity();
    Rect worst_rect;
    int pairs = 0;
    for (int a = 0; a < grid.size(); ++a)
        for (int b = a + 1; b < grid.size(); ++b)
            for (int c = b; c < grid.size(); ++c)
                for (int d = c + 1; d < grid.size(); ++d) {
                    const Rect r{grid[a], grid[b], grid[c], grid[d]};
                    const double v = fbm_rect_cov(k, r);
                    ++pairs;
                    if (v > worst) {
                        worst = v;
                        worst_rect = r;
                    }
                }
    if (pairs == 0) throw std::invalid_argument("neg_correlation_check: grid too small");
    rep.add(degenerate ? "disjoint_increment_cov_nonpositive (degenerate H=1/2)"
                       : "disjoint_increment_cov_nonpositive",
            worst, 0.0, 1.0, worst_rect, CheckTolerance{1e-12, 0});
    return rep;
}

VariationScanReport fbm_variation_scan(const HurstKernel& k, double s, double t,
                                       const std::vector<int>& grid_sizes,
                                       const EnumerationLimits& lim) {
    if (!(s >= 0 && t > s)) throw std::invalid_argument("fbm_variation_scan: need 0 <= s < t");
    const double p = 1.0 / (2 * k.H);
    VariationScanReport rep;
    rep.H = k.H;
    rep.s = s;
    rep.t = t;
    const double scale = std::pow(t - s, 2 * k.H);
    for (int n : grid_sizes) {
        if (n < 2) throw std::invalid_argument("fbm_variation_scan: grid size < 2");
        const Dissection ax = Dissection::uniform(s, t, n);
        const GridFunction f = fbm_grid_function(k, ax, ax);
        VariationScanRow row;
        row.n = n;
        if (n - 2 <= lim.max_axis_interior) {
            row.value = vp_2d_exact(f, p, f.domain(), lim).value;
            row.method = Method::exact;
        } else {
            row.value = vp_2d_alternating(f, p, f.domain()).value;
            row.method = Method::heuristic;
        }
        row.ratio = row.value / scale;
        rep.rows.push_back(row);
    }
    for (size_t i = 0; i < rep.rows.size(); ++i) {
        rep.empirical_c = std::max(rep.empirical_c, rep.rows[i].ratio);
        if (i > 0 && rep.rows[i - 1].ratio > 0)
            rep.max_rel_step =
                std::max(rep.max_rel_step, std::abs(rep.rows[i].ratio - rep.rows[i - 1].ratio) /
                                               rep.rows[i - 1].ratio);
    }
    return rep;
}

InequalityReport superadditivity_counterexample(const HurstKernel& k, int points_per_unit,
                                                const EnumerationLimits& lim,
                                                const CheckTolerance& tol) {
    if (points_per_unit < 2)
        throw std::invalid_argument("superadditivity_counterexample: need >= 2 points per unit");
    const double p = 1.0 / (2 * k.H);
    const int n = points_per_unit;

    // omega_bar(piece) = V_p(C^H; piece)^p on the piece's own n x n grid
    auto piece_value = [&](double x0, double x1, double y0, double y1, int nx, int ny) {
        const GridFunction f = fbm_grid_function(k, Dissection::uniform(x0, x1, nx),
                                                 Dissection::uniform(y0, y1, ny));
        return std::pow(vp_2d_exact(f, p, f.domain(), lim).value, p);
    };
    const double lower_sq = piece_value(0, 1, 0, 1, n, n);
    const double upper_sq = piece_value(1, 2, 1, 2, n, n);
    const double r_piece = piece_value(0, 1, 1, 2, n, n);
    const double rp_piece = piece_value(1, 2, 0, 1, n, n);
    const double whole = piece_value(0, 2, 0, 2, 2 * n - 1, 2 * n - 1);
    const double pieces = lower_sq + upper_sq + r_piece + rp_piece;

    RectPartition partition;
    partition.target = {0, 2, 0, 2};
    partition.rects = {{0, 1, 0, 1}, {1, 2, 1, 2}, {0, 1, 1, 2}, {1, 2, 0, 1}};

    InequalityReport rep;
    rep.add("superadditivity_on_4piece_partition", pieces, whole, 1.0, partition, tol);
    return rep;
}

}  // namespace pvar
