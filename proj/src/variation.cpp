#include "pvar/variation.hpp"

#include <cmath>
#include <cstdint>

#include "pvar/young.hpp"

namespace pvar {

namespace {

double pow_abs(double v, double p) {
    const double a = std::abs(v);
    if (p == 1.0) return a;
    if (p == 2.0) return a * a;
    return std::pow(a, p);
}

// Point-index bounds of r on f's grid.
struct SubGrid {
    int ia, ib, ja, jb;
};

SubGrid locate(const GridFunction& f, const Rect& r) {
    return {f.xs().index_of(r.a), f.xs().index_of(r.b), f.ys().index_of(r.c),
            f.ys().index_of(r.d)};
}

Dissection dissection_from_indices(const Dissection& axis, const std::vector<int>& idx) {
    std::vector<double> pts;
    pts.reserve(idx.size());
    for (int i : idx) pts.push_back(axis[i]);
    return Dissection{std::move(pts)};
}

// Interval DP: maximize sum of w(a,b) over consecutive members of a subset
// of 0..n-1 containing both ends. Ties prefer fewer points, then the
// earlier predecessor. Returns chosen local indices.
template <typename Weight>
std::pair<double, std::vector<int>> interval_dp(int n, const Weight& w) {
    std::vector<double> best(static_cast<size_t>(n), 0);
    std::vector<int> npts(static_cast<size_t>(n), 1), prev(static_cast<size_t>(n), -1);
    for (int j = 1; j < n; ++j) {
        double bv = 0;
        int bn = 0, bp = -1;
        for (int i = 0; i < j; ++i) {
            const double v = best[static_cast<size_t>(i)] + w(i, j);
            const int np = npts[static_cast<size_t>(i)] + 1;
            if (bp < 0 || v > bv || (v == bv && np < bn)) {
                bv = v;
                bn = np;
                bp = i;
            }
        }
        best[static_cast<size_t>(j)] = bv;
        npts[static_cast<size_t>(j)] = bn;
        prev[static_cast<size_t>(j)] = bp;
    }
    std::vector<int> idx;
    for (int j = n - 1; j >= 0; j = prev[static_cast<size_t>(j)]) {
        idx.push_back(j);
        if (j == 0) break;
    }
    std::reverse(idx.begin(), idx.end());
    return {best[static_cast<size_t>(n - 1)], std::move(idx)};
}

}  // namespace

VariationResult pvar_1d(const std::vector<double>& path, double p) {
    if (p < 1) throw std::invalid_argument("pvar_1d: p < 1");
    if (path.size() < 2) throw std::invalid_argument("pvar_1d: need at least 2 points");
    const int n = static_cast<int>(path.size());
    auto [value, idx] = interval_dp(
        n, [&](int i, int j) { return pow_abs(path[static_cast<size_t>(j)] - path[static_cast<size_t>(i)], p); });
    std::vector<double> pts;
    pts.reserve(idx.size());
    for (int i : idx) pts.push_back(static_cast<double>(i));
    // value is the sup of the power sum itself; see header
    return VariationResult{value, p, Dissection{std::move(pts)}, Method::exact,
                           Rect{0, static_cast<double>(n - 1), 0, 0}};
}

double pvar_1d_norm(const std::vector<double>& path, double p) {
    return std::pow(pvar_1d(path, p).value, 1.0 / p);
}

VariationResult vp_2d_exact(const GridFunction& f, double p, const Rect& r,
                            const EnumerationLimits& lim) {
    if (p < 1) throw std::invalid_argument("vp_2d_exact: p < 1");
    const SubGrid g = locate(f, r);
    if (g.ia >= g.ib || g.ja >= g.jb)
        return VariationResult{0, p, GridWitness{Dissection{{r.a, r.b}}, Dissection{{r.c, r.d}}},
                               Method::exact, r};
    const int ni = g.ib - g.ia - 1, nj = g.jb - g.ja - 1;
    if (ni > lim.max_axis_interior || nj > lim.max_axis_interior)
        throw CapExceededError("vp_2d_exact: " + std::to_string(std::max(ni, nj)) +
                               " interior points exceeds per-axis cap " +
                               std::to_string(lim.max_axis_interior));
    const int m = g.jb - g.ja + 1;  // local y points
    double best = -1;
    std::uint32_t best_xm = 0, best_ym = 0;

    std::vector<int> xsel, ysel;
    Eigen::MatrixXd w(m, m);
    for (std::uint32_t xm = 0; xm < (1u << ni); ++xm) {
        xsel.clear();
        xsel.push_back(g.ia);
        for (int k = 0; k < ni; ++k)
            if ((xm >> k) & 1u) xsel.push_back(g.ia + 1 + k);
        xsel.push_back(g.ib);

        // w(c,d) = sum over the chosen consecutive x-intervals of |inc|^p
        w.setZero();
        for (size_t t = 0; t + 1 < xsel.size(); ++t) {
            const int a = xsel[t], b = xsel[t + 1];
            for (int c = 0; c < m; ++c)
                for (int d = c + 1; d < m; ++d)
                    w(c, d) += pow_abs(f.increment(a, b, g.ja + c, g.ja + d), p);
        }
        for (std::uint32_t ym = 0; ym < (1u << nj); ++ym) {
            ysel.clear();
            ysel.push_back(0);
            for (int k = 0; k < nj; ++k)
                if ((ym >> k) & 1u) ysel.push_back(1 + k);
            ysel.push_back(m - 1);
            double s = 0;
            for (size_t t = 0; t + 1 < ysel.size(); ++t) s += w(ysel[t], ysel[t + 1]);
            if (s > best) {
                best = s;
                best_xm = xm;
                best_ym = ym;
            }
        }
    }
    std::vector<int> xi{g.ia}, yj{g.ja};
    for (int k = 0; k < ni; ++k)
        if ((best_xm >> k) & 1u) xi.push_back(g.ia + 1 + k);
    xi.push_back(g.ib);
    for (int k = 0; k < nj; ++k)
        if ((best_ym >> k) & 1u) yj.push_back(g.ja + 1 + k);
    yj.push_back(g.jb);
    return VariationResult{
        std::pow(best, 1.0 / p), p,
        GridWitness{dissection_from_indices(f.xs(), xi), dissection_from_indices(f.ys(), yj)},
        Method::exact, r};
}

namespace {

struct AscentState {
    double value = 0;
    std::vector<int> dx, dy;  // global point indices
};

// One coordinate-ascent run; each half-step solves the fixed-axis problem
// exactly with the interval DP.
AscentState ascend(const GridFunction& f, double p, const SubGrid& g, std::vector<int> dx,
                   std::vector<int> dy, bool x_first) {
    auto value_of = [&](const std::vector<int>& X, const std::vector<int>& Y) {
        double s = 0;
        for (size_t a = 0; a + 1 < X.size(); ++a)
            for (size_t c = 0; c + 1 < Y.size(); ++c)
                s += pow_abs(f.increment(X[a], X[a + 1], Y[c], Y[c + 1]), p);
        return s;
    };
    auto optimize_x = [&](const std::vector<int>& Y) {
        const int n = g.ib - g.ia + 1;
        auto [v, loc] = interval_dp(n, [&](int i, int j) {
            double s = 0;
            for (size_t c = 0; c + 1 < Y.size(); ++c)
                s += pow_abs(f.increment(g.ia + i, g.ia + j, Y[c], Y[c + 1]), p);
            return s;
        });
        std::vector<int> X;
        X.reserve(loc.size());
        for (int i : loc) X.push_back(g.ia + i);
        return std::pair{v, std::move(X)};
    };
    auto optimize_y = [&](const std::vector<int>& X) {
        const int m = g.jb - g.ja + 1;
        auto [v, loc] = interval_dp(m, [&](int i, int j) {
            double s = 0;
            for (size_t a = 0; a + 1 < X.size(); ++a)
                s += pow_abs(f.increment(X[a], X[a + 1], g.ja + i, g.ja + j), p);
            return s;
        });
        std::vector<int> Y;
        Y.reserve(loc.size());
        for (int j : loc) Y.push_back(g.ja + j);
        return std::pair{v, std::move(Y)};
    };

    double value = value_of(dx, dy);
    for (int sweep = 0; sweep < 1000; ++sweep) {
        double v2;
        if (x_first) {
            dx = optimize_x(dy).second;
            auto [vy, Y] = optimize_y(dx);
            dy = std::move(Y);
            v2 = vy;
        } else {
            dy = optimize_y(dx).second;
            auto [vx, X] = optimize_x(dy);
            dx = std::move(X);
            v2 = vx;
        }
        if (v2 <= value * (1 + 1e-12)) {
            value = std::max(value, v2);
            break;
        }
        value = v2;
    }
    return {value, std::move(dx), std::move(dy)};
}

}  // namespace

VariationResult vp_2d_alternating(const GridFunction& f, double p, const Rect& r) {
    if (p < 1) throw std::invalid_argument("vp_2d_alternating: p < 1");
    const SubGrid g = locate(f, r);
    if (g.ia >= g.ib || g.ja >= g.jb)
        return VariationResult{0, p, GridWitness{Dissection{{r.a, r.b}}, Dissection{{r.c, r.d}}},
                               Method::heuristic, r};
    std::vector<int> full_x, full_y;
    for (int i = g.ia; i <= g.ib; ++i) full_x.push_back(i);
    for (int j = g.ja; j <= g.jb; ++j) full_y.push_back(j);
    const std::vector<int> coarse_x{g.ia, g.ib}, coarse_y{g.ja, g.jb};

    // four deterministic starts; coordinate ascent is order- and
    // start-sensitive, the extra basins buy the missing optima
    AscentState best = ascend(f, p, g, full_x, full_y, true);
    for (AscentState cand : {ascend(f, p, g, full_x, full_y, false),
                             ascend(f, p, g, coarse_x, full_y, false),
                             ascend(f, p, g, full_x, coarse_y, true)}) {
        if (cand.value > best.value) best = std::move(cand);
    }
    return VariationResult{std::pow(best.value, 1.0 / p), p,
                           GridWitness{dissection_from_indices(f.xs(), best.dx),
                                       dissection_from_indices(f.ys(), best.dy)},
                           Method::heuristic, r};
}

VariationResult controlled_pvar_exact(const GridFunction& f, double p, const Rect& r,
                                      const EnumerationLimits& lim) {
    if (p < 1) throw std::invalid_argument("controlled_pvar_exact: p < 1");
    const SubGrid g = locate(f, r);
    if (g.ia >= g.ib || g.ja >= g.jb)
        return VariationResult{0, p, PartitionWitness{RectPartition{{}, r}}, Method::exact, r};
    const int ncx = g.ib - g.ia, ncy = g.jb - g.ja;
    double best = -1;
    IndexPartition best_part;
    for_each_index_partition(
        ncx, ncy,
        [&](const IndexPartition& part) {
            double s = 0;
            for (const GridIndexRect& q : part.rects)
                s += pow_abs(
                    f.increment(g.ia + q.i0, g.ia + q.i1, g.ja + q.j0, g.ja + q.j1), p);
            if (s > best) {
                best = s;
                best_part = part;
            }
        },
        lim);
    RectPartition witness;
    witness.target = r;
    for (const GridIndexRect& q : best_part.rects)
        witness.rects.push_back({f.xs()[g.ia + q.i0], f.xs()[g.ia + q.i1], f.ys()[g.ja + q.j0],
                                 f.ys()[g.ja + q.j1]});
    return VariationResult{std::pow(best, 1.0 / p), p, PartitionWitness{std::move(witness)},
                           Method::exact, r};
}

double sandwich_constant(double p, double eps) {
    if (p < 1) throw std::invalid_argument("sandwich_constant: p < 1");
    if (!(eps > 0)) throw std::invalid_argument("sandwich_constant: eps <= 0");
    const double q = 1.0 / (1.0 - 1.0 / (p + eps));  // Hölder conjugate of p+eps
    const ExponentTriple e = ExponentTriple::make(p, q);
    if (!(e.theta > 1)) throw std::domain_error("sandwich_constant: theta <= 1");
    ExponentTriple opt = e;
    opt.alpha = resolve_alpha(e);
    return 4.0 * yt_bound_2d(opt);
}

InequalityReport verify_sandwich(const GridFunction& f, double p, double eps, const Rect& r,
                                 const EnumerationLimits& lim) {
    const VariationResult vp = vp_2d_exact(f, p, r, lim);
    const VariationResult cp = controlled_pvar_exact(f, p, r, lim);
    const VariationResult cpe = controlled_pvar_exact(f, p + eps, r, lim);
    const double c = sandwich_constant(p, eps);
    InequalityReport rep;
    const auto& vw = std::get<GridWitness>(vp.witness);
    rep.add("vp_le_controlled", vp.value, cp.value, 1.0,
            std::get<PartitionWitness>(cp.witness).partition);
    rep.add("controlled_eps_le_c_times_vp", cpe.value, vp.value, c,
            std::get<PartitionWitness>(cpe.witness).partition);
    if (p == 1.0)
        rep.add("controlled_le_vp_at_p1", cp.value, vp.value, 1.0, std::pair{vw.dx, vw.dy});
    return rep;
}

double gridlike_power_sum(const GridFunction& f, double p, const Dissection& dx,
                          const Dissection& dy) {
    double s = 0;
    for (int i = 0; i + 1 < dx.size(); ++i)
        for (int j = 0; j + 1 < dy.size(); ++j)
            s += pow_abs(rect_increment(f, {dx[i], dx[i + 1], dy[j], dy[j + 1]}), p);
    return s;
}

double partition_power_sum(const GridFunction& f, double p, const RectPartition& pi) {
    double s = 0;
    for (const Rect& piece : pi.rects) s += pow_abs(rect_increment(f, piece), p);
    return s;
}

double reevaluate_witness(const GridFunction& f, const VariationResult& r) {
    if (const auto* gw = std::get_if<GridWitness>(&r.witness))
        return std::pow(gridlike_power_sum(f, r.p, gw->dx, gw->dy), 1.0 / r.p);
    if (const auto* pw = std::get_if<PartitionWitness>(&r.witness))
        return std::pow(partition_power_sum(f, r.p, pw->partition), 1.0 / r.p);
    throw std::invalid_argument("reevaluate_witness: 1D witness needs the path, not a grid");
}

}  // namespace pvar
