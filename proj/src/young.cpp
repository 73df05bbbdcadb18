#include "pvar/young.hpp"

#include <cmath>
#include <cstdint>
#include <random>

#include "pvar/variation.hpp"

namespace pvar {

double zeta(double s) {
    if (!(s > 1)) throw std::domain_error("zeta: requires s > 1");
    // Partial sum plus integral tail, with Euler–Maclaurin corrections so
    // the 1e-10 absolute tolerance holds arbitrarily close to the pole.
    constexpr int N = 64;
    // B_{2k}/(2k)! for k = 1..6
    constexpr double coeff[6] = {1.0 / 12,       -1.0 / 720,      1.0 / 30240,
                                 -1.0 / 1209600, 1.0 / 47900160, -691.0 / 1307674368000.0};
    double sum = 0;
    for (int k = 1; k <= N; ++k) sum += std::pow(static_cast<double>(k), -s);
    const double n = static_cast<double>(N);
    double value = sum + std::pow(n, 1 - s) / (s - 1) - 0.5 * std::pow(n, -s);
    double rising = s;             // s (s+1) ... (s+2k-2)
    double npow = std::pow(n, -s - 1);
    for (int k = 0; k < 6; ++k) {
        value += coeff[k] * rising * npow;
        rising *= (s + 2 * k + 1) * (s + 2 * k + 2);
        npow /= n * n;
    }
    return value;
}

ExponentTriple ExponentTriple::make(double p, double q, std::optional<double> alpha) {
    if (p < 1 || q < 1) throw std::invalid_argument("ExponentTriple: p, q >= 1 required");
    ExponentTriple e;
    e.p = p;
    e.q = q;
    e.theta = 1.0 / p + 1.0 / q;
    if (!(e.theta > 1))
        throw std::domain_error("ExponentTriple: theta = 1/p + 1/q must exceed 1");
    if (alpha) {
        if (!(*alpha > 1 && *alpha < e.theta))
            throw std::domain_error("ExponentTriple: alpha must lie in (1, theta)");
        e.alpha = alpha;
    }
    return e;
}

double yt_bound_2d(const ExponentTriple& e) {
    if (!(e.theta > 1)) throw std::domain_error("yt_bound_2d: theta <= 1");
    const double a = e.alpha ? *e.alpha : resolve_alpha(e);
    if (!(a > 1 && a < e.theta)) throw std::domain_error("yt_bound_2d: alpha outside (1, theta)");
    return std::pow(1 + zeta(e.theta / a), a) * zeta(a) + (1 + zeta(e.theta));
}

double resolve_alpha(const ExponentTriple& e) {
    if (e.alpha) return *e.alpha;
    if (!(e.theta > 1)) throw std::domain_error("resolve_alpha: theta <= 1");
    // golden-section minimization of the YT constant over (1, theta)
    const double inv_phi = 0.5 * (std::sqrt(5.0) - 1.0);
    double lo = 1 + 1e-6, hi = e.theta - 1e-6;
    auto g = [&](double a) { return std::pow(1 + zeta(e.theta / a), a) * zeta(a); };
    double x1 = hi - inv_phi * (hi - lo), x2 = lo + inv_phi * (hi - lo);
    double g1 = g(x1), g2 = g(x2);
    while (hi - lo > 1e-10) {
        if (g1 < g2) {
            hi = x2;
            x2 = x1;
            g2 = g1;
            x1 = hi - inv_phi * (hi - lo);
            g1 = g(x1);
        } else {
            lo = x1;
            x1 = x2;
            g1 = g2;
            x2 = lo + inv_phi * (hi - lo);
            g2 = g(x2);
        }
    }
    return 0.5 * (lo + hi);
}

double discrete_integral_1d(const std::vector<double>& y, const std::vector<double>& x,
                            const std::vector<int>& d) {
    if (y.size() != x.size()) throw std::invalid_argument("discrete_integral_1d: size mismatch");
    double s = 0;
    for (size_t k = 1; k < d.size(); ++k)
        s += y[static_cast<size_t>(d[k])] *
             (x[static_cast<size_t>(d[k])] - x[static_cast<size_t>(d[k - 1])]);
    return s;
}

double discrete_integral_2d(const GridFunction& y, const GridFunction& x,
                            const std::vector<int>& dx, const std::vector<int>& dy) {
    if (y.nx() != x.nx() || y.ny() != x.ny())
        throw std::invalid_argument("discrete_integral_2d: grids differ");
    double s = 0;
    for (size_t a = 1; a < dx.size(); ++a)
        for (size_t b = 1; b < dy.size(); ++b)
            s += y.value(dx[a], dy[b]) * x.increment(dx[a - 1], dx[a], dy[b - 1], dy[b]);
    return s;
}

namespace {

constexpr CheckTolerance kCertTol{};  // default abs/rel 1e-10

std::vector<int> without(const std::vector<int>& d, size_t pos) {
    std::vector<int> out;
    out.reserve(d.size() - 1);
    for (size_t i = 0; i < d.size(); ++i)
        if (i != pos) out.push_back(d[i]);
    return out;
}

std::vector<int> full_indices(int n) {
    std::vector<int> d(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) d[static_cast<size_t>(i)] = i;
    return d;
}

bool axis_zeroed(const GridFunction& y) {
    return y.values().row(0).cwiseAbs().maxCoeff() == 0 &&
           y.values().col(0).cwiseAbs().maxCoeff() == 0;
}

Dissection positions_as_dissection(const std::vector<int>& d) {
    std::vector<double> pts;
    pts.reserve(d.size());
    for (int i : d) pts.push_back(static_cast<double>(i));
    return Dissection{std::move(pts)};
}

}  // namespace

RemovalStep remove_best_point_1d(const std::vector<double>& y, const std::vector<double>& x,
                                 const std::vector<int>& d, const ExponentTriple& e) {
    if (d.size() < 3) throw std::invalid_argument("remove_best_point_1d: need >= 3 points");
    if (y.size() != x.size()) throw std::invalid_argument("remove_best_point_1d: size mismatch");
    const int n = static_cast<int>(d.size()) - 1;  // intervals
    // removal identity: I^D - I^{D\{t_k}} = y_{t_k,t_{k+1}} x_{t_{k-1},t_k}
    size_t best_pos = 1;
    double best_diff = std::numeric_limits<double>::infinity();
    for (size_t k = 1; k + 1 < d.size(); ++k) {
        const double diff =
            std::abs((y[static_cast<size_t>(d[k + 1])] - y[static_cast<size_t>(d[k])]) *
                     (x[static_cast<size_t>(d[k])] - x[static_cast<size_t>(d[k - 1])]));
        if (diff < best_diff) {
            best_diff = diff;
            best_pos = k;
        }
    }
    RemovalStep step;
    step.removed_index = d[best_pos];
    step.removed_position = static_cast<int>(best_pos);
    step.integral_before = discrete_integral_1d(y, x, d);
    step.integral_after = discrete_integral_1d(y, x, without(d, best_pos));
    step.bound = std::pow(static_cast<double>(n - 1), -e.theta) * pvar_1d_norm(x, e.p) *
                 pvar_1d_norm(y, e.q);
    const double diff = std::abs(step.integral_before - step.integral_after);
    step.certified = diff <= step.bound + kCertTol.margin(diff, step.bound);
    return step;
}

InequalityReport verify_young_1d(const std::vector<double>& y, const std::vector<double>& x,
                                 const ExponentTriple& e, const CheckTolerance& tol) {
    if (y.size() != x.size() || y.size() < 2)
        throw std::invalid_argument("verify_young_1d: need equal-length paths, >= 2 points");
    if (y.front() != 0) throw std::invalid_argument("verify_young_1d: requires y_0 = 0");
    const int n = static_cast<int>(y.size());
    const double vx = pvar_1d_norm(x, e.p);
    const double vy = pvar_1d_norm(y, e.q);
    const double constant = 1 + zeta(e.theta);

    InequalityReport rep;
    // two-point base case
    rep.add("base_two_point", std::abs((y.back() - y.front()) * (x.back() - x.front())), vx * vy,
            1.0, std::monostate{}, tol);

    // the maximal inequality over sub-dissections
    const int interior = n - 2;
    double worst = -1;
    std::vector<int> worst_d;
    auto consider = [&](const std::vector<int>& d) {
        const double v = std::abs(discrete_integral_1d(y, x, d));
        if (v > worst) {
            worst = v;
            worst_d = d;
        }
    };
    if (interior <= 10) {
        for (std::uint32_t mask = 0; mask < (1u << interior); ++mask) {
            std::vector<int> d{0};
            for (int k = 0; k < interior; ++k)
                if ((mask >> k) & 1u) d.push_back(1 + k);
            d.push_back(n - 1);
            consider(d);
        }
    } else {
        // deterministic sample: full dissection plus 4096 random subsets
        consider(full_indices(n));
        std::mt19937_64 eng(0xA5A55A5A0F0FF0F0ULL);
        for (int trial = 0; trial < 4096; ++trial) {
            std::vector<int> d{0};
            for (int k = 0; k < interior; ++k)
                if (eng() & 1u) d.push_back(1 + k);
            d.push_back(n - 1);
            consider(d);
        }
    }
    rep.add("maximal_inequality", worst, vx * vy, constant, positions_as_dissection(worst_d), tol);

    // removal cascade from the full dissection, certified step by step
    std::vector<int> d = full_indices(n);
    double bound_total = 0;
    while (d.size() >= 3) {
        const RemovalStep step = remove_best_point_1d(y, x, d, e);
        bound_total += step.bound;
        rep.add("removal_step_n=" + std::to_string(d.size() - 1),
                std::abs(step.integral_before - step.integral_after), step.bound, 1.0,
                positions_as_dissection(d), tol);
        d = without(d, static_cast<size_t>(step.removed_position));
    }
    rep.add("cascade_total", bound_total, zeta(e.theta) * vx * vy, 1.0, std::monostate{}, tol);
    return rep;
}

RemovalStep remove_best_point_2d(const GridFunction& y, const GridFunction& x,
                                 const std::vector<int>& dx, const std::vector<int>& dy,
                                 const ExponentTriple& e) {
    if (dx.size() < 3) throw std::invalid_argument("remove_best_point_2d: need >= 3 x-points");
    if (!axis_zeroed(y))
        throw std::invalid_argument("remove_best_point_2d: y must vanish on first row/column");
    const double alpha = resolve_alpha(e);
    const int n = static_cast<int>(dx.size()) - 1;
    const double base = discrete_integral_2d(y, x, dx, dy);
    size_t best_pos = 1;
    double best_diff = std::numeric_limits<double>::infinity();
    double best_after = 0;
    for (size_t k = 1; k + 1 < dx.size(); ++k) {
        const double after = discrete_integral_2d(y, x, without(dx, k), dy);
        const double diff = std::abs(base - after);
        if (diff < best_diff) {
            best_diff = diff;
            best_pos = k;
            best_after = after;
        }
    }
    const double vx = vp_2d_exact(x, e.p, x.domain()).value;
    const double vy = vp_2d_exact(y, e.q, y.domain()).value;
    RemovalStep step;
    step.removed_index = dx[best_pos];
    step.removed_position = static_cast<int>(best_pos);
    step.integral_before = base;
    step.integral_after = best_after;
    step.bound = std::pow(static_cast<double>(n - 1), -alpha) *
                 std::pow(1 + zeta(e.theta / alpha), alpha) * vx * vy;
    step.certified = best_diff <= step.bound + kCertTol.margin(best_diff, step.bound);
    return step;
}

namespace {

// Delta^{D,D'} = sum over interior x-removals of |I^{D,D'} - I^{D\{t_i},D'}|^{1/alpha}
double delta_quantity(const GridFunction& y, const GridFunction& x, const std::vector<int>& dx,
                      const std::vector<int>& dy, double alpha) {
    const double base = discrete_integral_2d(y, x, dx, dy);
    double s = 0;
    for (size_t k = 1; k + 1 < dx.size(); ++k)
        s += std::pow(std::abs(base - discrete_integral_2d(y, x, without(dx, k), dy)), 1.0 / alpha);
    return s;
}

}  // namespace

InequalityReport verify_yt_2d(const GridFunction& y, const GridFunction& x,
                              const ExponentTriple& e, const EnumerationLimits& lim,
                              const CheckTolerance& tol) {
    if (y.nx() != x.nx() || y.ny() != x.ny() || !(y.xs() == x.xs()) || !(y.ys() == x.ys()))
        throw std::invalid_argument("verify_yt_2d: x and y must share one grid");
    if (!axis_zeroed(y))
        throw std::invalid_argument("verify_yt_2d: y must vanish on first row/column");
    const int n = x.nx(), m = x.ny();
    const int ni = n - 2, nj = m - 2;
    if (ni > lim.max_axis_interior || nj > lim.max_axis_interior)
        throw CapExceededError("verify_yt_2d: grid exceeds per-axis cap");
    const double alpha = resolve_alpha(e);
    ExponentTriple ea = e;
    ea.alpha = alpha;
    const double vx = vp_2d_exact(x, e.p, x.domain(), lim).value;
    const double vy = vp_2d_exact(y, e.q, y.domain(), lim).value;
    const double constant = yt_bound_2d(ea);

    InequalityReport rep;

    // maximal inequality over every dissection pair
    double worst = -1;
    std::vector<int> worst_dx, worst_dy;
    for (std::uint32_t xm = 0; xm < (1u << ni); ++xm) {
        std::vector<int> dx{0};
        for (int k = 0; k < ni; ++k)
            if ((xm >> k) & 1u) dx.push_back(1 + k);
        dx.push_back(n - 1);
        for (std::uint32_t ym = 0; ym < (1u << nj); ++ym) {
            std::vector<int> dy{0};
            for (int k = 0; k < nj; ++k)
                if ((ym >> k) & 1u) dy.push_back(1 + k);
            dy.push_back(m - 1);
            const double v = std::abs(discrete_integral_2d(y, x, dx, dy));
            if (v > worst) {
                worst = v;
                worst_dx = dx;
                worst_dy = dy;
            }
        }
    }
    rep.add("maximal_inequality", worst, vx * vy, constant,
            std::pair{positions_as_dissection(worst_dx), positions_as_dissection(worst_dy)}, tol);

    // outer removal cascade on D, with the inner Delta cascade on D' replayed
    // for every outer state
    std::vector<int> dx = full_indices(n);
    const std::vector<int> dy_full = full_indices(m);
    double outer_total = 0;
    while (dx.size() >= 3) {
        const RemovalStep step = remove_best_point_2d(y, x, dx, dy_full, ea);
        outer_total += step.bound;
        rep.add("outer_step_n=" + std::to_string(dx.size() - 1),
                std::abs(step.integral_before - step.integral_after), step.bound, 1.0,
                std::pair{positions_as_dissection(dx), positions_as_dissection(dy_full)}, tol);

        // inner cascade: remove the j whose Delta change is smallest
        std::vector<int> dy = dy_full;
        while (dy.size() >= 3) {
            const double base = delta_quantity(y, x, dx, dy, alpha);
            size_t best_pos = 1;
            double best_diff = std::numeric_limits<double>::infinity();
            for (size_t k = 1; k + 1 < dy.size(); ++k) {
                const double d2 = delta_quantity(y, x, dx, without(dy, k), alpha);
                const double diff = std::abs(base - d2);
                if (diff < best_diff) {
                    best_diff = diff;
                    best_pos = k;
                }
            }
            const int mi = static_cast<int>(dy.size()) - 1;  // intervals in D'
            const double ibound = std::pow(static_cast<double>(mi - 1), -e.theta / alpha) *
                                  std::pow(vx * vy, 1.0 / alpha);
            rep.add("inner_step_n=" + std::to_string(dx.size() - 1) +
                        "_m=" + std::to_string(mi),
                    best_diff, ibound, 1.0,
                    std::pair{positions_as_dissection(dx), positions_as_dissection(dy)}, tol);
            dy = without(dy, best_pos);
        }
        dx = without(dx, static_cast<size_t>(step.removed_position));
    }
    rep.add("outer_cascade_total", outer_total,
            zeta(alpha) * std::pow(1 + zeta(e.theta / alpha), alpha) * vx * vy, 1.0,
            std::monostate{}, tol);

    // base term: D = {0,T} against the full D'
    const double base_term =
        std::abs(discrete_integral_2d(y, x, {0, n - 1}, dy_full));
    rep.add("base_two_point_slice", base_term, vx * vy, 1 + zeta(e.theta), std::monostate{}, tol);
    return rep;
}

InequalityReport crucial_lemma_check(const GridFunction& x, const RectPartition& q, double p,
                                     const EnumerationLimits& lim, const CheckTolerance& tol) {
    if (!(p > 1)) throw std::invalid_argument("crucial_lemma_check: requires p > 1");
    const double pc = p / (p - 1);  // Hölder conjugate
    const GridFunction y = build_dual_step_function(x, q, p);
    const VariationResult vres = vp_2d_exact(y, pc, y.domain(), lim);
    const VariationResult cres = controlled_pvar_exact(y, pc, y.domain(), lim);
    double sum = 0;
    for (const Rect& piece : q.rects) sum += std::pow(std::abs(rect_increment(x, piece)), p);
    const double rhs = 4.0 * std::pow(sum, 1.0 / pc);
    const auto& gw = std::get<GridWitness>(vres.witness);
    const auto& pw = std::get<PartitionWitness>(cres.witness);
    InequalityReport rep;
    rep.add("vp_le_controlled", vres.value, cres.value, 1.0, std::pair{gw.dx, gw.dy}, tol);
    rep.add("controlled_le_4_power_sum", cres.value, rhs, 1.0, pw.partition, tol);
    return rep;
}

}  // namespace pvar
