#pragma once

#include <optional>
#include <vector>

#include "pvar/grid_function.hpp"
#include "pvar/report.hpp"

namespace pvar {

// Riemann zeta for s > 1, absolute error below 1e-10 (Euler–Maclaurin
// tail after a partial sum; accurate arbitrarily close to the pole).
double zeta(double s);

// Exponent bookkeeping for the maximal inequalities. theta = 1/p + 1/q must
// exceed 1; alpha, when present, lies in (1, theta).
struct ExponentTriple {
    double p = 1;
    double q = 1;
    double theta = 2;
    std::optional<double> alpha;

    static ExponentTriple make(double p, double q, std::optional<double> alpha = std::nullopt);
};

// alpha if set, else the minimizer of yt_bound_2d over (1, theta) by
// golden-section search.
double resolve_alpha(const ExponentTriple& e);

// (1 + zeta(theta/alpha))^alpha * zeta(alpha) + (1 + zeta(theta)).
double yt_bound_2d(const ExponentTriple& e);

// sum_i y_{t_i} (x_{t_i} - x_{t_{i-1}}) over consecutive points of the
// index sub-dissection d (right-endpoint evaluation of y).
double discrete_integral_1d(const std::vector<double>& y, const std::vector<double>& x,
                            const std::vector<int>& d);

// sum_{i,j} y(t_i, t'_j) * x-increment over [t_{i-1},t_i] x [t'_{j-1},t'_j].
double discrete_integral_2d(const GridFunction& y, const GridFunction& x,
                            const std::vector<int>& dx, const std::vector<int>& dy);

struct RemovalStep {
    int removed_index = -1;      // grid index of the removed point
    int removed_position = -1;   // position inside the dissection
    double integral_before = 0;
    double integral_after = 0;
    double bound = 0;            // lemma right-hand side for this step
    bool certified = false;      // |before - after| <= bound (+tiny tolerance)
};

// Interior point whose removal changes the discrete integral least,
// certified against (n-1)^{-theta} |x|_{p-var} |y|_{q-var}. Ties pick the
// smaller index.
RemovalStep remove_best_point_1d(const std::vector<double>& y, const std::vector<double>& x,
                                 const std::vector<int>& d, const ExponentTriple& e);

// Young's maximal inequality |int_D y dx| <= (1+zeta(theta)) |x|_p |y|_q
// over all sub-dissections (exhaustive up to 12 points, sampled beyond),
// plus a replay of the full removal cascade with per-step certificates.
// Requires y.front() == 0.
InequalityReport verify_young_1d(const std::vector<double>& y, const std::vector<double>& x,
                                 const ExponentTriple& e, const CheckTolerance& tol = {});

// 2D removal of t_{i0} from dx, certified against
// (n-1)^{-alpha} (1+zeta(theta/alpha))^alpha V_p(x) V_q(y).
// Requires y to vanish on its first row and column.
RemovalStep remove_best_point_2d(const GridFunction& y, const GridFunction& x,
                                 const std::vector<int>& dx, const std::vector<int>& dy,
                                 const ExponentTriple& e);

// Young–Towghi maximal inequality over all dissection pairs within the
// axis cap, plus outer (i0) and inner (j0) removal-cascade certificates.
InequalityReport verify_yt_2d(const GridFunction& y, const GridFunction& x,
                              const ExponentTriple& e, const EnumerationLimits& lim = {},
                              const CheckTolerance& tol = {});

// Factor-4 lemma: with y the dual step function of (x, q, p) and p' the
// Hölder conjugate, V_{p'}(y) <= |y|_{p'-var} <= 4 (sum |x(Q_j)|^p)^{1/p'}.
// Requires p > 1.
InequalityReport crucial_lemma_check(const GridFunction& x, const RectPartition& q, double p,
                                     const EnumerationLimits& lim = {},
                                     const CheckTolerance& tol = {});

}  // namespace pvar
