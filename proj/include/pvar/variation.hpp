#pragma once

#include <variant>

#include "pvar/grid_function.hpp"
#include "pvar/report.hpp"

namespace pvar {

enum class Method { exact, heuristic };

// Grid-like witness: the dissection pair achieving the reported value.
struct GridWitness {
    Dissection dx, dy;
};
// Rectangulation witness for controlled p-variation.
struct PartitionWitness {
    RectPartition partition;
};

struct VariationResult {
    // For the 2D engines this is the p-variation norm (sup sum)^(1/p);
    // pvar_1d reports the sup of sum |dx|^p itself (its objective).
    double value = 0;
    double p = 1;
    std::variant<Dissection, GridWitness, PartitionWitness> witness;
    Method method = Method::exact;
    Rect domain;
};

// Exact sup over sub-dissections of sum |x_{t_i,t_{i+1}}|^p via the interval
// DP M(j) = max_{i<j} (M(i) + |x_j - x_i|^p). Ties prefer fewer points.
VariationResult pvar_1d(const std::vector<double>& path, double p);

// Convenience: the 1D p-variation norm pvar_1d(...)^{1/p}.
double pvar_1d_norm(const std::vector<double>& path, double p);

// Grid-like V_p over r by exhaustive enumeration of sub-dissection pairs of
// the grid inside r. Throws CapExceededError beyond lim.max_axis_interior.
VariationResult vp_2d_exact(const GridFunction& f, double p, const Rect& r,
                            const EnumerationLimits& lim = {});

// Coordinate-ascent lower bound for V_p: with one axis fixed the other is
// optimized exactly by the interval DP; four deterministic starts, best kept.
VariationResult vp_2d_alternating(const GridFunction& f, double p, const Rect& r);

// Controlled p-variation |f|_{p-var;r}: max over every rectangulation of the
// cell grid inside r. Throws CapExceededError beyond lim.max_cells.
VariationResult controlled_pvar_exact(const GridFunction& f, double p, const Rect& r,
                                      const EnumerationLimits& lim = {});

// The proof-chain constant 4*c_YT(p, q) with q = 1/(1 - 1/(p+eps)) and
// theta = 1/p + 1/q, alpha minimized over (1, theta).
double sandwich_constant(double p, double eps);

// Checks (1/c)|f|_{(p+eps)-var} <= V_p(f) <= |f|_{p-var} on r, plus the
// p = 1 equality.
InequalityReport verify_sandwich(const GridFunction& f, double p, double eps, const Rect& r,
                                 const EnumerationLimits& lim = {});

// Objective re-evaluation on witnesses (used by the result invariants and
// by report consumers): sum of |f(piece)|^p over the witness pieces.
double gridlike_power_sum(const GridFunction& f, double p, const Dissection& dx,
                          const Dissection& dy);
double partition_power_sum(const GridFunction& f, double p, const RectPartition& pi);
double reevaluate_witness(const GridFunction& f, const VariationResult& r);

}  // namespace pvar
