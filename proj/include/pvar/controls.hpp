#pragma once

#include <vector>

#include "pvar/grid_function.hpp"
#include "pvar/report.hpp"
#include "pvar/variation.hpp"

namespace pvar {

// Dense table of a candidate 2D control: one nonnegative entry per
// grid-aligned rectangle (corner indices i0 <= i1, j0 <= j1) of a base grid.
// Degenerate rectangles always map to 0.
class ControlTable {
  public:
    ControlTable(Dissection xs, Dissection ys);

    const Dissection& xs() const { return xs_; }
    const Dissection& ys() const { return ys_; }
    int nx() const { return xs_.size(); }
    int ny() const { return ys_.size(); }

    double at(int i0, int i1, int j0, int j1) const;
    void set(int i0, int i1, int j0, int j1, double v);

    Rect rect_of(int i0, int i1, int j0, int j1) const {
        return {xs_[i0], xs_[i1], ys_[j0], ys_[j1]};
    }

  private:
    size_t index(int i0, int i1, int j0, int j1) const;
    Dissection xs_, ys_;
    std::vector<double> entries_;
};

// omega(R) = |f|_{p-var;R}^p for every grid-aligned R (exact engine).
ControlTable control_from_cpvar(const GridFunction& f, double p,
                                const EnumerationLimits& lim = {});

// omega(R) = V_p(f;R)^p (grid-like sup only). Not super-additive in
// general; feeds the counterexample path of check_superadditive.
ControlTable control_from_vp(const GridFunction& f, double p,
                             const EnumerationLimits& lim = {});

// sum omega(R_i) <= omega(R) for every grid-aligned R and every
// rectangulation of R. Violations carry the maximizing partition.
InequalityReport check_superadditive(const ControlTable& w,
                                     const EnumerationLimits& lim = {},
                                     const CheckTolerance& tol = {});

// |f(R)|^p <= omega(R) for every grid-aligned R.
InequalityReport dominates_increments(const ControlTable& w, const GridFunction& f, double p,
                                      const CheckTolerance& tol = {});

// Almost-subadditivity of omega = |f|^p_{p-var} across the horizontal cut t:
//   w([a,b]x[s,u]) <= w([a,b]x[s,t]) + w([a,b]x[t,u])
//     + p 2^{p-1} w([a,b]x[s,u])^{1-1/p} min{w([a,b]x[t,u]), w([a,b]x[s,t])}^{1/p}.
InequalityReport almost_subadd_check(const ControlTable& w, double a, double b, double s,
                                     double t, double u, double p,
                                     const CheckTolerance& tol = {});

}  // namespace pvar
