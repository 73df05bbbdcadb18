#pragma once

#include <Eigen/Dense>
#include <functional>

#include "pvar/geometry.hpp"

namespace pvar {

// Real-valued function on a finite 2D grid: axis point sequences plus a
// value table with values(i,j) = f(xs[i], ys[j]).
class GridFunction {
  public:
    GridFunction(Dissection xs, Dissection ys, Eigen::MatrixXd values);

    static GridFunction sample(const Dissection& xs, const Dissection& ys,
                               const std::function<double(double, double)>& f);

    const Dissection& xs() const { return xs_; }
    const Dissection& ys() const { return ys_; }
    const Eigen::MatrixXd& values() const { return values_; }
    double value(int i, int j) const { return values_(i, j); }

    int nx() const { return xs_.size(); }
    int ny() const { return ys_.size(); }

    // Bounding rectangle of the sample grid.
    Rect domain() const { return {xs_.lo(), xs_.hi(), ys_.lo(), ys_.hi()}; }

    // Increment over corner-point indices: f(i1,j1)-f(i0,j1)-f(i1,j0)+f(i0,j0).
    double increment(int i0, int i1, int j0, int j1) const {
        return values_(i1, j1) - values_(i0, j1) - values_(i1, j0) + values_(i0, j0);
    }

    // Transposed function g(s,t) = f(t,s).
    GridFunction transposed() const;

  private:
    Dissection xs_, ys_;
    Eigen::MatrixXd values_;
};

// f(b,d) - f(a,d) - f(b,c) + f(a,c); all four corners must be grid points.
double rect_increment(const GridFunction& f, const Rect& r);

// |f(r) - sum over split members| <= tol. The split must be a valid
// partition of r with all corners on f's grid.
bool increment_additivity_check(const GridFunction& f, const Rect& r,
                                const RectPartition& split, double tol = 1e-10);

// The dual step function of the factor-4 lemma: y = c_k on the half-open
// piece (a_k,b_k] x (c_k,d_k] with c_k = |x(Q_k)|^{p-1} sgn(x(Q_k)), and
// y = 0 on the first row and column of the grid. sgn(0) := 0.
GridFunction build_dual_step_function(const GridFunction& x, const RectPartition& q, double p);

}  // namespace pvar
