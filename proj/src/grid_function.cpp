#include "pvar/grid_function.hpp"

#include <cmath>

namespace pvar {

GridFunction::GridFunction(Dissection xs, Dissection ys, Eigen::MatrixXd values)
    : xs_(std::move(xs)), ys_(std::move(ys)), values_(std::move(values)) {
    if (values_.rows() != xs_.size() || values_.cols() != ys_.size())
        throw std::invalid_argument("GridFunction: value table does not match axes");
    if (!values_.allFinite()) throw std::invalid_argument("GridFunction: non-finite value");
}

GridFunction GridFunction::sample(const Dissection& xs, const Dissection& ys,
                                  const std::function<double(double, double)>& f) {
    Eigen::MatrixXd v(xs.size(), ys.size());
    for (int i = 0; i < xs.size(); ++i)
        for (int j = 0; j < ys.size(); ++j) v(i, j) = f(xs[i], ys[j]);
    return {xs, ys, std::move(v)};
}

GridFunction GridFunction::transposed() const {
    return {ys_, xs_, values_.transpose()};
}

double rect_increment(const GridFunction& f, const Rect& r) {
    const int i0 = f.xs().index_of(r.a), i1 = f.xs().index_of(r.b);
    const int j0 = f.ys().index_of(r.c), j1 = f.ys().index_of(r.d);
    return f.increment(i0, i1, j0, j1);
}

bool increment_additivity_check(const GridFunction& f, const Rect& r,
                                const RectPartition& split, double tol) {
    if (!validate_partition(split)) return false;
    double sum = 0;
    for (const Rect& piece : split.rects) sum += rect_increment(f, piece);
    return std::abs(rect_increment(f, r) - sum) <= tol;
}

GridFunction build_dual_step_function(const GridFunction& x, const RectPartition& q, double p) {
    if (p < 1) throw std::invalid_argument("build_dual_step_function: p < 1");
    if (!validate_partition(q))
        throw InvalidPartitionError("build_dual_step_function: invalid partition");
    const Rect dom = x.domain();
    const double scale = std::max({1.0, std::abs(dom.a), std::abs(dom.b), std::abs(dom.c),
                                   std::abs(dom.d)});
    if (std::abs(q.target.a - dom.a) > 1e-9 * scale || std::abs(q.target.b - dom.b) > 1e-9 * scale ||
        std::abs(q.target.c - dom.c) > 1e-9 * scale || std::abs(q.target.d - dom.d) > 1e-9 * scale)
        throw InvalidPartitionError("build_dual_step_function: partition target is not x's domain");

    Eigen::MatrixXd v = Eigen::MatrixXd::Zero(x.nx(), x.ny());
    for (const Rect& piece : q.rects) {
        const int i0 = x.xs().index_of(piece.a), i1 = x.xs().index_of(piece.b);
        const int j0 = x.ys().index_of(piece.c), j1 = x.ys().index_of(piece.d);
        const double inc = x.increment(i0, i1, j0, j1);
        // c_k = |x(Q_k)|^{p-1} sgn(x(Q_k)); 0^0 := 0 so zero increments give 0
        const double c =
            inc == 0 ? 0.0 : std::pow(std::abs(inc), p - 1) * (inc > 0 ? 1.0 : -1.0);
        // half-open piece (a,b] x (c,d]: grid points strictly right of /
        // above the lower edges, never on the grid's first row or column
        for (int i = i0 + 1; i <= i1; ++i)
            for (int j = j0 + 1; j <= j1; ++j) v(i, j) = c;
    }
    return {x.xs(), x.ys(), std::move(v)};
}

}  // namespace pvar
