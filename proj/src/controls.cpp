#include "pvar/controls.hpp"

#include <cmath>

namespace pvar {

ControlTable::ControlTable(Dissection xs, Dissection ys) : xs_(std::move(xs)), ys_(std::move(ys)) {
    const size_t n = static_cast<size_t>(nx()), m = static_cast<size_t>(ny());
    entries_.assign(n * n * m * m, 0.0);
}

size_t ControlTable::index(int i0, int i1, int j0, int j1) const {
    if (i0 < 0 || i1 >= nx() || j0 < 0 || j1 >= ny() || i0 > i1 || j0 > j1)
        throw OffGridError("ControlTable: rectangle indices out of range");
    const size_t n = static_cast<size_t>(nx()), m = static_cast<size_t>(ny());
    return ((static_cast<size_t>(i0) * n + static_cast<size_t>(i1)) * m +
            static_cast<size_t>(j0)) *
               m +
           static_cast<size_t>(j1);
}

double ControlTable::at(int i0, int i1, int j0, int j1) const {
    return entries_[index(i0, i1, j0, j1)];
}

void ControlTable::set(int i0, int i1, int j0, int j1, double v) {
    if (v < 0) throw std::invalid_argument("ControlTable: negative entry");
    if ((i0 == i1 || j0 == j1) && v != 0)
        throw std::invalid_argument("ControlTable: degenerate rectangle must map to 0");
    entries_[index(i0, i1, j0, j1)] = v;
}

namespace {

template <typename Engine>
ControlTable build_table(const GridFunction& f, double p, const Engine& engine) {
    ControlTable w(f.xs(), f.ys());
    for (int i0 = 0; i0 < f.nx(); ++i0)
        for (int i1 = i0 + 1; i1 < f.nx(); ++i1)
            for (int j0 = 0; j0 < f.ny(); ++j0)
                for (int j1 = j0 + 1; j1 < f.ny(); ++j1) {
                    const Rect r{f.xs()[i0], f.xs()[i1], f.ys()[j0], f.ys()[j1]};
                    w.set(i0, i1, j0, j1, std::pow(engine(r), p));
                }
    return w;
}

}  // namespace

ControlTable control_from_cpvar(const GridFunction& f, double p, const EnumerationLimits& lim) {
    return build_table(f, p, [&](const Rect& r) {
        return controlled_pvar_exact(f, p, r, lim).value;
    });
}

ControlTable control_from_vp(const GridFunction& f, double p, const EnumerationLimits& lim) {
    return build_table(f, p, [&](const Rect& r) { return vp_2d_exact(f, p, r, lim).value; });
}

InequalityReport check_superadditive(const ControlTable& w, const EnumerationLimits& lim,
                                     const CheckTolerance& tol) {
    InequalityReport rep;
    double worst_slack = std::numeric_limits<double>::infinity();
    CheckRecord worst;
    bool have_worst = false;
    int violations = 0;

    for (int i0 = 0; i0 < w.nx(); ++i0)
        for (int i1 = i0 + 1; i1 < w.nx(); ++i1)
            for (int j0 = 0; j0 < w.ny(); ++j0)
                for (int j1 = j0 + 1; j1 < w.ny(); ++j1) {
                    const double whole = w.at(i0, i1, j0, j1);
                    for_each_index_partition(
                        i1 - i0, j1 - j0,
                        [&](const IndexPartition& part) {
                            double sum = 0;
                            for (const GridIndexRect& q : part.rects)
                                sum += w.at(i0 + q.i0, i0 + q.i1, j0 + q.j0, j0 + q.j1);
                            const double slack = whole - sum;
                            const bool pass = sum <= whole + tol.margin(sum, whole);
                            if (!pass) ++violations;
                            if (slack < worst_slack) {
                                worst_slack = slack;
                                RectPartition witness;
                                witness.target = w.rect_of(i0, i1, j0, j1);
                                for (const GridIndexRect& q : part.rects)
                                    witness.rects.push_back(
                                        w.rect_of(i0 + q.i0, i0 + q.i1, j0 + q.j0, j0 + q.j1));
                                worst = CheckRecord{.name = "superadditivity_worst",
                                                    .lhs = sum,
                                                    .rhs = whole,
                                                    .constant = 1.0,
                                                    .slack = slack,
                                                    .pass = pass,
                                                    .witness = std::move(witness)};
                                have_worst = true;
                            }
                        },
                        lim);
                }
    if (have_worst) rep.checks.push_back(std::move(worst));
    rep.add("superadditivity_violations", static_cast<double>(violations), 0.0);
    return rep;
}

InequalityReport dominates_increments(const ControlTable& w, const GridFunction& f, double p,
                                      const CheckTolerance& tol) {
    InequalityReport rep;
    double worst_slack = std::numeric_limits<double>::infinity();
    CheckRecord worst;
    bool have_worst = false;
    int violations = 0;
    for (int i0 = 0; i0 < w.nx(); ++i0)
        for (int i1 = i0 + 1; i1 < w.nx(); ++i1)
            for (int j0 = 0; j0 < w.ny(); ++j0)
                for (int j1 = j0 + 1; j1 < w.ny(); ++j1) {
                    const double lhs = std::pow(std::abs(f.increment(i0, i1, j0, j1)), p);
                    const double rhs = w.at(i0, i1, j0, j1);
                    const double slack = rhs - lhs;
                    const bool pass = lhs <= rhs + tol.margin(lhs, rhs);
                    if (!pass) ++violations;
                    if (slack < worst_slack) {
                        worst_slack = slack;
                        worst = CheckRecord{.name = "dominates_increments_worst",
                                            .lhs = lhs,
                                            .rhs = rhs,
                                            .constant = 1.0,
                                            .slack = slack,
                                            .pass = pass,
                                            .witness = w.rect_of(i0, i1, j0, j1)};
                        have_worst = true;
                    }
                }
    if (have_worst) rep.checks.push_back(std::move(worst));
    rep.add("domination_violations", static_cast<double>(violations), 0.0);
    return rep;
}

InequalityReport almost_subadd_check(const ControlTable& w, double a, double b, double s,
                                     double t, double u, double p, const CheckTolerance& tol) {
    if (p < 1) throw std::invalid_argument("almost_subadd_check: p < 1");
    const int ia = w.xs().index_of(a), ib = w.xs().index_of(b);
    const int js = w.ys().index_of(s), jt = w.ys().index_of(t), ju = w.ys().index_of(u);
    if (!(ia < ib) || !(js < jt && jt < ju))
        throw std::invalid_argument("almost_subadd_check: need a<b and s<t<u");
    const double w_su = w.at(ia, ib, js, ju);
    const double w_st = w.at(ia, ib, js, jt);
    const double w_tu = w.at(ia, ib, jt, ju);
    const double extra = p * std::pow(2.0, p - 1) * std::pow(w_su, 1.0 - 1.0 / p) *
                         std::pow(std::min(w_st, w_tu), 1.0 / p);
    InequalityReport rep;
    rep.add("almost_subadditive", w_su, w_st + w_tu + extra, 1.0, Rect{a, b, s, u}, tol);
    return rep;
}

}  // namespace pvar
