#include <doctest.h>

#include <cmath>

#include "pvar/controls.hpp"
#include "pvar/fbm.hpp"
#include "pvar/rng.hpp"

using namespace pvar;

TEST_SUITE_BEGIN("controls");

TEST_CASE("control_from_cpvar basics") {
    UniformGrid rng(42);
    const GridFunction f = rng.grid(4, 4);
    const double p = 2.0;
    const ControlTable w = control_from_cpvar(f, p);

    // degenerate rectangles map to zero
    CHECK(w.at(1, 1, 0, 3) == 0.0);
    CHECK(w.at(0, 3, 2, 2) == 0.0);

    // full-domain entry is the controlled variation to the p-th power
    const double cv = controlled_pvar_exact(f, p, f.domain()).value;
    CHECK(w.at(0, 3, 0, 3) == doctest::Approx(std::pow(cv, p)).epsilon(1e-12));
}

TEST_CASE("Brownian covariance control: omega of squares is the side length") {
    const HurstKernel k{0.5};
    const Dissection ax = Dissection::uniform(0, 1, 5);
    const GridFunction f = fbm_grid_function(k, ax, ax);
    const ControlTable w = control_from_cpvar(f, 1.0);
    for (int i0 = 0; i0 < 5; ++i0)
        for (int i1 = i0 + 1; i1 < 5; ++i1)
            CHECK(w.at(i0, i1, i0, i1) == doctest::Approx(ax[i1] - ax[i0]).epsilon(1e-10));
}

TEST_CASE("controlled-variation control is super-additive and dominates increments") {
    UniformGrid rng(77);
    for (int trial = 0; trial < 8; ++trial) {
        const GridFunction f = rng.grid(4, 4);
        for (double p : {1.0, 1.5, 2.0, 3.0}) {
            CAPTURE(trial);
            CAPTURE(p);
            const ControlTable w = control_from_cpvar(f, p);
            CHECK(check_superadditive(w).all_pass());
            CHECK(dominates_increments(w, f, p).all_pass());
        }
    }
}

TEST_CASE("additive measure passes with zero worst slack") {
    const Dissection ax = Dissection::uniform(0, 1, 4);
    ControlTable w(ax, ax);
    for (int i0 = 0; i0 < 4; ++i0)
        for (int i1 = i0 + 1; i1 < 4; ++i1)
            for (int j0 = 0; j0 < 4; ++j0)
                for (int j1 = j0 + 1; j1 < 4; ++j1)
                    w.set(i0, i1, j0, j1, (ax[i1] - ax[i0]) * (ax[j1] - ax[j0]));
    const auto rep = check_superadditive(w);
    CHECK(rep.all_pass());
    CHECK(std::abs(rep.checks.front().slack) < 1e-12);
}

TEST_CASE("grid-like V_p control fails super-additivity for H = 1/4") {
    // base grid: 5 points per axis on [0,2]^2, p = 1/(2H) = 2
    const HurstKernel k{0.25};
    const Dissection ax = Dissection::uniform(0, 2, 5);
    const GridFunction f = fbm_grid_function(k, ax, ax);
    const ControlTable w = control_from_vp(f, 2.0);
    const auto rep = check_superadditive(w);
    CHECK_FALSE(rep.all_pass());

    // the 4-piece partition of [0,2]^2 is itself violating
    const double whole = w.at(0, 4, 0, 4);
    const double pieces = w.at(0, 2, 0, 2) + w.at(2, 4, 2, 4) + w.at(0, 2, 2, 4) +
                          w.at(2, 4, 0, 2);
    CHECK(pieces > whole + 1e-3);
    CHECK(pieces == doctest::Approx(2.34314575050762).epsilon(1e-10));
    CHECK(whole == doctest::Approx(2.262625714589208).epsilon(1e-10));

    // worst violation carries its partition as a witness
    const auto& worst = rep.checks.front();
    CHECK_FALSE(worst.pass);
    CHECK(std::holds_alternative<RectPartition>(worst.witness));
}

TEST_CASE("dominates_increments fails for the zero table") {
    UniformGrid rng(88);
    const GridFunction f = rng.grid(3, 3);
    const ControlTable zero(f.xs(), f.ys());
    const auto rep = dominates_increments(zero, f, 2.0);
    CHECK_FALSE(rep.all_pass());
    CHECK(std::holds_alternative<Rect>(rep.checks.front().witness));
}

TEST_CASE("V_1 of the Brownian covariance dominates its increments") {
    const HurstKernel k{0.5};
    const Dissection ax = Dissection::uniform(0, 1, 5);
    const GridFunction f = fbm_grid_function(k, ax, ax);
    const ControlTable w = control_from_vp(f, 1.0);
    CHECK(dominates_increments(w, f, 1.0).all_pass());
}

TEST_CASE("almost-subadditivity of the controlled-variation control") {
    UniformGrid rng(99);
    for (int trial = 0; trial < 4; ++trial) {
        const GridFunction f = rng.grid(5, 5);
        for (double p : {1.0, 2.0}) {
            const ControlTable w = control_from_cpvar(f, p);
            for (int ia = 0; ia < 5; ++ia)
                for (int ib = ia + 1; ib < 5; ++ib)
                    for (int jt = 1; jt < 4; ++jt) {
                        CAPTURE(trial);
                        CAPTURE(p);
                        CHECK(almost_subadd_check(w, f.xs()[ia], f.xs()[ib], f.ys()[0],
                                                  f.ys()[jt], f.ys()[4], p)
                                  .all_pass());
                    }
        }
    }
}

TEST_CASE("almost-subadd at p = 1 is plain subadditivity plus the min term") {
    UniformGrid rng(111);
    const GridFunction f = rng.grid(4, 4);
    const ControlTable w = control_from_cpvar(f, 1.0);
    const auto rep =
        almost_subadd_check(w, f.xs()[0], f.xs()[3], f.ys()[0], f.ys()[2], f.ys()[3], 1.0);
    REQUIRE(rep.checks.size() == 1);
    const auto& c = rep.checks.front();
    const double w_su = w.at(0, 3, 0, 3), w_st = w.at(0, 3, 0, 2), w_tu = w.at(0, 3, 2, 3);
    CHECK(c.lhs == doctest::Approx(w_su).epsilon(1e-12));
    CHECK(c.rhs == doctest::Approx(w_st + w_tu + std::min(w_st, w_tu)).epsilon(1e-12));
    CHECK(c.pass);
}

TEST_CASE("constant function gives an all-zero control") {
    const Dissection ax = Dissection::uniform(0, 1, 4);
    const GridFunction c = GridFunction::sample(ax, ax, [](double, double) { return 5.0; });
    const ControlTable w = control_from_cpvar(c, 2.0);
    CHECK(w.at(0, 3, 0, 3) == 0.0);
    const auto rep =
        almost_subadd_check(w, ax[0], ax[3], ax[0], ax[1], ax[3], 2.0);
    CHECK(rep.all_pass());
    CHECK(rep.checks.front().lhs == 0.0);
}

TEST_CASE("transposing the function transposes the table") {
    UniformGrid rng(123);
    const GridFunction f = rng.grid(4, 3);
    const GridFunction g = f.transposed();
    const ControlTable wf = control_from_cpvar(f, 2.0);
    const ControlTable wg = control_from_cpvar(g, 2.0);
    for (int i0 = 0; i0 < 4; ++i0)
        for (int i1 = i0; i1 < 4; ++i1)
            for (int j0 = 0; j0 < 3; ++j0)
                for (int j1 = j0; j1 < 3; ++j1)
                    CHECK(wf.at(i0, i1, j0, j1) ==
                          doctest::Approx(wg.at(j0, j1, i0, i1)).epsilon(1e-12));
}

TEST_CASE("off-grid cut coordinates are rejected") {
    UniformGrid rng(5);
    const GridFunction f = rng.grid(4, 4);
    const ControlTable w = control_from_cpvar(f, 2.0);
    CHECK_THROWS_AS(
        almost_subadd_check(w, 0.0, 1.0, 0.0, 0.123, 1.0, 2.0), OffGridError);
}

TEST_SUITE_END();
