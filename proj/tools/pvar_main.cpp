#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "pvar/run.hpp"

namespace {

void add_common(CLI::App* cmd, pvar::RunConfig& cfg, std::string& out_path) {
    cmd->add_option("-o,--out", out_path, "report output path (default stdout)");
    cmd->add_option("--max-cells", cfg.limits.max_cells,
                    "rectangulation enumeration cap (cells)");
    cmd->add_option("--max-axis-interior", cfg.limits.max_axis_interior,
                    "exact V_p cap (interior points per axis)");
    cmd->add_option("--tol-abs", cfg.tolerance.abs, "absolute check tolerance");
    cmd->add_option("--tol-rel", cfg.tolerance.rel, "relative check tolerance");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-parameter p-variation: compute, cross-verify, reproduce"};
    app.require_subcommand(1);

    pvar::RunConfig cfg;
    cfg.limits = pvar::limits_from_env();
    std::string out_path;
    std::vector<double> rectv;

    auto* vp = app.add_subcommand("vp", "grid-like p-variation V_p");
    vp->add_option("-i,--input", cfg.input_path, "grid file (.csv/.json)")->required();
    vp->add_option("--p", cfg.p, "exponent p >= 1")->required();
    vp->add_option("--rect", rectv, "sub-rectangle a b c d")->expected(4);
    vp->add_flag("--heuristic", cfg.heuristic, "use the alternating lower-bound engine");

    auto* cvp = app.add_subcommand("cvp", "controlled p-variation |f|_{p-var}");
    cvp->add_option("-i,--input", cfg.input_path, "grid file")->required();
    cvp->add_option("--p", cfg.p, "exponent p >= 1")->required();
    cvp->add_option("--rect", rectv, "sub-rectangle a b c d")->expected(4);

    auto* sandwich = app.add_subcommand("sandwich", "two-sided V_p vs |f|-var comparison");
    sandwich->add_option("-i,--input", cfg.input_path, "grid file")->required();
    sandwich->add_option("--p", cfg.p, "exponent p >= 1")->required();
    sandwich->add_option("--eps", cfg.eps, "epsilon > 0")->required();
    sandwich->add_option("--rect", rectv, "sub-rectangle a b c d")->expected(4);

    auto* control = app.add_subcommand("check-control", "2D-control checks of |f|^p_{p-var}");
    control->add_option("-i,--input", cfg.input_path, "grid file")->required();
    control->add_option("--p", cfg.p, "exponent p >= 1")->required();

    auto* almost = app.add_subcommand("almost-subadd", "almost-subadditivity across a cut");
    almost->add_option("-i,--input", cfg.input_path, "grid file")->required();
    almost->add_option("--p", cfg.p, "exponent p >= 1")->required();
    almost->add_option("--a", cfg.cut_a, "strip left edge");
    almost->add_option("--b", cfg.cut_b, "strip right edge");
    almost->add_option("--s", cfg.cut_s, "lower edge");
    almost->add_option("--t", cfg.cut_t, "cut coordinate");
    almost->add_option("--u", cfg.cut_u, "upper edge");

    auto* y1 = app.add_subcommand("young1d", "Young maximal inequality, 1D paths");
    y1->add_option("-i,--input", cfg.input_path, "JSON file with x, y arrays")->required();
    y1->add_option("--p", cfg.p, "x exponent");
    y1->add_option("--q", cfg.q, "y exponent (default p)");
    y1->add_option("--theta", cfg.theta, "sets p = q = 2/theta");

    auto* y2 = app.add_subcommand("young2d", "Young–Towghi maximal inequality, 2D grids");
    y2->add_option("-x,--x", cfg.input_path, "integrator grid x")->required();
    y2->add_option("-y,--y", cfg.second_path, "integrand grid y (axes zeroed)")->required();
    y2->add_option("--p", cfg.p, "x exponent");
    y2->add_option("--q", cfg.q, "y exponent (default p)");
    y2->add_option("--theta", cfg.theta, "sets p = q = 2/theta");
    y2->add_option("--alpha", cfg.alpha, "alpha in (1,theta); default optimized");

    auto* crucial = app.add_subcommand("crucial-lemma", "factor-4 dual step-function bound");
    crucial->add_option("-i,--input", cfg.input_path, "grid file for x")->required();
    crucial->add_option("--partition", cfg.second_path, "partition JSON")->required();
    crucial->add_option("--p", cfg.p, "exponent p > 1")->required();

    auto* fcov = app.add_subcommand("fbm-cov", "fBM covariance values and negativity check");
    fcov->add_option("--H", cfg.H, "Hurst parameter in (0, 1/2]")->required();
    fcov->add_option("--s", cfg.s, "first time");
    fcov->add_option("--t", cfg.t, "second time / neg-check upper bound");
    fcov->add_option("--rect", rectv, "rectangle a b c d")->expected(4);
    fcov->add_option("--neg-grid", cfg.neg_grid_points,
                     "run the disjoint-increment check on this many grid points");

    auto* fscan = app.add_subcommand("fbm-scan", "V_{1/(2H)} grid scan with ratios");
    fscan->add_option("--H", cfg.H, "Hurst parameter")->required();
    fscan->add_option("--s", cfg.s, "interval start (default 0)");
    fscan->add_option("--t", cfg.t, "interval end (default 1)");
    fscan->add_option("--sizes", cfg.grid_sizes, "grid sizes (points per axis)");

    auto* fcx = app.add_subcommand("fbm-counterexample", "super-additivity failure check");
    fcx->add_option("--H", cfg.H, "Hurst parameter")->required();
    fcx->add_option("--points-per-unit", cfg.points_per_unit, "grid points per unit axis");

    auto* enum_cmd = app.add_subcommand("enumerate-partitions", "all rectangulations of a cell grid");
    enum_cmd->add_option("--nx", cfg.nx, "cells along s")->required();
    enum_cmd->add_option("--ny", cfg.ny, "cells along t")->required();
    enum_cmd->add_flag("--emit", cfg.emit_partitions, "include the partition list in the report");

    auto* selftest = app.add_subcommand("selftest", "seeded randomized property suite");
    selftest->add_option("--seed", cfg.seed, "RNG seed");

    for (auto* cmd : {vp, cvp, sandwich, control, almost, y1, y2, crucial, fcov, fscan, fcx,
                      enum_cmd, selftest})
        add_common(cmd, cfg, out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return pvar::kExitUsage;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    cfg.output_path = out_path;
    if (rectv.size() == 4) {
        try {
            cfg.rect = pvar::Rect{rectv[0], rectv[1], rectv[2], rectv[3]};
        } catch (const std::exception& e) {
            std::cerr << "bad --rect: " << e.what() << "\n";
            return pvar::kExitUsage;
        }
    }

    const pvar::Report report = pvar::run(cfg);
    try {
        pvar::write_report(report, cfg.output_path);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return pvar::kExitUsage;
    }
    return report.exit_status;
}
