#include "pvar/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

namespace pvar {

Rect::Rect(double a_, double b_, double c_, double d_) : a(a_), b(b_), c(c_), d(d_) {
    if (!(a <= b) || !(c <= d))
        throw std::invalid_argument("Rect: requires a <= b and c <= d");
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(d))
        throw std::invalid_argument("Rect: non-finite coordinate");
}

Dissection::Dissection(std::vector<double> points) : points_(std::move(points)) {
    if (points_.empty()) throw std::invalid_argument("Dissection: empty");
    for (double v : points_)
        if (!std::isfinite(v)) throw std::invalid_argument("Dissection: non-finite point");
    std::sort(points_.begin(), points_.end());
    // collapse near-ties so floating-point noise cannot create zero-width
    // intervals
    std::vector<double> out;
    out.reserve(points_.size());
    for (double v : points_) {
        if (out.empty() || v - out.back() > kTieTol) out.push_back(v);
    }
    points_ = std::move(out);
}

Dissection Dissection::uniform(double lo, double hi, int n_points) {
    if (n_points < 1) throw std::invalid_argument("Dissection::uniform: n_points < 1");
    if (!(lo <= hi)) throw std::invalid_argument("Dissection::uniform: lo > hi");
    std::vector<double> pts(static_cast<size_t>(n_points));
    for (int i = 0; i < n_points; ++i)
        pts[static_cast<size_t>(i)] =
            n_points == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / (n_points - 1);
    return Dissection(std::move(pts));
}

int Dissection::index_of(double v) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), v - kTieTol);
    if (it == points_.end() || std::abs(*it - v) > kTieTol)
        throw OffGridError("coordinate " + std::to_string(v) + " is not a grid point");
    return static_cast<int>(it - points_.begin());
}

bool Dissection::contains(double v) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), v - kTieTol);
    return it != points_.end() && std::abs(*it - v) <= kTieTol;
}

bool essentially_disjoint(const Rect& r1, const Rect& r2) {
    const double a = std::max(r1.a, r2.a);
    const double b = std::min(r1.b, r2.b);
    const double c = std::max(r1.c, r2.c);
    const double d = std::min(r1.d, r2.d);
    // empty intersection or degenerate overlap
    return a >= b || c >= d;
}

bool validate_partition(const RectPartition& p) {
    if (p.target.degenerate()) return false;
    if (p.rects.empty()) return false;
    double area = 0;
    for (const Rect& r : p.rects) {
        if (r.degenerate()) return false;
        if (r.a < p.target.a || r.b > p.target.b || r.c < p.target.c || r.d > p.target.d)
            return false;
        area += r.area();
    }
    for (size_t i = 0; i < p.rects.size(); ++i)
        for (size_t j = i + 1; j < p.rects.size(); ++j)
            if (!essentially_disjoint(p.rects[i], p.rects[j])) return false;
    if (std::abs(area - p.target.area()) >
        1e-9 * std::max(1.0, std::abs(p.target.area())))
        return false;
    // coverage of every refinement cell by exactly one member
    std::vector<double> xs{p.target.a, p.target.b}, ys{p.target.c, p.target.d};
    for (const Rect& r : p.rects) {
        xs.push_back(r.a);
        xs.push_back(r.b);
        ys.push_back(r.c);
        ys.push_back(r.d);
    }
    const Dissection dx{std::move(xs)}, dy{std::move(ys)};
    for (int i = 0; i + 1 < dx.size(); ++i) {
        for (int j = 0; j + 1 < dy.size(); ++j) {
            const double cx = 0.5 * (dx[i] + dx[i + 1]);
            const double cy = 0.5 * (dy[j] + dy[j + 1]);
            int hits = 0;
            for (const Rect& r : p.rects)
                if (r.a < cx && cx < r.b && r.c < cy && cy < r.d) ++hits;
            if (hits != 1) return false;
        }
    }
    return true;
}

namespace {

// Depth-first enumeration over a cell bitmask. Every rectangle of a valid
// continuation must have the first uncovered cell as its lower-left cell,
// so each rectangulation is reached exactly once. The visited partition is
// a reusable scratch object; callers copy it if they keep it.
struct Enumerator {
    std::uint64_t full;
    const std::function<void(const IndexPartition&)>& visit;
    IndexPartition scratch;

    void dfs(std::uint64_t mask) {
        if (mask == full) {
            visit(scratch);
            return;
        }
        const int nx = scratch.nx, ny = scratch.ny;
        int c = 0;
        while ((mask >> c) & 1u) ++c;
        const int cy = c / nx, cx = c % nx;
        for (int w = 1; cx + w <= nx; ++w) {
            if ((mask >> (cy * nx + cx + w - 1)) & 1u) break;
            std::uint64_t grown = mask;
            bool blocked = false;
            for (int h = 1; cy + h <= ny; ++h) {
                const int row = cy + h - 1;
                for (int k = 0; k < w; ++k) {
                    if ((mask >> (row * nx + cx + k)) & 1u) {
                        blocked = true;
                        break;
                    }
                }
                if (blocked) break;
                for (int k = 0; k < w; ++k) grown |= std::uint64_t{1} << (row * nx + cx + k);
                scratch.rects.push_back({cx, cx + w, cy, cy + h});
                dfs(grown);
                scratch.rects.pop_back();
            }
        }
    }
};

}  // namespace

void for_each_index_partition(int nx, int ny,
                              const std::function<void(const IndexPartition&)>& visit,
                              const EnumerationLimits& lim) {
    if (nx < 1 || ny < 1) throw std::invalid_argument("enumerate: need nx, ny >= 1");
    if (nx * ny > lim.max_cells)
        throw CapExceededError("rectangulation enumeration: " + std::to_string(nx * ny) +
                               " cells exceeds cap " + std::to_string(lim.max_cells));
    if (nx * ny > 62) throw CapExceededError("rectangulation enumeration: bitmask limit");
    Enumerator e{(std::uint64_t{1} << (nx * ny)) - 1, visit, IndexPartition{nx, ny, {}}};
    e.dfs(0);
}

std::vector<IndexPartition> enumerate_index_partitions(int nx, int ny,
                                                       const EnumerationLimits& lim) {
    std::vector<IndexPartition> out;
    for_each_index_partition(
        nx, ny, [&out](const IndexPartition& p) { out.push_back(p); }, lim);
    return out;
}

std::vector<RectPartition> enumerate_rect_partitions(int nx, int ny,
                                                     const EnumerationLimits& lim) {
    const Dissection dx = Dissection::uniform(0, nx, nx + 1);
    const Dissection dy = Dissection::uniform(0, ny, ny + 1);
    std::vector<RectPartition> out;
    for_each_index_partition(
        nx, ny,
        [&](const IndexPartition& p) {
            RectPartition rp;
            rp.target = {0, static_cast<double>(nx), 0, static_cast<double>(ny)};
            rp.rects.reserve(p.rects.size());
            for (const GridIndexRect& r : p.rects) rp.rects.push_back(index_rect_to_rect(r, dx, dy));
            out.push_back(std::move(rp));
        },
        lim);
    return out;
}

RectPartition enumerate_gridlike(const Dissection& dx, const Dissection& dy) {
    RectPartition p;
    p.target = {dx.lo(), dx.hi(), dy.lo(), dy.hi()};
    for (int i = 0; i + 1 < dx.size(); ++i)
        for (int j = 0; j + 1 < dy.size(); ++j)
            p.rects.push_back({dx[i], dx[i + 1], dy[j], dy[j + 1]});
    return p;
}

GridRefinement refine_to_gridlike(const RectPartition& p) {
    if (!validate_partition(p)) throw InvalidPartitionError("refine_to_gridlike: invalid partition");
    std::vector<double> xs{p.target.a, p.target.b}, ys{p.target.c, p.target.d};
    for (const Rect& r : p.rects) {
        xs.push_back(r.a);
        xs.push_back(r.b);
        ys.push_back(r.c);
        ys.push_back(r.d);
    }
    GridRefinement out{Dissection{std::move(xs)}, Dissection{std::move(ys)}, {}};
    out.cells.resize(p.rects.size());
    for (size_t k = 0; k < p.rects.size(); ++k) {
        const Rect& r = p.rects[k];
        const int i0 = out.dx.index_of(r.a), i1 = out.dx.index_of(r.b);
        const int j0 = out.dy.index_of(r.c), j1 = out.dy.index_of(r.d);
        for (int i = i0; i < i1; ++i)
            for (int j = j0; j < j1; ++j) out.cells[k].push_back({i, i + 1, j, j + 1});
    }
    return out;
}

Rect index_rect_to_rect(const GridIndexRect& r, const Dissection& dx, const Dissection& dy) {
    return {dx[r.i0], dx[r.i1], dy[r.j0], dy[r.j1]};
}

}  // namespace pvar
