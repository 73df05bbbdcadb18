#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "pvar/errors.hpp"

namespace pvar {

// Closed axis-aligned rectangle [a,b] x [c,d]. a <= b and c <= d always hold;
// a == b or c == d makes it degenerate (increments over it vanish).
struct Rect {
    double a = 0, b = 0;  // s-axis
    double c = 0, d = 0;  // t-axis

    Rect() = default;
    Rect(double a_, double b_, double c_, double d_);

    bool degenerate() const { return a == b || c == d; }
    double width() const { return b - a; }
    double height() const { return d - c; }
    double area() const { return width() * height(); }

    bool operator==(const Rect&) const = default;
};

// Finite ordered point set of an interval, both endpoints included.
// Construction sorts and collapses points closer than 1e-12 (absolute).
class Dissection {
  public:
    explicit Dissection(std::vector<double> points);
    static Dissection uniform(double lo, double hi, int n_points);

    int size() const { return static_cast<int>(points_.size()); }
    double lo() const { return points_.front(); }
    double hi() const { return points_.back(); }
    double operator[](int i) const { return points_[static_cast<size_t>(i)]; }
    const std::vector<double>& points() const { return points_; }

    // Index of the point equal to v (within 1e-12); throws OffGridError.
    int index_of(double v) const;
    bool contains(double v) const;

    bool operator==(const Dissection&) const = default;

    static constexpr double kTieTol = 1e-12;

  private:
    std::vector<double> points_;
};

// Finite set of essentially disjoint rectangles covering `target`.
// Invariants are not enforced on construction; see validate_partition.
struct RectPartition {
    std::vector<Rect> rects;
    Rect target;
};

// Integer shadow of a rectangle: corner-point indices into a base grid,
// i0 < i1 and j0 < j1 for non-degenerate content.
struct GridIndexRect {
    int i0 = 0, i1 = 0, j0 = 0, j1 = 0;
    bool operator==(const GridIndexRect&) const = default;
    auto operator<=>(const GridIndexRect&) const = default;
};

// A partition in index space: rectangles over the corner grid of an
// nx x ny cell grid (point indices 0..nx and 0..ny).
struct IndexPartition {
    int nx = 0, ny = 0;
    std::vector<GridIndexRect> rects;
};

// Search-size limits shared by the exhaustive engines.
struct EnumerationLimits {
    int max_cells = 16;         // rectangulation enumeration cap
    int max_axis_interior = 12; // interior grid points per axis for exact V_p
};

bool essentially_disjoint(const Rect& r1, const Rect& r2);

// True iff `p` is a valid partition: non-degenerate members inside the
// target, pairwise essentially disjoint, union equal to the target
// (area sum + coverage of every refinement cell).
bool validate_partition(const RectPartition& p);

// Depth-first cover of the lexicographically first uncovered cell by every
// rectangle anchored there that fits in the uncovered region; each
// rectangulation is produced exactly once. The partition passed to `visit`
// is reused between calls; copy it to keep it. Throws CapExceededError when
// nx*ny exceeds lim.max_cells.
void for_each_index_partition(int nx, int ny,
                              const std::function<void(const IndexPartition&)>& visit,
                              const EnumerationLimits& lim = {});
std::vector<IndexPartition> enumerate_index_partitions(int nx, int ny,
                                                       const EnumerationLimits& lim = {});

// Same partitions materialized on the unit-cell grid [0,nx] x [0,ny].
std::vector<RectPartition> enumerate_rect_partitions(int nx, int ny,
                                                     const EnumerationLimits& lim = {});

// The grid-like partition {[t_i,t_{i+1}] x [t'_j,t'_{j+1}]}.
RectPartition enumerate_gridlike(const Dissection& dx, const Dissection& dy);

struct GridRefinement {
    Dissection dx, dy;
    // cells[k] = grid cells (corner-index rects on dx x dy) whose union is
    // the k-th input rectangle.
    std::vector<std::vector<GridIndexRect>> cells;
};

// Dissections from all distinct rectangle edges of `p`; every input
// rectangle equals the union of its assigned cells. Throws
// InvalidPartitionError if `p` is not a partition.
GridRefinement refine_to_gridlike(const RectPartition& p);

// Map an index rectangle onto real coordinates of a dissection pair.
Rect index_rect_to_rect(const GridIndexRect& r, const Dissection& dx, const Dissection& dy);

}  // namespace pvar
