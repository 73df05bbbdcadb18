#include <doctest.h>

#include "oracles.hpp"
#include "pvar/geometry.hpp"

using namespace pvar;

TEST_SUITE_BEGIN("geometry");

TEST_CASE("essentially disjoint") {
    CHECK(essentially_disjoint({0, 1, 0, 1}, {1, 2, 0, 1}));   // shared edge
    CHECK_FALSE(essentially_disjoint({0, 1, 0, 1}, {0.5, 2, 0, 1}));
    CHECK(essentially_disjoint({0, 1, 0, 1}, {2, 3, 2, 3}));   // far apart
    CHECK(essentially_disjoint({0, 1, 0, 1}, {1, 1, 0, 5}));   // degenerate member
}

TEST_CASE("rect invariants") {
    CHECK_THROWS_AS(Rect(1, 0, 0, 1), std::invalid_argument);
    CHECK(Rect(0, 0, 0, 1).degenerate());
    CHECK(Rect(0, 1, 1, 1).degenerate());
    CHECK_FALSE(Rect(0, 1, 0, 2).degenerate());
}

TEST_CASE("dissection construction collapses ties and sorts") {
    const Dissection d{{1.0, 0.0, 0.5, 0.5 + 1e-14, 1.0}};
    CHECK(d.size() == 3);
    CHECK(d[0] == 0.0);
    CHECK(d[2] == 1.0);
    CHECK(d.index_of(0.5) == 1);
    CHECK_THROWS_AS(d.index_of(0.25), OffGridError);
    CHECK(Dissection::uniform(0, 2, 5)[3] == doctest::Approx(1.5));
}

TEST_CASE("validate_partition on the three-piece example") {
    // [0,2]^2 = [0,1]^2 u [1,2]x[0,1] u [0,2]x[1,2]
    RectPartition p;
    p.target = {0, 2, 0, 2};
    p.rects = {{0, 1, 0, 1}, {1, 2, 0, 1}, {0, 2, 1, 2}};
    CHECK(validate_partition(p));

    RectPartition too_small{{{0, 1, 0, 1}}, {0, 2, 0, 2}};
    CHECK_FALSE(validate_partition(too_small));

    RectPartition overlapping{{{0, 2, 0, 1}, {0, 1, 0, 2}}, {0, 2, 0, 2}};
    CHECK_FALSE(validate_partition(overlapping));

    RectPartition degenerate_member{{{0, 2, 0, 2}, {1, 1, 0, 2}}, {0, 2, 0, 2}};
    CHECK_FALSE(validate_partition(degenerate_member));
}

TEST_CASE("enumeration counts pinned by the oracle") {
    // frozen from the occupancy-matrix oracle
    const std::vector<std::tuple<int, int, size_t>> expected{
        {1, 1, 1},  {1, 2, 2},  {1, 3, 4},   {2, 1, 2},    {2, 2, 8},
        {2, 3, 34}, {3, 2, 34}, {3, 3, 322}, {4, 3, 3164},
    };
    for (const auto& [nx, ny, want] : expected) {
        CAPTURE(nx);
        CAPTURE(ny);
        CHECK(enumerate_index_partitions(nx, ny).size() == want);
    }
}

TEST_CASE("enumerator matches the independent oracle up to 9 cells") {
    for (int nx = 1; nx <= 9; ++nx) {
        for (int ny = 1; ny <= 9; ++ny) {
            if (nx * ny > 9) continue;
            const auto got = enumerate_index_partitions(nx, ny);
            std::set<oracle::CanonicalPartition> got_set;
            for (const auto& p : got) {
                oracle::CanonicalPartition cp;
                for (const auto& r : p.rects) cp.push_back({r.i0, r.i1, r.j0, r.j1});
                std::sort(cp.begin(), cp.end());
                CHECK(got_set.insert(std::move(cp)).second);  // no duplicates
            }
            CHECK(got_set == oracle::partitions(nx, ny));
        }
    }
}

TEST_CASE("every yielded partition validates") {
    for (const RectPartition& p : enumerate_rect_partitions(3, 3)) CHECK(validate_partition(p));
}

TEST_CASE("enumeration cap") {
    CHECK_THROWS_AS(enumerate_index_partitions(5, 4), CapExceededError);
    EnumerationLimits wide;
    wide.max_cells = 20;
    CHECK(enumerate_index_partitions(4, 4, wide).size() == 70878);
}

TEST_CASE("gridlike partition") {
    const auto single = enumerate_gridlike(Dissection{{0, 1}}, Dissection{{0, 1}});
    REQUIRE(single.rects.size() == 1);
    CHECK(single.rects[0] == Rect{0, 1, 0, 1});

    const auto two = enumerate_gridlike(Dissection{{0, 1, 2}}, Dissection{{0, 2}});
    REQUIRE(two.rects.size() == 2);
    CHECK(two.rects[0] == Rect{0, 1, 0, 2});
    CHECK(two.rects[1] == Rect{1, 2, 0, 2});

    CHECK(enumerate_gridlike(Dissection{{0, 1, 2}}, Dissection{{0, 1, 2}}).rects.size() == 4);
}

TEST_CASE("refine_to_gridlike on the three-piece example") {
    RectPartition p;
    p.target = {0, 2, 0, 2};
    p.rects = {{0, 1, 0, 1}, {1, 2, 0, 1}, {0, 2, 1, 2}};
    const GridRefinement ref = refine_to_gridlike(p);
    CHECK(ref.dx == Dissection{{0, 1, 2}});
    CHECK(ref.dy == Dissection{{0, 1, 2}});
    CHECK(ref.cells[0].size() == 1);
    CHECK(ref.cells[1].size() == 1);
    CHECK(ref.cells[2].size() == 2);  // the wide top member spans two cells
    for (size_t k = 0; k < p.rects.size(); ++k) {
        double area = 0;
        for (const GridIndexRect& c : ref.cells[k])
            area += index_rect_to_rect(c, ref.dx, ref.dy).area();
        CHECK(area == doctest::Approx(p.rects[k].area()).epsilon(1e-12));
    }
}

TEST_CASE("refine_to_gridlike identity on grid-like input") {
    const auto gl = enumerate_gridlike(Dissection{{0, 0.5, 1}}, Dissection{{0, 1}});
    const GridRefinement ref = refine_to_gridlike(gl);
    CHECK(ref.dx == Dissection{{0, 0.5, 1}});
    CHECK(ref.dy == Dissection{{0, 1}});
    for (const auto& cells : ref.cells) CHECK(cells.size() == 1);
}

TEST_CASE("refine_to_gridlike on a pinwheel") {
    RectPartition p;
    p.target = {0, 3, 0, 3};
    p.rects = {{0, 2, 0, 1}, {2, 3, 0, 2}, {1, 3, 2, 3}, {0, 1, 1, 3}, {1, 2, 1, 2}};
    REQUIRE(validate_partition(p));
    const GridRefinement ref = refine_to_gridlike(p);
    CHECK(ref.dx == Dissection{{0, 1, 2, 3}});
    CHECK(ref.dy == Dissection{{0, 1, 2, 3}});
    CHECK(ref.cells[0].size() == 2);
    CHECK(ref.cells[4].size() == 1);  // center cell

    RectPartition bad = p;
    bad.rects.pop_back();  // hole in the middle
    CHECK_THROWS_AS(refine_to_gridlike(bad), InvalidPartitionError);
}

TEST_SUITE_END();
