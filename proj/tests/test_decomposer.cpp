#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "coverdecomp/decomposer.hpp"
#include "coverdecomp/errors.hpp"
#include "coverdecomp/oracle.hpp"

using namespace covdec;

namespace {

Point pt(long long x, long long y) { return Point{Rat(x), Rat(y)}; }

}  // namespace

TEST_CASE("dualize bucketing") {
    CoverInstance inst;
    inst.polygon = builtin_polygon("square");  // x = 1/2
    inst.region = Rect::make(Rat(0), Rat(1), Rat(0), Rat(1));
    inst.fold_target = 81;
    {
        inst.centers = {pt(0, 0)};
        const auto cells = dualize(inst);
        REQUIRE(cells.size() == 1);
        CHECK(cells.begin()->first == CellKey{0, 0});
    }
    {
        // Cell boundaries are half-open: a center on the seam belongs to the
        // cell on its upper-right side.
        inst.centers = {Point{Rat(1, 2), Rat(1, 2)}, Point{Rat(1, 4), Rat(1, 4)}};
        const auto cells = dualize(inst);
        REQUIRE(cells.size() == 2);
        CHECK(cells.count(CellKey{1, 1}) == 1);
        CHECK(cells.count(CellKey{0, 0}) == 1);
    }
    {
        inst.centers = gen_points(100, 5);
        const auto cells = dualize(inst);
        std::size_t total = 0;
        for (const auto& [key, pts] : cells) total += pts.size();
        CHECK(total == 100);
    }
}

TEST_CASE("generate_covering determinism and contract") {
    const Polygon s = builtin_polygon("square");
    const Rect region = Rect::make(Rat(0), Rat(1), Rat(0), Rat(1));
    const CoverInstance a = generate_covering(s, region, 1, 42);
    const CoverInstance b = generate_covering(s, region, 1, 42);
    CHECK(a.centers == b.centers);
    CHECK(a.fold_target == 1);
    CHECK(coverage_at_least(s, a.centers, region, Closedness::Closed, 1));
    const CoverInstance c = generate_covering(s, region, 1, 43);
    CHECK(a.centers != c.centers);
}

TEST_CASE("decompose splits an 81-fold square covering into two coverings") {
    const Polygon s = builtin_polygon("square");
    const Rect region = Rect::make(Rat(0), Rat(1), Rat(0), Rat(1));
    const CoverInstance inst = generate_covering(s, region, 81, 7);
    const Decomposition d = decompose(inst);
    CHECK(d.grid.cell_side == Rat(1, 2));
    CHECK(d.grid.squares_per_translate == 9);
    CHECK(d.grid.fold_constant == 81);
    // Partition.
    std::vector<Point> merged = d.red_centers;
    merged.insert(merged.end(), d.blue_centers.begin(), d.blue_centers.end());
    std::sort(merged.begin(), merged.end());
    std::vector<Point> centers = inst.centers;
    std::sort(centers.begin(), centers.end());
    CHECK(merged == centers);
    CHECK_FALSE(d.red_centers.empty());
    CHECK_FALSE(d.blue_centers.empty());
    // decompose already post-verifies; re-check one family independently.
    CHECK(coverage_at_least(s, d.red_centers, region, Closedness::Closed, 1));
    CHECK(coverage_at_least(s, d.blue_centers, region, Closedness::Closed, 1));
}

TEST_CASE("decompose handles duplicate centers round-robin") {
    const Polygon s = builtin_polygon("square");
    const Rect region = Rect::make(Rat(0), Rat(1), Rat(0), Rat(1));
    CoverInstance inst = generate_covering(s, region, 81, 11);
    // Duplicate a few centers; they only add coverage.
    inst.centers.push_back(inst.centers[0]);
    inst.centers.push_back(inst.centers[0]);
    inst.centers.push_back(inst.centers[1]);
    const Decomposition d = decompose(inst);
    std::vector<Point> merged = d.red_centers;
    merged.insert(merged.end(), d.blue_centers.begin(), d.blue_centers.end());
    std::sort(merged.begin(), merged.end());
    std::vector<Point> centers = inst.centers;
    std::sort(centers.begin(), centers.end());
    CHECK(merged == centers);
}

TEST_CASE("decompose on a degenerate single-point region") {
    const Polygon s = builtin_polygon("square");
    const Rect region = Rect::make(Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2));
    const CoverInstance inst = generate_covering(s, region, 81, 3);
    const Decomposition d = decompose(inst);
    CHECK(coverage_at_least(s, d.red_centers, region, Closedness::Closed, 1));
    CHECK(coverage_at_least(s, d.blue_centers, region, Closedness::Closed, 1));
}

TEST_CASE("decompose rejects insufficient folds") {
    const Polygon s = builtin_polygon("square");
    const Rect region = Rect::make(Rat(0), Rat(1), Rat(0), Rat(1));
    {
        // fold_target below 9*k'.
        CoverInstance inst = generate_covering(s, region, 81, 5);
        inst.fold_target = 80;
        CHECK_THROWS_AS(decompose(inst), InsufficientFold);
    }
    {
        // Claimed fold not actually achieved.
        CoverInstance inst;
        inst.polygon = s;
        inst.region = region;
        inst.fold_target = 81;
        inst.centers = {Point{Rat(1, 2), Rat(1, 2)}, pt(0, 0), pt(1, 1)};
        CHECK_THROWS_AS(decompose(inst), InsufficientFold);
    }
}

TEST_CASE("translates cut grid cells like wedges") {
    // For every translate overlapping a cell partially, some wedge placement
    // produces the same trace inside the cell; full or empty overlaps are
    // realized by far-away placements.
    const Polygon s = builtin_polygon("square");
    const Rat x = grid_cell_size(s);
    const Rect cell = Rect::make(Rat(0), x, Rat(0), x);
    for (const Point& center :
         {Point{Rat(1, 3), Rat(1, 5)}, Point{Rat(-1, 4), Rat(3, 4)}, Point{Rat(7, 8), Rat(7, 8)},
          Point{Rat(1, 4), Rat(1, 4)}, Point{Rat(2), Rat(2)}}) {
        std::vector<WedgePlacement> candidates;
        for (int i = 1; i <= s.side_count(); ++i) {
            const WedgeTemplate t = wedge_of_vertex(s, i, Closedness::Closed);
            // Apex at the translate's vertex i.
            const Point off{center.x - s.centroid().x, center.y - s.centroid().y};
            candidates.push_back(WedgePlacement{
                t, Point{s.vertex(i).x + off.x, s.vertex(i).y + off.y}});
            // Far placements realize the full and empty traces.
            candidates.push_back(WedgePlacement{t, Point{Rat(-100), Rat(-100)}});
            candidates.push_back(WedgePlacement{t, Point{Rat(100), Rat(100)}});
        }
        bool matched = false;
        for (const WedgePlacement& w : candidates) {
            bool agree = true;
            for (int gx = 0; gx <= 8 && agree; ++gx)
                for (int gy = 0; gy <= 8 && agree; ++gy) {
                    const Point z{cell.x_min + Rat(gx, 16), cell.y_min + Rat(gy, 16)};
                    if (polygon_contains(s, center, z, Closedness::Closed) !=
                        wedge_contains(w, z))
                        agree = false;
                }
            if (agree) { matched = true; break; }
        }
        CHECK(matched);
    }
}

TEST_CASE("gen_points is deterministic, distinct, in the unit square") {
    const PointSet a = gen_points(50, 99);
    const PointSet b = gen_points(50, 99);
    CHECK(a == b);
    CHECK(a.size() == 50);
    std::set<Point> dedup(a.begin(), a.end());
    CHECK(dedup.size() == 50);
    for (const Point& p : a) {
        CHECK(p.x >= Rat(0));
        CHECK(p.x <= Rat(1));
        CHECK(p.y >= Rat(0));
        CHECK(p.y <= Rat(1));
        CHECK(p.x.den() <= 64);
        CHECK(p.y.den() <= 64);
    }
}
