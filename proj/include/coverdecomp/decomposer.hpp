#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "coverdecomp/boundary.hpp"
#include "coverdecomp/geometry.hpp"

namespace covdec {

// A k-fold covering instance: translates of `polygon` (given by their
// centers) over a rectangular region. The claimed fold is verified by the
// oracle, never assumed.
struct CoverInstance {
    Polygon polygon;
    std::vector<Point> centers;
    Rect region;
    long long fold_target = 0;
};

struct Decomposition {
    std::vector<Point> red_centers;
    std::vector<Point> blue_centers;
    GridParams grid;
};

struct CellKey {
    long long jx = 0, jy = 0;
    bool operator<(const CellKey& o) const {
        return jx < o.jx || (jx == o.jx && jy < o.jy);
    }
    bool operator==(const CellKey& o) const { return jx == o.jx && jy == o.jy; }
};

// Buckets every center into its half-open grid cell
// [j*x, (j+1)*x) x [l*x, (l+1)*x) with x = grid_cell_size(polygon).
std::map<CellKey, PointSet> dualize(const CoverInstance& instance);

// The full pipeline: verify the fold, color the dual centers cell by cell,
// and return the two covering subfamilies. Both families are post-verified
// to cover the region; a post-verification failure is a bug trap.
Decomposition decompose(const CoverInstance& instance);

// Deterministic covering generator: a center lattice dense enough for fold
// k over the region plus a few seeded extra translates; the depth is
// oracle-checked before returning.
CoverInstance generate_covering(const Polygon& s, const Rect& region, long long k,
                                std::uint64_t seed);

// n distinct rational points in the unit square, denominators <= 64.
PointSet gen_points(int n, std::uint64_t seed);

}  // namespace covdec
